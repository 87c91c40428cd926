#include <gtest/gtest.h>

#include <map>

#include "qstirl/blocks.hpp"
#include "qstirl/identities.hpp"
#include "qstirl/stirling.hpp"

using namespace qstirl;

namespace {
QPoly lhs_sum(const BlockParams& p) {
  QPoly total;
  for (long k = p.r; k <= p.n; ++k)
    for_each_rg(static_cast<std::size_t>(p.n), static_cast<int>(k), [&](const RGWord& w) { total += f_weight(w, p); });
  return total;
}
}  // namespace

TEST(Blocks, Validation) {
  EXPECT_THROW(validate({3, 2, 2}), std::invalid_argument);
  EXPECT_THROW(validate({3, 4, 1}), std::invalid_argument);
  EXPECT_THROW(validate({3, 1, -1}), std::invalid_argument);
  EXPECT_NO_THROW(validate({3, 1, 0}));
}

TEST(Blocks, SmallCases) {
  BlockParams a{2, 1, 0};
  EXPECT_TRUE(lhs_sum(a).is_zero());
  EXPECT_TRUE(unmatched_closed_form(a).is_zero());
  BlockParams b{3, 2, 1};
  EXPECT_EQ(lhs_sum(b), QPoly{2});
  EXPECT_EQ(unmatched_closed_form(b), QPoly{2});
  QPoly unmatched;
  for (const auto& blk : match_blocks(b).unmatched) unmatched += block_f_weight(blk, b);
  EXPECT_EQ(unmatched, QPoly{2});
}

TEST(Blocks, BlockShapes) {
  BlockParams p{4, 2, 1};
  Block b = block_of(RGWord::parse("1213"), p);
  EXPECT_EQ(b.kind, Block::Kind::Pivot);
  EXPECT_EQ(b.prefix, RGWord::parse("121"));
  EXPECT_TRUE(b.tail.empty());
  EXPECT_EQ(b.members(), (std::vector<RGWord>{RGWord::parse("1213")}));
  Block c = block_of(RGWord::parse("1221"), p);
  EXPECT_EQ(c.kind, Block::Kind::Range);
  EXPECT_EQ(c.prefix, RGWord::parse("12"));
  EXPECT_EQ(c.tail, Word{1});
  EXPECT_EQ(c.members(), (std::vector<RGWord>{RGWord::parse("1221")}));
  EXPECT_EQ(c.low, 2);
  EXPECT_EQ(c.high, 2);
}

TEST(Blocks, PartitionAndMatching) {
  for (long n = 1; n <= 7; ++n) {
    for (long r = 1; r <= n; ++r) {
      for (long s = 0; s < r; ++s) {
        BlockParams p{n, r, s};
        std::map<RGWord, int> seen;
        QPoly total;
        for (const auto& b : blocks(p)) {
          EXPECT_EQ(b.members().size(), static_cast<std::size_t>(b.high - b.low + 1));
          for (const auto& w : b.members()) {
            ++seen[w];
            EXPECT_EQ(block_of(w, p), b);
          }
          total += block_f_weight(b, p);
        }
        std::size_t expected = 0;
        for (long k = r; k <= n; ++k) expected += enumerate_rg(static_cast<std::size_t>(n), static_cast<int>(k)).size();
        EXPECT_EQ(seen.size(), expected);
        for (const auto& [w, c] : seen) EXPECT_EQ(c, 1);

        auto m = match_blocks(p);
        for (const auto& [pivot, range] : m.pairs) {
          EXPECT_TRUE((block_f_weight(pivot, p) + block_f_weight(range, p)).is_zero());
          EXPECT_EQ(pivot.kind, Block::Kind::Pivot);
          EXPECT_GT(pivot.k, r);
        }
        QPoly unmatched;
        for (const auto& b : m.unmatched) {
          EXPECT_TRUE(b.is_singleton());
          EXPECT_EQ(b.k, r);
          EXPECT_EQ(b.prefix.max_entry(), r - 1);
          EXPECT_LE(b.tail.max_letter(), s);
          unmatched += block_f_weight(b, p);
        }
        EXPECT_EQ(unmatched, unmatched_closed_form(p));
        EXPECT_EQ(total, unmatched);
        EXPECT_EQ(total, lhs_sum(p));
        EXPECT_TRUE(blocks_sweep(p).ok());
      }
    }
  }
}

TEST(Blocks, AgreesWithIdentityChecker) {
  BlockParams p{4, 2, 1};
  auto rep = check_two_param(4, 2, 1);
  EXPECT_TRUE(rep.equal);
  EXPECT_EQ(std::get<QPoly>(rep.rhs), unmatched_closed_form(p));
  QPoly unmatched;
  for (const auto& b : match_blocks(p).unmatched) unmatched += block_f_weight(b, p);
  EXPECT_EQ(std::get<QPoly>(rep.lhs), unmatched);
}
