#include "qstirl/blocks.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "qstirl/qanalog.hpp"
#include "qstirl/stirling.hpp"

namespace qstirl {

void validate(const BlockParams& p) {
  if (!(0 <= p.s && p.s < p.r && p.r <= p.n)) {
    throw std::invalid_argument("block parameters need 0 <= s < r <= n, got n=" + std::to_string(p.n) +
                                " r=" + std::to_string(p.r) + " s=" + std::to_string(p.s));
  }
}

std::vector<RGWord> Block::members() const {
  std::vector<RGWord> out;
  for (int j = low; j <= high; ++j) out.emplace_back(prefix.word().concat(Word{j}).concat(tail));
  return out;
}

std::string to_string(const Block& b) {
  std::string kind = b.kind == Block::Kind::Pivot ? "pivot" : "range";
  return kind + " x=" + to_string(b.prefix) + " j=" + std::to_string(b.low) + ".." + std::to_string(b.high) +
         " y=" + to_string(b.tail) + " k=" + std::to_string(b.k);
}

Block block_of(const RGWord& w, const BlockParams& p) {
  validate(p);
  if (static_cast<long>(w.size()) != p.n || w.max_entry() < p.r) {
    throw std::invalid_argument("block_of: " + to_string(w) + " is outside the block domain");
  }
  // The last letter above s splits w as x j y.
  std::size_t pos = w.size();
  while (pos > 0 && w.at(pos) <= p.s) --pos;
  Block b;
  b.prefix = RGWord(w.word().prefix(pos - 1));
  b.tail = w.word().suffix_from(pos);
  b.k = w.max_entry();
  if (b.prefix.max_entry() == b.k - 1) {
    b.kind = Block::Kind::Pivot;
    b.low = b.high = b.k;
  } else {
    b.kind = Block::Kind::Range;
    b.low = static_cast<int>(p.s) + 1;
    b.high = b.k;
  }
  return b;
}

std::vector<Block> blocks(const BlockParams& p) {
  validate(p);
  std::vector<Block> out;
  for (long k = p.r; k <= p.n; ++k) {
    // Each block is emitted at its lexicographically least member.
    for_each_rg(static_cast<std::size_t>(p.n), static_cast<int>(k), [&](const RGWord& w) {
      Block b = block_of(w, p);
      if (b.members().front() == w) out.push_back(std::move(b));
    });
  }
  return out;
}

QPoly f_weight(const RGWord& w, const BlockParams& p) {
  const long k = w.max_entry();
  return neg_q_power(p.s, k - p.r) * q_falling(k - p.s - 1, k - p.r) * wt(w);
}

QPoly block_f_weight(const Block& b, const BlockParams& p) {
  QPoly sum;
  for (const RGWord& w : b.members()) sum += f_weight(w, p);
  return sum;
}

BlockMatching match_blocks(const BlockParams& p) {
  std::vector<Block> all = blocks(p);
  std::map<std::pair<RGWord, Word>, const Block*> ranges;
  for (const Block& b : all) {
    if (b.kind == Block::Kind::Range) ranges.emplace(std::make_pair(b.prefix, b.tail), &b);
  }
  BlockMatching matching;
  std::set<std::pair<RGWord, Word>> used;
  for (const Block& b : all) {
    if (b.kind != Block::Kind::Pivot) continue;
    if (b.k == p.r) {
      matching.unmatched.push_back(b);
      continue;
    }
    auto key = std::make_pair(b.prefix, b.tail);
    auto it = ranges.find(key);
    if (it == ranges.end()) throw std::logic_error("pivot block " + to_string(b) + " has no partner");
    matching.pairs.emplace_back(b, *it->second);
    used.insert(key);
  }
  if (used.size() != ranges.size()) throw std::logic_error("some range blocks were left unmatched");
  return matching;
}

QPoly unmatched_closed_form(const BlockParams& p) {
  validate(p);
  QPoly sum;
  for (long i = p.r - 1; i <= p.n - 1; ++i) {
    sum += stirling_rec(i, p.r - 1) * q_int(p.s).pow(static_cast<std::size_t>(p.n - 1 - i));
  }
  return sum;
}

WitnessSummary blocks_sweep(const BlockParams& p, std::size_t certificate_limit) {
  WitnessSummary summary;
  summary.witness = "block_matching";
  std::vector<Block> all = blocks(p);

  // Partition check: every word of S lies in exactly one listed block.
  std::map<RGWord, int> coverage;
  for (const Block& b : all) {
    for (const RGWord& w : b.members()) ++coverage[w];
  }
  std::size_t s_size = 0;
  bool partition = true;
  for (long k = p.r; k <= p.n; ++k) {
    for_each_rg(static_cast<std::size_t>(p.n), static_cast<int>(k), [&](const RGWord& w) {
      ++s_size;
      auto it = coverage.find(w);
      partition = partition && it != coverage.end() && it->second == 1;
      summary.total_weight += f_weight(w, p);
    });
  }
  partition = partition && coverage.size() == s_size;

  BlockMatching matching = match_blocks(p);
  summary.elements = all.size();
  for (const auto& [pivot, range] : matching.pairs) {
    Certificate cert;
    cert.witness = "block_matching";
    cert.input = to_string(pivot);
    cert.output = to_string(range);
    cert.input_weight = block_f_weight(pivot, p);
    cert.output_weight = block_f_weight(range, p);
    cert.check("pivot_singleton", pivot.is_singleton());
    cert.check("partner_shape", range.k == pivot.k - 1 && range.low == p.s + 1 && range.high == pivot.k - 1);
    cert.check("cancellation", cert.input_weight + cert.output_weight == QPoly{});
    if (!cert.ok()) ++summary.failures;
    if (summary.certificates.size() < certificate_limit) summary.certificates.push_back(std::move(cert));
  }
  bool unmatched_shape = true;
  for (const Block& b : matching.unmatched) {
    ++summary.fixed;
    summary.fixed_weight += block_f_weight(b, p);
    unmatched_shape = unmatched_shape && b.is_singleton() && b.k == p.r && b.prefix.max_entry() == p.r - 1 &&
                      b.tail.max_letter() <= p.s;
  }
  Certificate global;
  global.witness = "block_partition";
  global.input = "n=" + std::to_string(p.n) + " r=" + std::to_string(p.r) + " s=" + std::to_string(p.s);
  global.output = std::to_string(matching.pairs.size()) + " pairs, " + std::to_string(matching.unmatched.size()) +
                  " unmatched";
  global.input_weight = summary.total_weight;
  global.output_weight = summary.fixed_weight;
  global.check("partition", partition);
  global.check("pairs_cover_all_other_blocks", 2 * matching.pairs.size() + matching.unmatched.size() == all.size());
  global.check("unmatched_shape", unmatched_shape);
  global.check("unmatched_closed_form", summary.fixed_weight == unmatched_closed_form(p));
  global.check("total_equals_unmatched", summary.total_weight == summary.fixed_weight);
  if (!global.ok()) ++summary.failures;
  summary.certificates.insert(summary.certificates.begin(), std::move(global));
  return summary;
}

}  // namespace qstirl
