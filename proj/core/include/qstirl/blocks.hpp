#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qstirl/certificate.hpp"
#include "qstirl/qpoly.hpp"
#include "qstirl/rgword.hpp"

namespace qstirl {

/// Parameters of the two-parameter alternating identity: 0 <= s < r <= n.
struct BlockParams {
  long n = 0;
  long r = 0;
  long s = 0;
};

/// Throws std::invalid_argument unless 0 <= s < r <= n.
void validate(const BlockParams& p);

/// A class of the equivalence on S = RG(n, r) u ... u RG(n, n). Every member
/// is x j y with y over [1, s] and j > s at position |x| + 1.
///   Pivot: x has max entry k - 1, so the only member is x k y.
///   Range: x has max entry k; the members are x j y for s+1 <= j <= k.
struct Block {
  enum class Kind { Pivot, Range };

  Kind kind = Kind::Range;
  RGWord prefix;  // x
  Word tail;      // y
  int k = 0;      // max entry shared by all members
  int low = 0;    // smallest letter at the pivot position
  int high = 0;   // largest letter at the pivot position

  std::size_t position() const { return prefix.size() + 1; }
  std::vector<RGWord> members() const;
  bool is_singleton() const { return low == high; }

  friend bool operator==(const Block&, const Block&) = default;
};

std::string to_string(const Block& b);

/// The block containing w (which must lie in S).
Block block_of(const RGWord& w, const BlockParams& p);

/// All blocks of S, ordered by k ascending and then by their least member.
std::vector<Block> blocks(const BlockParams& p);

/// f(w) = (-q^s)^(k-r) ([k-s-1]_q)_(k-r) wt(w).
QPoly f_weight(const RGWord& w, const BlockParams& p);
QPoly block_f_weight(const Block& b, const BlockParams& p);

struct BlockMatching {
  /// (Pivot block with k > r, the Range block x j y for s+1 <= j <= k-1).
  std::vector<std::pair<Block, Block>> pairs;
  /// Pivot blocks with k = r.
  std::vector<Block> unmatched;
};

BlockMatching match_blocks(const BlockParams& p);

/// Sum of S_q[i, r-1] [s]_q^(n-1-i) for r-1 <= i <= n-1, with [0]^0 = 1.
QPoly unmatched_closed_form(const BlockParams& p);

/// Checks that the blocks partition S, each matched pair cancels, and the
/// unmatched blocks are x r y singletons whose weights sum to the closed form.
WitnessSummary blocks_sweep(const BlockParams& p, std::size_t certificate_limit = 0);

}  // namespace qstirl
