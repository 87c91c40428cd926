#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qstirl/certificate.hpp"
#include "qstirl/qpoly.hpp"
#include "qstirl/rgword.hpp"

namespace qstirl {

/// (u, P) with u an RG-word and P a set of its non-left-to-right-maximum
/// positions. Signed weight (-q)^|P| wt(u).
struct MarkedPair {
  RGWord u;
  std::vector<std::size_t> marked;  // ascending, 1-based

  friend bool operator==(const MarkedPair&, const MarkedPair&) = default;
};

bool is_valid(const MarkedPair& p);
QPoly signed_weight(const MarkedPair& p);
std::string to_string(const MarkedPair& p);

/// The sign-reversing involution on marked pairs. At the smallest r in
/// NLRM(u) with (r in P and u_r <= b(r) - 1) or (r not in P and u_r >= 2)
/// it unmarks r and raises u_r, or marks r and lowers u_r. std::nullopt
/// marks a fixed point. Throws std::invalid_argument for the empty word.
std::optional<MarkedPair> prelim_involution(const MarkedPair& p);

/// Fixed-point characterization: every r in NLRM(u) has either r in P and
/// u_r = b(r), or r not in P and u_r = 1.
bool prelim_fixed_characterization(const MarkedPair& p);

std::vector<MarkedPair> enumerate_marked_pairs(std::size_t n, int k);

Certificate prelim_certificate(const MarkedPair& p);
WitnessSummary prelim_sweep(std::size_t n, int k, std::size_t certificate_limit = 0);

/// (w, Q): w has length n over {0} u [1, k]; deleting zeros gives u in
/// RG(j, k); Q is a set of positions of w holding non-left-to-right maxima
/// of u. Signed weight (-1)^(j-k-|Q|) q^|Q| wt(u).
struct MarkedTriple {
  std::vector<Letter> letters;
  std::vector<std::size_t> marked;  // ascending, 1-based positions in w

  friend bool operator==(const MarkedTriple&, const MarkedTriple&) = default;
};

/// Nonzero letters of w as an RG-word. Throws if they are not restricted growth.
RGWord support_word(const MarkedTriple& t);
/// 1-based positions of w holding nonzero non-left-to-right maxima.
std::vector<std::size_t> nlrm_positions(const MarkedTriple& t);
bool is_valid(const MarkedTriple& t, int k);
QPoly signed_weight(const MarkedTriple& t);
std::string to_string(const MarkedTriple& t);

/// First stage: the marked-pair involution transported to w.
std::optional<MarkedTriple> carlitz2_stage1(const MarkedTriple& t);
/// Second stage, on first-stage fixed points: toggles w_i <-> 1 - w_i at the
/// smallest i > a_1 with w_i = 0, or w_i = 1 and i not in Q.
std::optional<MarkedTriple> carlitz2_stage2(const MarkedTriple& t);

struct TripleImage {
  MarkedTriple image;
  int stage;  // 1 or 2
};

/// Stage 1 where it applies, else stage 2; std::nullopt for a fixed point.
std::optional<TripleImage> carlitz2_involutions(const MarkedTriple& t);

/// w weakly increasing and Q exactly the nonzero non-left-to-right maxima.
bool carlitz2_fixed_characterization(const MarkedTriple& t);

/// All triples for n and k: subsets A of [n], u in RG(|A|, k), P in NLRM(u).
std::vector<MarkedTriple> enumerate_marked_triples(std::size_t n, int k);

Certificate carlitz2_certificate(const MarkedTriple& t);
WitnessSummary carlitz2_sweep(std::size_t n, int k, std::size_t certificate_limit = 0);

}  // namespace qstirl
