#include "qstirl/marked.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qstirl {

namespace {

bool contains(const std::vector<std::size_t>& sorted, std::size_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

void insert_sorted(std::vector<std::size_t>& sorted, std::size_t x) {
  sorted.insert(std::lower_bound(sorted.begin(), sorted.end(), x), x);
}

void erase_sorted(std::vector<std::size_t>& sorted, std::size_t x) {
  sorted.erase(std::lower_bound(sorted.begin(), sorted.end(), x));
}

bool is_strictly_increasing(const std::vector<std::size_t>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

QPoly signed_monomial(long exponent, bool negative) {
  return QPoly::monomial(static_cast<std::size_t>(exponent), negative ? -1 : 1);
}

std::string positions_to_string(const std::vector<std::size_t>& positions) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < positions.size(); ++i) os << (i ? "," : "") << positions[i];
  os << '}';
  return os.str();
}

// Prefix maximum of the letters strictly before 1-based position r.
Letter prefix_max(const std::vector<Letter>& letters, std::size_t r) {
  Letter m = 0;
  for (std::size_t i = 0; i + 1 < r; ++i) m = std::max(m, letters[i]);
  return m;
}

}  // namespace

bool is_valid(const MarkedPair& p) {
  if (!is_strictly_increasing(p.marked)) return false;
  auto positions = nlrm(p.u.word());
  return std::all_of(p.marked.begin(), p.marked.end(),
                     [&](std::size_t r) { return std::binary_search(positions.begin(), positions.end(), r); });
}

QPoly signed_weight(const MarkedPair& p) {
  const long marks = static_cast<long>(p.marked.size());
  return signed_monomial(marks + wt_exponent(p.u), marks % 2 == 1);
}

std::string to_string(const MarkedPair& p) { return "u=" + to_string(p.u) + " P=" + positions_to_string(p.marked); }

std::optional<MarkedPair> prelim_involution(const MarkedPair& p) {
  if (p.u.empty()) throw std::invalid_argument("prelim_involution is undefined for n = k = 0");
  for (std::size_t r : nlrm(p.u.word())) {
    const Letter b = bound(p.u.word(), r);
    const Letter letter = p.u.at(r);
    const bool in_p = contains(p.marked, r);
    if (in_p && letter <= b - 1) {
      MarkedPair out{RGWord(p.u.word().with_letter(r, letter + 1)), p.marked};
      erase_sorted(out.marked, r);
      return out;
    }
    if (!in_p && letter >= 2) {
      MarkedPair out{RGWord(p.u.word().with_letter(r, letter - 1)), p.marked};
      insert_sorted(out.marked, r);
      return out;
    }
  }
  return std::nullopt;
}

bool prelim_fixed_characterization(const MarkedPair& p) {
  for (std::size_t r : nlrm(p.u.word())) {
    const bool in_p = contains(p.marked, r);
    const Letter letter = p.u.at(r);
    if (in_p && letter != bound(p.u.word(), r)) return false;
    if (!in_p && letter != 1) return false;
  }
  return true;
}

std::vector<MarkedPair> enumerate_marked_pairs(std::size_t n, int k) {
  std::vector<MarkedPair> out;
  for_each_rg(n, k, [&](const RGWord& u) {
    auto positions = nlrm(u.word());
    const std::size_t subsets = std::size_t{1} << positions.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      MarkedPair p{u, {}};
      for (std::size_t b = 0; b < positions.size(); ++b) {
        if (mask & (std::size_t{1} << b)) p.marked.push_back(positions[b]);
      }
      out.push_back(std::move(p));
    }
  });
  return out;
}

Certificate prelim_certificate(const MarkedPair& p) {
  Certificate cert;
  cert.witness = "prelim_involution";
  cert.input = to_string(p);
  cert.input_weight = signed_weight(p);
  cert.check("valid", is_valid(p));
  auto image = prelim_involution(p);
  if (!image) {
    cert.output = "fixed";
    cert.output_weight = cert.input_weight;
    cert.check("fixed_characterization", prelim_fixed_characterization(p));
    return cert;
  }
  cert.output = to_string(*image);
  cert.output_weight = signed_weight(*image);
  cert.check("not_characterized_fixed", !prelim_fixed_characterization(p));
  cert.check("image_valid", is_valid(*image) && image->u.max_entry() == p.u.max_entry());
  cert.check("involution", prelim_involution(*image) == p);
  cert.check("parity_flip", (image->marked.size() + p.marked.size()) % 2 == 1);
  cert.check("sign_reversed_weight_preserved", cert.output_weight == -cert.input_weight);
  return cert;
}

WitnessSummary prelim_sweep(std::size_t n, int k, std::size_t certificate_limit) {
  WitnessSummary summary;
  summary.witness = "prelim_involution";
  for (const MarkedPair& p : enumerate_marked_pairs(n, k)) {
    Certificate cert = prelim_certificate(p);
    ++summary.elements;
    if (!cert.ok()) ++summary.failures;
    summary.total_weight += cert.input_weight;
    if (cert.output == "fixed") {
      ++summary.fixed;
      summary.fixed_weight += cert.input_weight;
    }
    if (summary.certificates.size() < certificate_limit) summary.certificates.push_back(std::move(cert));
  }
  return summary;
}

RGWord support_word(const MarkedTriple& t) {
  std::vector<Letter> support;
  for (Letter a : t.letters) {
    if (a != 0) support.push_back(a);
  }
  return RGWord(Word(std::move(support)));
}

std::vector<std::size_t> nlrm_positions(const MarkedTriple& t) {
  std::vector<std::size_t> out;
  Letter max_so_far = 0;
  for (std::size_t i = 0; i < t.letters.size(); ++i) {
    const Letter a = t.letters[i];
    if (a == 0) continue;
    if (a <= max_so_far) out.push_back(i + 1);
    max_so_far = std::max(max_so_far, a);
  }
  return out;
}

bool is_valid(const MarkedTriple& t, int k) {
  for (Letter a : t.letters) {
    if (a < 0 || a > k) return false;
  }
  std::vector<Letter> support;
  for (Letter a : t.letters) {
    if (a != 0) support.push_back(a);
  }
  if (!is_restricted_growth(Word(support))) return false;
  if (RGWord(Word(support)).max_entry() != k) return false;
  if (!is_strictly_increasing(t.marked)) return false;
  auto positions = nlrm_positions(t);
  return std::all_of(t.marked.begin(), t.marked.end(),
                     [&](std::size_t r) { return std::binary_search(positions.begin(), positions.end(), r); });
}

QPoly signed_weight(const MarkedTriple& t) {
  const RGWord u = support_word(t);
  const long j = static_cast<long>(u.size());
  const long k = u.max_entry();
  const long marks = static_cast<long>(t.marked.size());
  return signed_monomial(marks + wt_exponent(u), (j - k - marks) % 2 != 0);
}

std::string to_string(const MarkedTriple& t) {
  std::string w;
  bool digits = std::all_of(t.letters.begin(), t.letters.end(), [](Letter a) { return a <= 9; });
  for (std::size_t i = 0; i < t.letters.size(); ++i) {
    if (!digits && i > 0) w += ',';
    w += std::to_string(t.letters[i]);
  }
  if (w.empty()) w = "ε";
  return "w=" + w + " Q=" + positions_to_string(t.marked);
}

std::optional<MarkedTriple> carlitz2_stage1(const MarkedTriple& t) {
  for (std::size_t r : nlrm_positions(t)) {
    const Letter letter = t.letters[r - 1];
    const bool in_q = contains(t.marked, r);
    if (!in_q && letter >= 2) {
      MarkedTriple out = t;
      out.letters[r - 1] = letter - 1;
      insert_sorted(out.marked, r);
      return out;
    }
    if (in_q && letter >= 1 && letter <= prefix_max(t.letters, r) - 1) {
      MarkedTriple out = t;
      out.letters[r - 1] = letter + 1;
      erase_sorted(out.marked, r);
      return out;
    }
  }
  return std::nullopt;
}

std::optional<MarkedTriple> carlitz2_stage2(const MarkedTriple& t) {
  auto first = std::find_if(t.letters.begin(), t.letters.end(), [](Letter a) { return a != 0; });
  if (first == t.letters.end()) return std::nullopt;
  const auto a1 = static_cast<std::size_t>(first - t.letters.begin()) + 1;
  for (std::size_t i = a1 + 1; i <= t.letters.size(); ++i) {
    const Letter letter = t.letters[i - 1];
    if (letter == 0 || (letter == 1 && !contains(t.marked, i))) {
      MarkedTriple out = t;
      out.letters[i - 1] = 1 - letter;
      return out;
    }
  }
  return std::nullopt;
}

std::optional<TripleImage> carlitz2_involutions(const MarkedTriple& t) {
  if (auto image = carlitz2_stage1(t)) return TripleImage{std::move(*image), 1};
  if (auto image = carlitz2_stage2(t)) return TripleImage{std::move(*image), 2};
  return std::nullopt;
}

bool carlitz2_fixed_characterization(const MarkedTriple& t) {
  if (!std::is_sorted(t.letters.begin(), t.letters.end())) return false;
  return t.marked == nlrm_positions(t);
}

std::vector<MarkedTriple> enumerate_marked_triples(std::size_t n, int k) {
  std::vector<MarkedTriple> out;
  const std::size_t subsets = std::size_t{1} << n;
  for (std::size_t a_mask = 0; a_mask < subsets; ++a_mask) {
    std::vector<std::size_t> a_positions;
    for (std::size_t b = 0; b < n; ++b) {
      if (a_mask & (std::size_t{1} << b)) a_positions.push_back(b + 1);
    }
    for_each_rg(a_positions.size(), k, [&](const RGWord& u) {
      MarkedTriple base{std::vector<Letter>(n, 0), {}};
      for (std::size_t r = 0; r < a_positions.size(); ++r) base.letters[a_positions[r] - 1] = u.letters()[r];
      auto positions = nlrm_positions(base);
      const std::size_t marks = std::size_t{1} << positions.size();
      for (std::size_t mask = 0; mask < marks; ++mask) {
        MarkedTriple t = base;
        for (std::size_t b = 0; b < positions.size(); ++b) {
          if (mask & (std::size_t{1} << b)) t.marked.push_back(positions[b]);
        }
        out.push_back(std::move(t));
      }
    });
  }
  return out;
}

Certificate carlitz2_certificate(const MarkedTriple& t) {
  Certificate cert;
  cert.witness = "carlitz2_involutions";
  cert.input = to_string(t);
  cert.input_weight = signed_weight(t);
  const int k = support_word(t).max_entry();
  cert.check("valid", is_valid(t, k));
  auto image = carlitz2_involutions(t);
  if (!image) {
    cert.output = "fixed";
    cert.output_weight = cert.input_weight;
    cert.check("fixed_characterization", carlitz2_fixed_characterization(t));
    cert.check("fixed_weight_positive", !cert.input_weight.is_zero() && cert.input_weight.coefficients().back() > 0);
    return cert;
  }
  cert.output = to_string(image->image) + " stage=" + std::to_string(image->stage);
  cert.output_weight = signed_weight(image->image);
  cert.check("not_characterized_fixed", !carlitz2_fixed_characterization(t));
  cert.check("image_valid", is_valid(image->image, k));
  auto back = carlitz2_involutions(image->image);
  cert.check("involution", back && back->image == t && back->stage == image->stage);
  cert.check("sign_reversed_weight_preserved", cert.output_weight == -cert.input_weight);
  return cert;
}

WitnessSummary carlitz2_sweep(std::size_t n, int k, std::size_t certificate_limit) {
  WitnessSummary summary;
  summary.witness = "carlitz2_involutions";
  for (const MarkedTriple& t : enumerate_marked_triples(n, k)) {
    Certificate cert = carlitz2_certificate(t);
    ++summary.elements;
    if (!cert.ok()) ++summary.failures;
    summary.total_weight += cert.input_weight;
    if (cert.output == "fixed") {
      ++summary.fixed;
      summary.fixed_weight += cert.input_weight;
    }
    if (summary.certificates.size() < certificate_limit) summary.certificates.push_back(std::move(cert));
  }
  return summary;
}

}  // namespace qstirl
