#include "qstirl/det_tuples.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qstirl {

namespace {

std::size_t idx(long i) { return static_cast<std::size_t>(i); }

long repeat_count_beyond(const RGWord& w, std::size_t cut) {
  long count = 0;
  for (std::size_t r : nlrm(w.word())) {
    if (r > cut) ++count;
  }
  return count;
}

}  // namespace

bool is_valid(const DetTuple& t) {
  if (t.n < 0 || t.s < 0) return false;
  const std::size_t size = idx(t.n + 1);
  if (t.sigma.size() != size || t.words.size() != size) return false;
  std::vector<int> sorted = t.sigma;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < size; ++i) {
    if (sorted[i] != static_cast<int>(i)) return false;
  }
  for (std::size_t i = 0; i < size; ++i) {
    const long target_len = t.s + static_cast<long>(i) + t.sigma[i];
    const long target_max = t.s + t.sigma[i];
    if (static_cast<long>(t.words[i].size()) != target_len || t.words[i].max_entry() != target_max) return false;
  }
  return true;
}

std::vector<int> repeat_counts(const DetTuple& t) {
  std::vector<int> a;
  for (std::size_t i = 0; i < t.words.size(); ++i) {
    a.push_back(static_cast<int>(repeat_count_beyond(t.words[i], idx(t.s) + i)));
  }
  return a;
}

DetClass det_classify(const DetTuple& t) {
  std::vector<int> a = repeat_counts(t);
  std::sort(a.begin(), a.end());
  return std::adjacent_find(a.begin(), a.end()) == a.end() ? DetClass::T1 : DetClass::T2;
}

DetTuple det_involution(const DetTuple& t) {
  std::vector<int> a = repeat_counts(t);
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t k = j + 1; k < a.size(); ++k) {
      if (a[j] != a[k]) continue;
      DetTuple out = t;
      std::swap(out.sigma[j], out.sigma[k]);
      const std::size_t cut_j = idx(t.s) + j;
      const std::size_t cut_k = idx(t.s) + k;
      const Word& wj = t.words[j].word();
      const Word& wk = t.words[k].word();
      out.words[j] = RGWord(wj.prefix(cut_j).concat(wk.suffix_from(cut_k)));
      out.words[k] = RGWord(wk.prefix(cut_k).concat(wj.suffix_from(cut_j)));
      return out;
    }
  }
  throw std::invalid_argument("det_involution applied to a T1 tuple");
}

int permutation_sign(const std::vector<int>& sigma) {
  int sign = 1;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = i + 1; j < sigma.size(); ++j) {
      if (sigma[i] > sigma[j]) sign = -sign;
    }
  }
  return sign;
}

QPoly det_weight(const DetTuple& t) {
  long e = 0;
  for (const auto& w : t.words) e += wt_exponent(w);
  return QPoly::monomial(static_cast<std::size_t>(e));
}

QPoly det_signed_weight(const DetTuple& t) { return det_weight(t).scaled(permutation_sign(t.sigma)); }

std::vector<DetTuple> enumerate_det_tuples(long n, long s) {
  if (n < 0 || s < 0 || n > 2 || s > 2) {
    throw std::invalid_argument("enumerate_det_tuples is limited to 0 <= n <= 2, 0 <= s <= 2");
  }
  std::vector<DetTuple> out;
  std::vector<int> sigma(idx(n + 1));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::vector<std::vector<RGWord>> choices;
    bool empty = false;
    for (long i = 0; i <= n; ++i) {
      long sg = sigma[idx(i)];
      choices.push_back(enumerate_rg(idx(s + i + sg), static_cast<int>(s + sg)));
      empty = empty || choices.back().empty();
    }
    if (empty) continue;
    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
      DetTuple t{n, s, sigma, {}};
      for (std::size_t i = 0; i < choices.size(); ++i) t.words.push_back(choices[i][pick[i]]);
      out.push_back(std::move(t));
      std::size_t i = pick.size();
      while (i > 0 && pick[i - 1] + 1 == choices[i - 1].size()) {
        pick[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
      ++pick[i - 1];
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::string to_string(const DetTuple& t) {
  std::ostringstream os;
  os << "sigma=(";
  for (std::size_t i = 0; i < t.sigma.size(); ++i) os << (i ? " " : "") << t.sigma[i];
  os << ") w=(";
  for (std::size_t i = 0; i < t.words.size(); ++i) os << (i ? " " : "") << to_string(t.words[i]);
  os << ')';
  return os.str();
}

Certificate det_certificate(const DetTuple& t) {
  Certificate cert;
  cert.witness = "det_involution";
  cert.input = to_string(t);
  cert.input_weight = det_signed_weight(t);
  cert.check("valid", is_valid(t));
  std::vector<int> a = repeat_counts(t);
  bool bounds = true;
  for (std::size_t i = 0; i < a.size(); ++i) bounds = bounds && a[i] <= std::min<int>(static_cast<int>(i), t.sigma[i]);
  cert.check("repeat_bound", bounds);
  if (det_classify(t) == DetClass::T1) {
    cert.output = "T1";
    cert.output_weight = cert.input_weight;
    bool identity = true;
    for (std::size_t i = 0; i < t.sigma.size(); ++i) {
      identity = identity && t.sigma[i] == static_cast<int>(i) && a[i] == static_cast<int>(i);
    }
    cert.check("t1_identity_permutation", identity);
    return cert;
  }
  DetTuple image = det_involution(t);
  cert.output = to_string(image);
  cert.output_weight = det_signed_weight(image);
  cert.check("image_valid", is_valid(image));
  cert.check("image_in_t2", det_classify(image) == DetClass::T2);
  cert.check("repeat_counts_preserved", repeat_counts(image) == a);
  cert.check("involution", det_involution(image) == t);
  cert.check("sign_reversed", permutation_sign(image.sigma) == -permutation_sign(t.sigma));
  cert.check("weight_preserved", det_weight(image) == det_weight(t));
  return cert;
}

DetSweep det_sweep(long n, long s, std::size_t certificate_limit) {
  DetSweep sweep;
  sweep.summary.witness = "det_involution";
  for (const DetTuple& t : enumerate_det_tuples(n, s)) {
    Certificate cert = det_certificate(t);
    ++sweep.summary.elements;
    if (!cert.ok()) ++sweep.summary.failures;
    sweep.summary.total_weight += cert.input_weight;
    if (cert.output == "T1") {
      ++sweep.summary.fixed;
      sweep.summary.fixed_weight += cert.input_weight;
      sweep.t1_weight += cert.input_weight;
    } else {
      sweep.t2_weight += cert.input_weight;
    }
    if (sweep.summary.certificates.size() < certificate_limit) sweep.summary.certificates.push_back(std::move(cert));
  }
  return sweep;
}

}  // namespace qstirl
