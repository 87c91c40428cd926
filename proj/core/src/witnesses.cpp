#include "qstirl/witnesses.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qstirl {

namespace {

std::string positions_to_string(std::span<const std::size_t> positions) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i > 0) os << ',';
    os << positions[i];
  }
  os << '}';
  return os.str();
}

std::size_t first_occurrence(const Word& w, Letter a) {
  auto letters = w.letters();
  auto it = std::find(letters.begin(), letters.end(), a);
  if (it == letters.end()) {
    throw std::invalid_argument("letter " + std::to_string(a) + " does not occur in " + to_string(w));
  }
  return static_cast<std::size_t>(it - letters.begin()) + 1;
}

TailSplit split_tail(const Word& tail, Letter threshold) {
  TailSplit split;
  split.length = tail.size();
  std::vector<Letter> high;
  std::vector<Letter> low;
  auto letters = tail.letters();
  for (std::size_t p = 0; p < letters.size(); ++p) {
    if (letters[p] > threshold) {
      split.high_positions.push_back(p + 1);
      high.push_back(letters[p] - threshold);
    } else {
      low.push_back(letters[p]);
    }
  }
  split.high_shifted = RGWord(Word(std::move(high)));
  split.low_letters = Word(std::move(low));
  return split;
}

Word merge_tail(const TailSplit& split, Letter threshold) {
  if (split.high_positions.size() != split.high_shifted.size() ||
      split.high_positions.size() + split.low_letters.size() != split.length) {
    throw std::invalid_argument("tail split components do not fit the tail length");
  }
  std::vector<Letter> out(split.length, 0);
  for (std::size_t h = 0; h < split.high_positions.size(); ++h) {
    std::size_t p = split.high_positions[h];
    if (p < 1 || p > split.length || out[p - 1] != 0) {
      throw std::invalid_argument("bad high position in tail split");
    }
    out[p - 1] = split.high_shifted.letters()[h] + threshold;
  }
  std::size_t next_low = 0;
  for (auto& a : out) {
    if (a == 0) {
      Letter low = split.low_letters.letters()[next_low++];
      if (low > threshold) throw std::invalid_argument("low tail letter above threshold");
      a = low;
    }
  }
  return Word(std::move(out));
}

std::string tail_to_string(const TailSplit& t) {
  return "high=" + positions_to_string(t.high_positions) + " v=" + to_string(t.high_shifted) +
         " low=" + to_string(t.low_letters);
}

}  // namespace

MercierSplit mercier_split(const RGWord& w) {
  if (w.empty()) throw std::invalid_argument("mercier_split needs a nonempty word");
  MercierSplit split;
  std::vector<Letter> rest;
  auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] == 1) {
      split.one_positions.push_back(i + 1);
    } else {
      rest.push_back(letters[i] - 1);
    }
  }
  split.reduced = RGWord(Word(std::move(rest)));
  return split;
}

RGWord mercier_merge(std::span<const std::size_t> one_positions, const RGWord& reduced) {
  const std::size_t length = one_positions.size() + reduced.size();
  if (one_positions.empty() || one_positions.front() != 1) {
    throw std::invalid_argument("mercier_merge: position 1 must hold a one");
  }
  std::vector<Letter> out(length, 0);
  std::size_t previous = 0;
  for (std::size_t p : one_positions) {
    if (p <= previous || p > length) throw std::invalid_argument("mercier_merge: bad one positions");
    out[p - 1] = 1;
    previous = p;
  }
  std::size_t next = 0;
  for (auto& a : out) {
    if (a == 0) a = reduced.letters()[next++] + 1;
  }
  return RGWord(Word(std::move(out)));
}

Certificate mercier_certificate(const RGWord& w) {
  Certificate cert;
  cert.witness = "mercier_split";
  cert.input = to_string(w);
  MercierSplit split = mercier_split(w);
  const long m = static_cast<long>(split.reduced.size());
  const long k = split.reduced.max_entry();
  cert.output = "ones=" + positions_to_string(split.one_positions) + " u=" + to_string(split.reduced);
  cert.input_weight = wt(w);
  cert.output_weight = wt(split.reduced).shifted(static_cast<std::size_t>(m - k));
  cert.check("shape", k == w.max_entry() - 1 && m + static_cast<long>(split.one_positions.size()) ==
                                                  static_cast<long>(w.size()));
  cert.check("round_trip", mercier_merge(split.one_positions, split.reduced) == w);
  cert.check("weight_transfer", cert.input_weight == cert.output_weight);
  return cert;
}

Dml1Factor dml1_factor(const RGWord& w) {
  if (w.empty()) throw std::invalid_argument("dml1_factor needs a nonempty word");
  std::size_t p = first_occurrence(w.word(), w.max_entry());
  return {RGWord(w.word().prefix(p - 1)), w.word().suffix_from(p)};
}

RGWord dml1_merge(const RGWord& prefix, const Word& tail) {
  Letter top = prefix.max_entry() + 1;
  if (tail.max_letter() > top) throw std::invalid_argument("dml1_merge: tail letter above k+1");
  return RGWord(prefix.word().concat(Word{top}).concat(tail));
}

Certificate dml1_certificate(const RGWord& w) {
  Certificate cert;
  cert.witness = "dml1_factor";
  cert.input = to_string(w);
  Dml1Factor f = dml1_factor(w);
  cert.output = "x=" + to_string(f.prefix) + " y=" + to_string(f.tail);
  cert.input_weight = wt(w);
  cert.output_weight = wt(f.prefix) * ls(f.tail);
  cert.check("shape", f.prefix.max_entry() == w.max_entry() - 1 && f.tail.max_letter() <= w.max_entry());
  cert.check("round_trip", dml1_merge(f.prefix, f.tail) == w);
  cert.check("weight_transfer", cert.input_weight == cert.output_weight);
  return cert;
}

std::vector<Dml2Factorization> dml2_factorizations(const RGWord& w) {
  std::vector<Dml2Factorization> out;
  const Word& word = w.word();
  const std::size_t n = word.size();
  for (std::size_t p : lrm_positions(word)) {
    Letter pivot = word.at(p);
    for (std::size_t len = 1; p + len <= n && word.at(p + len) <= pivot; ++len) {
      Word x = word.prefix(p);
      Word y = word.suffix_from(p).prefix(len);
      Word z = word.suffix_from(p + len);
      out.push_back({std::move(x), std::move(y), std::move(z), pivot});
    }
  }
  return out;
}

RGWord dml2_insert(const RGWord& u, Letter i, const Word& y) {
  if (y.max_letter() > i) throw std::invalid_argument("dml2_insert: y has a letter above the pivot");
  std::size_t p = first_occurrence(u.word(), i);
  return RGWord(u.word().prefix(p).concat(y).concat(u.word().suffix_from(p)));
}

Certificate dml2_certificate(const RGWord& w) {
  Certificate cert;
  cert.witness = "dml2_factorizations";
  cert.input = to_string(w);
  auto factorizations = dml2_factorizations(w);
  const long n = static_cast<long>(w.size());
  const long k = w.max_entry();
  cert.output = std::to_string(factorizations.size()) + " factorizations";
  cert.input_weight = wt(w).scaled(n - k);
  bool shapes = true;
  bool round_trip = true;
  bool weights = true;
  for (const auto& f : factorizations) {
    Word uz = f.x.concat(f.z);
    if (!is_restricted_growth(uz)) {
      shapes = false;
      continue;
    }
    RGWord u(uz);
    shapes = shapes && u.max_entry() == k && u.size() + f.y.size() == w.size() &&
             first_occurrence(u.word(), f.pivot) == f.x.size();
    round_trip = round_trip && dml2_insert(u, f.pivot, f.y) == w;
    weights = weights && wt(w) == wt(u) * ls(f.y);
    cert.output_weight += wt(u) * ls(f.y);
  }
  cert.check("count_is_n_minus_k", static_cast<long>(factorizations.size()) == n - k);
  cert.check("shape", shapes);
  cert.check("round_trip", round_trip);
  cert.check("weight_transfer", weights);
  return cert;
}

long Conv1Decomposition::shift_exponent() const {
  const long i = head.max_entry();
  const long j = static_cast<long>(tail.high_shifted.size());
  return i * (i + j - total_max);
}

Conv1Decomposition conv1_decompose(const RGWord& w, std::size_t n) {
  if (n > w.size()) throw std::invalid_argument("conv1_decompose: split beyond word length");
  Conv1Decomposition d;
  d.head = RGWord(w.word().prefix(n));
  d.total_max = w.max_entry();
  d.tail = split_tail(w.word().suffix_from(n), d.head.max_entry());
  return d;
}

RGWord conv1_compose(const Conv1Decomposition& d) {
  return RGWord(d.head.word().concat(merge_tail(d.tail, d.head.max_entry())));
}

Certificate conv1_certificate(const RGWord& w, std::size_t n) {
  Certificate cert;
  cert.witness = "conv1_decompose";
  cert.input = to_string(w) + " n=" + std::to_string(n);
  Conv1Decomposition d = conv1_decompose(w, n);
  cert.output = "u=" + to_string(d.head) + " " + tail_to_string(d.tail);
  const long shift = d.shift_exponent();
  cert.input_weight = wt(w);
  cert.check("shift_nonnegative", shift >= 0);
  if (shift >= 0) {
    cert.output_weight = wt(d.head) * wt(d.tail.high_shifted) * ls(d.tail.low_letters);
    cert.output_weight = cert.output_weight.shifted(static_cast<std::size_t>(shift));
  }
  cert.check("shape", d.tail.high_shifted.max_entry() == d.total_max - d.head.max_entry());
  cert.check("round_trip", conv1_compose(d) == w);
  cert.check("weight_transfer", cert.input_weight == cert.output_weight);
  return cert;
}

long Conv2Decomposition::shift_exponent() const {
  const long j = static_cast<long>(tail.high_shifted.size());
  return static_cast<long>(k + 1) * (j - r);
}

Conv2Decomposition conv2_decompose(const RGWord& w, int k, int r) {
  if (k < 0 || r < 0 || w.max_entry() != k + r + 1) {
    throw std::invalid_argument("conv2_decompose: word " + to_string(w) + " is not in RG(n+1, k+r+1) for k=" +
                                std::to_string(k) + " r=" + std::to_string(r));
  }
  std::size_t p = first_occurrence(w.word(), k + 1);
  Conv2Decomposition d;
  d.k = k;
  d.r = r;
  d.head = RGWord(w.word().prefix(p - 1));
  d.tail = split_tail(w.word().suffix_from(p), k + 1);
  return d;
}

RGWord conv2_compose(const Conv2Decomposition& d) {
  return RGWord(d.head.word().concat(Word{d.k + 1}).concat(merge_tail(d.tail, d.k + 1)));
}

Certificate conv2_certificate(const RGWord& w, int k, int r) {
  Certificate cert;
  cert.witness = "conv2_decompose";
  cert.input = to_string(w) + " k=" + std::to_string(k) + " r=" + std::to_string(r);
  Conv2Decomposition d = conv2_decompose(w, k, r);
  cert.output = "x=" + to_string(d.head) + " " + tail_to_string(d.tail);
  const long shift = d.shift_exponent();
  cert.input_weight = wt(w);
  cert.check("shift_nonnegative", shift >= 0);
  if (shift >= 0) {
    cert.output_weight = wt(d.head) * wt(d.tail.high_shifted) * ls(d.tail.low_letters);
    cert.output_weight = cert.output_weight.shifted(static_cast<std::size_t>(shift));
  }
  cert.check("shape", d.head.max_entry() == k && d.tail.high_shifted.max_entry() == r);
  cert.check("round_trip", conv2_compose(d) == w);
  cert.check("weight_transfer", cert.input_weight == cert.output_weight);
  return cert;
}

}  // namespace qstirl
