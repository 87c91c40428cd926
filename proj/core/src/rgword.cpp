#include "qstirl/rgword.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qstirl {

bool is_restricted_growth(const Word& w) {
  Letter max_so_far = 0;
  for (Letter a : w.letters()) {
    if (a > max_so_far + 1) return false;
    max_so_far = std::max(max_so_far, a);
  }
  return true;
}

RGWord::RGWord(Word w) : word_(std::move(w)) {
  if (!is_restricted_growth(word_)) {
    throw std::invalid_argument("not a restricted growth word: " + to_string(word_));
  }
  max_entry_ = word_.max_letter();
}

RGWord RGWord::staircase(int k) {
  std::vector<Letter> v(static_cast<std::size_t>(std::max(k, 0)));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<Letter>(i + 1);
  return RGWord(Word(std::move(v)));
}

std::string to_string(const RGWord& w) { return to_string(w.word()); }

RGSequence::RGSequence(std::size_t n, int k) : n_(n), k_(k) {
  bool feasible = (n == 0 && k == 0) || (k >= 1 && static_cast<std::size_t>(k) <= n);
  done_ = !feasible;
}

std::optional<RGWord> RGSequence::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    // Smallest word: ones followed by the staircase 2..k at the end.
    cur_.assign(n_, 1);
    for (int j = 2; j <= k_; ++j) cur_[n_ - static_cast<std::size_t>(k_ - j) - 1] = j;
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return RGWord(Word(cur_));
}

bool RGSequence::advance() {
  // prefix_max[i] = max of cur_[0..i-1].
  std::vector<Letter> prefix_max(n_ + 1, 0);
  for (std::size_t i = 0; i < n_; ++i) prefix_max[i + 1] = std::max(prefix_max[i], cur_[i]);
  for (std::size_t i = n_; i-- > 1;) {
    Letter candidate = cur_[i] + 1;
    if (candidate > prefix_max[i] + 1 || candidate > k_) continue;
    Letter new_max = std::max(prefix_max[i], candidate);
    std::size_t remaining = n_ - i - 1;
    auto needed = static_cast<std::size_t>(k_ - new_max);
    if (needed > remaining) continue;
    cur_[i] = candidate;
    std::size_t ones = remaining - needed;
    for (std::size_t j = 0; j < ones; ++j) cur_[i + 1 + j] = 1;
    for (std::size_t j = 0; j < needed; ++j) cur_[i + 1 + ones + j] = new_max + 1 + static_cast<Letter>(j);
    return true;
  }
  return false;
}

std::vector<RGWord> enumerate_rg(std::size_t n, int k) {
  std::vector<RGWord> out;
  RGSequence seq(n, k);
  while (auto w = seq.next()) out.push_back(std::move(*w));
  return out;
}

std::vector<RGWord> enumerate_rg_all(std::size_t n) {
  std::vector<RGWord> out;
  for (int k = 0; static_cast<std::size_t>(k) <= n; ++k) {
    RGSequence seq(n, k);
    while (auto w = seq.next()) out.push_back(std::move(*w));
  }
  return out;
}

void for_each_rg(std::size_t n, int k, const std::function<void(const RGWord&)>& visit) {
  RGSequence seq(n, k);
  while (auto w = seq.next()) visit(*w);
}

long ls_exponent(const Word& w) {
  long e = 0;
  for (Letter a : w.letters()) e += a - 1;
  return e;
}

long wt_exponent(const RGWord& w) {
  long k = w.max_entry();
  return ls_exponent(w.word()) - k * (k - 1) / 2;
}

QPoly wt(const RGWord& w) { return QPoly::monomial(static_cast<std::size_t>(wt_exponent(w))); }

QPoly ls(const Word& w) { return QPoly::monomial(static_cast<std::size_t>(ls_exponent(w))); }

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  std::set<int> seen;
  int previous_min = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("set partition has an empty block");
    std::sort(b.begin(), b.end());
    if (b.front() <= previous_min) {
      throw std::invalid_argument("set partition blocks are not in standard form");
    }
    previous_min = b.front();
    for (int x : b) {
      if (!seen.insert(x).second) throw std::invalid_argument("set partition blocks overlap");
    }
  }
  n_ = seen.size();
  if (!seen.empty() && (*seen.begin() != 1 || *seen.rbegin() != static_cast<int>(n_))) {
    throw std::invalid_argument("set partition blocks do not cover {1..n}");
  }
}

std::string to_string(const SetPartition& p) {
  if (p.blocks().empty()) return "∅";
  std::ostringstream os;
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    if (b > 0) os << '/';
    os << '{';
    for (std::size_t i = 0; i < p.blocks()[b].size(); ++i) {
      if (i > 0) os << ',';
      os << p.blocks()[b][i];
    }
    os << '}';
  }
  return os.str();
}

SetPartition to_partition(const RGWord& w) {
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(w.max_entry()));
  auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    blocks[static_cast<std::size_t>(letters[i] - 1)].push_back(static_cast<int>(i + 1));
  }
  return SetPartition(std::move(blocks));
}

RGWord from_partition(const SetPartition& p) {
  std::vector<Letter> letters(p.ground_size());
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    for (int x : p.blocks()[b]) letters[static_cast<std::size_t>(x - 1)] = static_cast<Letter>(b + 1);
  }
  return RGWord(Word(std::move(letters)));
}

std::vector<Word> expansion(const RGWord& w) {
  std::vector<Word> factors;
  std::vector<Letter> current;
  Letter max_so_far = 0;
  for (Letter a : w.letters()) {
    if (a > max_so_far) {
      if (max_so_far > 0) factors.emplace_back(std::move(current));
      current.clear();
      max_so_far = a;
    } else {
      current.push_back(a);
    }
  }
  if (max_so_far > 0) factors.emplace_back(std::move(current));
  return factors;
}

RGWord from_expansion(const std::vector<Word>& factors) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    letters.push_back(static_cast<Letter>(i + 1));
    for (Letter a : factors[i].letters()) {
      if (a > static_cast<Letter>(i + 1)) {
        throw std::invalid_argument("expansion factor u_" + std::to_string(i + 1) +
                                    " has a letter above " + std::to_string(i + 1));
      }
      letters.push_back(a);
    }
  }
  return RGWord(Word(std::move(letters)));
}

std::vector<std::size_t> nlrm(const Word& w) {
  std::vector<std::size_t> out;
  Letter max_so_far = 0;
  auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] <= max_so_far) out.push_back(i + 1);
    max_so_far = std::max(max_so_far, letters[i]);
  }
  return out;
}

std::vector<std::size_t> lrm_positions(const Word& w) {
  std::vector<std::size_t> out;
  Letter max_so_far = 0;
  auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] > max_so_far) out.push_back(i + 1);
    max_so_far = std::max(max_so_far, letters[i]);
  }
  return out;
}

Letter bound(const Word& w, std::size_t r) {
  if (r < 1 || r > w.size()) throw std::out_of_range("bound: position outside word");
  auto letters = w.letters();
  Letter prefix_max = 0;
  for (std::size_t i = 0; i + 1 < r; ++i) prefix_max = std::max(prefix_max, letters[i]);
  if (letters[r - 1] > prefix_max) {
    throw std::invalid_argument("bound: position " + std::to_string(r) + " is a left-to-right maximum");
  }
  return prefix_max;
}

RGWord join(const RGWord& v, const RGWord& w) {
  if (v.size() != w.size()) throw std::invalid_argument("join: length mismatch");
  std::vector<Letter> out(v.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(v.letters()[i], w.letters()[i]);
  return RGWord(Word(std::move(out)));
}

Word meet(const Word& v, const Word& w) {
  if (v.size() != w.size()) throw std::invalid_argument("meet: length mismatch");
  std::vector<Letter> out(v.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(v.letters()[i], w.letters()[i]);
  return Word(std::move(out));
}

}  // namespace qstirl
