#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qstirl/qpoly.hpp"
#include "qstirl/word.hpp"

namespace qstirl {

/// True iff every letter is at most one more than the maximum of the letters
/// before it. The empty word qualifies.
bool is_restricted_growth(const Word& w);

/// A validated restricted growth word. max_entry() is the number of blocks
/// of the associated set partition (0 for the empty word).
class RGWord {
public:
  RGWord() = default;
  /// Throws std::invalid_argument if w is not restricted growth.
  explicit RGWord(Word w);
  RGWord(std::initializer_list<Letter> letters) : RGWord(Word(letters)) {}

  static RGWord parse(std::string_view text) { return RGWord(Word::parse(text)); }
  /// The increasing word 12...k.
  static RGWord staircase(int k);

  const Word& word() const noexcept { return word_; }
  std::span<const Letter> letters() const noexcept { return word_.letters(); }
  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  int max_entry() const noexcept { return max_entry_; }
  Letter at(std::size_t position) const { return word_.at(position); }

  friend bool operator==(const RGWord& a, const RGWord& b) { return a.word_ == b.word_; }
  friend auto operator<=>(const RGWord& a, const RGWord& b) { return a.word_ <=> b.word_; }

private:
  Word word_;
  int max_entry_ = 0;
};

std::string to_string(const RGWord& w);

/// Streams RG(n, k) in lexicographic order without materializing it.
class RGSequence {
public:
  RGSequence(std::size_t n, int k);

  /// Next word, or std::nullopt once the set is exhausted.
  std::optional<RGWord> next();

private:
  bool advance();

  std::size_t n_;
  int k_;
  std::vector<Letter> cur_;
  bool started_ = false;
  bool done_ = false;
};

/// Every word of RG(n, k), each once, lexicographically.
std::vector<RGWord> enumerate_rg(std::size_t n, int k);
/// Every RG-word of length n, grouped by max entry ascending.
std::vector<RGWord> enumerate_rg_all(std::size_t n);
void for_each_rg(std::size_t n, int k, const std::function<void(const RGWord&)>& visit);

/// q^(sum(w_i - 1) - C(k, 2)) with k the max entry.
QPoly wt(const RGWord& w);
long wt_exponent(const RGWord& w);
/// q^(sum(w_i - 1)).
QPoly ls(const Word& w);
long ls_exponent(const Word& w);

/// Blocks ordered by their minima, elements 1-based and ascending.
class SetPartition {
public:
  /// Throws std::invalid_argument unless the blocks are nonempty, disjoint,
  /// cover {1..n} and appear in standard form.
  explicit SetPartition(std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  std::size_t ground_size() const noexcept { return n_; }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
  std::vector<std::vector<int>> blocks_;
  std::size_t n_ = 0;
};

std::string to_string(const SetPartition& p);

SetPartition to_partition(const RGWord& w);
RGWord from_partition(const SetPartition& p);

/// Words u_1..u_k with w = 1 u_1 2 u_2 ... k u_k and u_i over [1, i].
std::vector<Word> expansion(const RGWord& w);
/// Inverse of expansion: interleaves 1..k with the given factors.
RGWord from_expansion(const std::vector<Word>& factors);

/// 1-based positions r whose letter is at most the maximum of the strict prefix.
std::vector<std::size_t> nlrm(const Word& w);
/// Left-to-right maximum positions (complement of nlrm).
std::vector<std::size_t> lrm_positions(const Word& w);
/// Prefix maximum at a non-left-to-right-maximum position; throws
/// std::invalid_argument at a left-to-right maximum.
Letter bound(const Word& w, std::size_t r);

/// Entrywise maximum; throws std::invalid_argument on a length mismatch.
RGWord join(const RGWord& v, const RGWord& w);
/// Entrywise minimum; not closed on RG words, so a plain Word.
Word meet(const Word& v, const Word& w);

}  // namespace qstirl
