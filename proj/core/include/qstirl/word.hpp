#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qstirl {

using Letter = int;

/// A word over the positive integers (possibly empty).
///
/// Positions are 1-based in every public accessor that takes a position;
/// letters() exposes the raw 0-based storage.
class Word {
public:
  Word() = default;
  /// Throws std::invalid_argument if any letter is < 1.
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);

  /// Parses "1123" (one digit per letter) or "1,10,2" (comma separated).
  /// "" and "ε" denote the empty word.
  static Word parse(std::string_view text);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  /// 1-based access.
  Letter at(std::size_t position) const;
  Letter max_letter() const noexcept;

  Word concat(const Word& other) const;
  Word prefix(std::size_t length) const;
  Word suffix_from(std::size_t length) const;
  Word with_letter(std::size_t position, Letter value) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

/// Entrywise order on words of equal length; false on a length mismatch.
bool entrywise_leq(const Word& v, const Word& w);

/// Digit string when every letter is <= 9, comma separated otherwise; "ε"
/// for the empty word.
std::string to_string(const Word& w);
std::ostream& operator<<(std::ostream& os, const Word& w);

/// Every word of [1,m]^n in lexicographic order.
std::vector<Word> all_words(std::size_t n, Letter m);

}  // namespace qstirl
