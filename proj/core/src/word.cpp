#include "qstirl/word.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace qstirl {

namespace {

void require_positive(const std::vector<Letter>& letters) {
  for (Letter a : letters) {
    if (a < 1) throw std::invalid_argument("word letters must be positive, got " + std::to_string(a));
  }
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) { require_positive(letters_); }

Word::Word(std::initializer_list<Letter> letters) : letters_(letters) { require_positive(letters_); }

Word Word::parse(std::string_view text) {
  if (text.empty() || text == "ε") return {};
  std::vector<Letter> letters;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad letter in word: " + std::string(text));
      letters.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view piece = text.substr(start, end - start);
      Letter value = 0;
      auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
      if (ec != std::errc{} || ptr != piece.data() + piece.size() || piece.empty()) {
        throw std::invalid_argument("bad letter in word: " + std::string(text));
      }
      letters.push_back(value);
      start = end + 1;
    }
  }
  return Word(std::move(letters));
}

Letter Word::at(std::size_t position) const {
  if (position < 1 || position > letters_.size()) {
    throw std::out_of_range("position " + std::to_string(position) + " outside word of length " +
                            std::to_string(letters_.size()));
  }
  return letters_[position - 1];
}

Letter Word::max_letter() const noexcept {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Word Word::concat(const Word& other) const {
  Word out = *this;
  out.letters_.insert(out.letters_.end(), other.letters_.begin(), other.letters_.end());
  return out;
}

Word Word::prefix(std::size_t length) const {
  Word out;
  out.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(std::min(length, size())));
  return out;
}

Word Word::suffix_from(std::size_t length) const {
  Word out;
  if (length < size()) out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(length), letters_.end());
  return out;
}

Word Word::with_letter(std::size_t position, Letter value) const {
  if (position < 1 || position > letters_.size()) throw std::out_of_range("position outside word");
  std::vector<Letter> v = letters_;
  v[position - 1] = value;
  return Word(std::move(v));
}

bool entrywise_leq(const Word& v, const Word& w) {
  if (v.size() != w.size()) return false;
  auto a = v.letters();
  auto b = w.letters();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "ε";
  bool digits = w.max_letter() <= 9;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(w.letters()[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_string(w); }

std::vector<Word> all_words(std::size_t n, Letter m) {
  std::vector<Word> out;
  if (m < 1 && n > 0) return out;
  std::vector<Letter> cur(n, 1);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == m) {
      cur[i - 1] = 1;
      --i;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

}  // namespace qstirl
