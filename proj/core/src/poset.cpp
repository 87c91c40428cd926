#include "qstirl/poset.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "qstirl/qanalog.hpp"

namespace qstirl {

Word repair_step(const Word& w) {
  Letter max_so_far = 0;
  auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] > max_so_far + 1) return w.with_letter(i + 1, max_so_far + 1);
    max_so_far = std::max(max_so_far, letters[i]);
  }
  return w;
}

RGWord phi(const Word& w) {
  Word current = w;
  for (;;) {
    Word next = repair_step(current);
    if (next == current) break;
    current = std::move(next);
  }
  return RGWord(std::move(current));
}

Word omega(const RGWord& v, Letter m) {
  if (m < 1 || m < v.max_entry()) {
    throw std::invalid_argument("omega: m=" + std::to_string(m) + " is below the max entry " +
                                std::to_string(v.max_entry()));
  }
  std::vector<Letter> out(v.letters().begin(), v.letters().end());
  for (std::size_t r : lrm_positions(v.word())) out[r - 1] = m;
  return Word(std::move(out));
}

std::size_t Interval::cardinality() const {
  std::size_t c = 1;
  for (int len : chain_profile) c *= static_cast<std::size_t>(len);
  return c;
}

Interval interval_of(const RGWord& v, Letter m) {
  Interval iv{v, omega(v, m), {}};
  for (int i = 1; i <= v.max_entry(); ++i) iv.chain_profile.push_back(m - i + 1);
  return iv;
}

std::vector<Word> fiber(const RGWord& v, Letter m) {
  std::vector<Word> out;
  const int k = v.max_entry();
  if (m < k) return out;
  std::vector<Word> factors = expansion(v);
  std::vector<Letter> choice(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) choice[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    std::vector<Letter> letters;
    letters.reserve(v.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      letters.push_back(choice[i]);
      letters.insert(letters.end(), factors[i].letters().begin(), factors[i].letters().end());
    }
    out.emplace_back(std::move(letters));
    // Odometer over j_i in [i, m], last factor fastest.
    std::size_t i = choice.size();
    while (i > 0 && choice[i - 1] == m) {
      choice[i - 1] = static_cast<Letter>(i);
      --i;
    }
    if (i == 0) break;
    ++choice[i - 1];
  }
  return out;
}

std::vector<Interval> decompose(std::size_t n, Letter m) {
  if (m < 1) throw std::invalid_argument("decompose requires m >= 1");
  std::vector<Interval> out;
  const int top_k = static_cast<int>(std::min<std::size_t>(n, static_cast<std::size_t>(m)));
  for (int k = 0; k <= top_k; ++k) {
    for_each_rg(n, k, [&](const RGWord& v) { out.push_back(interval_of(v, m)); });
  }
  return out;
}

ClosureReport closure_check(const Word& v, const Word& w) {
  if (v.size() != w.size()) throw std::invalid_argument("closure_check: length mismatch");
  ClosureReport report;
  RGWord pw = phi(w);
  report.decreasing = entrywise_leq(pw.word(), w);
  report.idempotent = phi(pw.word()) == pw;
  report.monotone = !entrywise_leq(v, w) || entrywise_leq(phi(v).word(), pw.word());
  return report;
}

QPoly fiber_ls_sum(const RGWord& v, Letter m) {
  std::vector<Integer> counts;
  for (const Word& w : fiber(v, m)) {
    auto e = static_cast<std::size_t>(ls_exponent(w));
    if (counts.size() <= e) counts.resize(e + 1);
    counts[e] += 1;
  }
  return QPoly(std::move(counts));
}

QPoly fiber_ls_closed_form(const RGWord& v, Letter m) {
  const long k = v.max_entry();
  if (m < k) return {};
  return wt(v).shifted(static_cast<std::size_t>(k * (k - 1) / 2)) * q_falling(m, k);
}

}  // namespace qstirl
