#include "qstirl/qanalog.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace qstirl {

QPoly q_int(long k) {
  if (k <= 0) return {};
  return QPoly(std::vector<Integer>(static_cast<std::size_t>(k), Integer(1)));
}

QPoly q_factorial(long k) {
  if (k < 0) throw std::invalid_argument("q_factorial of negative " + std::to_string(k));
  QPoly result = QPoly::constant(1);
  for (long i = 2; i <= k; ++i) result *= q_int(i);
  return result;
}

QPoly q_binomial(long n, long k) {
  if (k < 0 || k > n) return {};
  // Row-by-row q-Pascal triangle, keeping only columns 0..k.
  std::vector<QPoly> row(static_cast<std::size_t>(k) + 1);
  row[0] = QPoly::constant(1);
  for (long m = 1; m <= n; ++m) {
    long top = std::min(m, k);
    for (long j = top; j >= 1; --j) {
      auto jj = static_cast<std::size_t>(j);
      row[jj] = row[jj - 1] + row[jj].shifted(jj);
    }
  }
  return row[static_cast<std::size_t>(k)];
}

QPoly q_falling(long n, long k) {
  if (k < 0 || k > n) {
    throw std::invalid_argument("q_falling requires 0 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  }
  QPoly result = QPoly::constant(1);
  for (long i = 0; i < k; ++i) result *= q_int(n - i);
  return result;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

QPoly neg_q_power(long s, long e) {
  auto exponent = static_cast<std::size_t>(s * e);
  return QPoly::monomial(exponent, (e % 2 == 0) ? 1 : -1);
}

}  // namespace qstirl
