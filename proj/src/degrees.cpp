#include "expcircle/degrees.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "expcircle/errors.hpp"

namespace expcircle {

int cyclic_sign(const std::vector<CirclePoint>& ps) {
  const long n = static_cast<long>(ps.size());
  if (n == 0 || n % 2 == 0)
    throw std::invalid_argument("cyclic sign needs an odd number of points");
  std::vector<long> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](long a, long b) { return ps[a] < ps[b]; });
  for (long i = 0; i + 1 < n; ++i)
    if (ps[order[i]] == ps[order[i + 1]])
      throw std::invalid_argument("cyclic sign needs pairwise distinct points");
  // Parity via cycle count of the sorting permutation.
  std::vector<bool> seen(n, false);
  long transpositions = 0;
  for (long i = 0; i < n; ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (long j = i; !seen[j]; j = order[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

Int degree_formula(long k, long d) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  Int out;
  mpz_pow_ui(out.get_mpz_t(), Int(d).get_mpz_t(),
             static_cast<unsigned long>((k + 1) / 2));
  return out;
}

Int degree_oracle(long k, long d, unsigned long long budget) {
  if (k < 1 || k % 2 == 0)
    throw std::invalid_argument("the oracle enumerates odd k only");
  if (d < 1) throw std::invalid_argument("the oracle enumerates d >= 1 only");
  Int tuples;
  mpz_pow_ui(tuples.get_mpz_t(), Int(d).get_mpz_t(),
             static_cast<unsigned long>(k));
  if (tuples > Int(static_cast<unsigned long>(budget)))
    throw BudgetExceededError(tuples.get_str(), budget);

  std::vector<long> s(k, 0);
  std::vector<CirclePoint> pts(k);
  Int total = 0;
  for (;;) {
    // The preimage tuple (s_0, ..., s_{k-1}) selects angles (s_r*k + r)/(k*d),
    // which are pairwise distinct by construction.
    for (long r = 0; r < k; ++r) pts[r] = CirclePoint(s[r] * k + r, k * d);
    total += cyclic_sign(pts);
    long pos = k - 1;
    while (pos >= 0 && s[pos] == d - 1) {
      s[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++s[pos];
  }
  return total;
}

Int degree_oracle_inverse(long k) {
  if (k < 1 || k % 2 == 0)
    throw std::invalid_argument("the inversion oracle needs odd k");
  std::vector<CirclePoint> pts;
  pts.reserve(k);
  pts.emplace_back(0, k);
  for (long r = k - 1; r >= 1; --r) pts.emplace_back(r, k);
  const int sign = cyclic_sign(pts);
  return Int(-sign);  // times (-1)^k with k odd
}

}  // namespace expcircle
