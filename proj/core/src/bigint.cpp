#include "pmaps/bigint.hpp"

#include <stdexcept>

namespace pmaps {

BigInt factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative");
  BigInt r = 1;
  for (long long k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step
  }
  return r;
}

}  // namespace pmaps
