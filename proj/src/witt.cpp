#include "nilmult/witt.hpp"

#include <stdexcept>

namespace nilmult {

int mobius(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("mobius: argument must be positive");
  int sign = 1;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    m /= q;
    if (m % q == 0) return 0;
    sign = -sign;
  }
  if (m > 1) sign = -sign;
  return sign;
}

BigInt witt(std::uint64_t n, std::uint64_t d) {
  if (n == 0) throw std::invalid_argument("witt: weight must be positive");
  BigInt sum = 0;
  for (std::uint64_t m = 1; m <= n; ++m) {
    if (n % m != 0) continue;
    const int mu = mobius(m);
    if (mu == 0) continue;
    const BigInt term = ipow(BigInt(d), n / m);
    if (mu > 0)
      sum += term;
    else
      sum -= term;
  }
  if (sum % n != 0)
    throw std::logic_error("witt: necklace sum not divisible by weight");
  return sum / n;
}

std::uint64_t witt_u64(std::uint64_t n, std::uint64_t d) {
  const BigInt v = witt(n, d);
  if (v > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("witt value exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

}  // namespace nilmult
