#pragma once

#include <cstdint>

#include "nilmult/bigint.hpp"

namespace nilmult {

/// Möbius function. Throws std::invalid_argument for m = 0.
int mobius(std::uint64_t m);

/// Number of basic commutators of weight `n` on `d` letters,
/// (1/n) * sum_{m | n} mu(m) d^(n/m). Throws std::invalid_argument for n = 0.
BigInt witt(std::uint64_t n, std::uint64_t d);

/// witt() narrowed to 64 bits; throws std::overflow_error if it does not fit.
std::uint64_t witt_u64(std::uint64_t n, std::uint64_t d);

}  // namespace nilmult
