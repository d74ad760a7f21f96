#pragma once

#include <cstdint>

namespace hypercert {

/// C(n, k) mod p via Lucas' theorem (digit-wise in base p). Zero when k > n.
std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// Structure constant of X_m * X_n = C(m+n, n) X_{m+n} in a divided-power
/// line, reduced mod p.
inline std::uint32_t divided_coeff(std::uint64_t m, std::uint64_t n, std::uint32_t p) {
  return binomial_mod(m + n, n, p);
}

/// p^e, throwing on overflow past 2^62.
std::uint64_t int_pow(std::uint64_t base, unsigned e);

}  // namespace hypercert
