#include "hypercert/combinatorics.hpp"

#include <stdexcept>

namespace hypercert {

namespace {

// C(n, k) mod p for digits n, k < p.
std::uint64_t small_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num = num * ((n - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  // den is a product of integers < p, hence invertible mod p.
  std::uint64_t inv = 1, base = den, e = p - 2;
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return num * inv % p;
}

}  // namespace

std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("binomial_mod: modulus must be prime");
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (n || k) {
    const std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    result = result * small_binomial(nd, kd, p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint64_t int_pow(std::uint64_t base, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (base != 0 && out > (std::uint64_t{1} << 62) / base) throw std::overflow_error("int_pow overflow");
    out *= base;
  }
  return out;
}

}  // namespace hypercert
