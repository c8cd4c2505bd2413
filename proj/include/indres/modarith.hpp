#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace indres {

// Arithmetic in Z/qZ for a prime q < 2^62.
struct ModPrime {
  std::uint64_t q;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a + b >= q ? a + b - q : a + b; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + q - b; }
  std::uint64_t neg(std::uint64_t a) const { return a ? q - a : 0; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t from_signed(long long v) const;
  std::uint64_t from_u64(std::uint64_t v) const { return v % q; }
  // Symmetric lift into (-q/2, q/2).
  long long lift(std::uint64_t a) const {
    return a > q / 2 ? -static_cast<long long>(q - a) : static_cast<long long>(a);
  }
};

bool is_prime_u64(std::uint64_t n);
// Least prime q > lower_bound with q = 1 mod m.
std::uint64_t prime_one_mod(std::uint64_t m, std::uint64_t lower_bound);
// Least generator of (Z/qZ)^*. Factors q - 1 by trial division.
std::uint64_t primitive_root(std::uint64_t q);
// a^((q-1)/e) for the least a >= 2 giving an element of order exactly e;
// requires e | q - 1.
std::uint64_t root_of_unity(std::uint64_t q, std::uint64_t e);
std::uint64_t mult_order(std::uint64_t a, std::uint64_t m);
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

using ModMatrix = std::vector<std::vector<std::uint64_t>>;
using ModPoly = std::vector<std::uint64_t>;  // coefficients, lowest degree first

// Basis of the right null space {x : A x = 0}.
std::vector<std::vector<std::uint64_t>> null_space(const ModPrime& f, ModMatrix a);
ModPoly char_poly(const ModPrime& f, ModMatrix a);
void trim(ModPoly& a);
ModPoly poly_mod(const ModPrime& f, ModPoly a, const ModPoly& b);
ModPoly poly_mulmod(const ModPrime& f, const ModPoly& a, const ModPoly& b, const ModPoly& m);
ModPoly poly_powmod(const ModPrime& f, ModPoly base, std::uint64_t e, const ModPoly& m);
ModPoly poly_gcd(const ModPrime& f, ModPoly a, ModPoly b);  // monic
ModPoly poly_div(const ModPrime& f, ModPoly a, const ModPoly& b);
// Distinct roots in F_q, ascending.
std::vector<std::uint64_t> poly_roots(const ModPrime& f, const ModPoly& p, std::mt19937_64& rng);

}  // namespace indres
