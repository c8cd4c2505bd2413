#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "indres/bigint.hpp"

namespace indres {

// Element of Z[zeta_m] (coefficients may be any integers), stored in the power
// basis 1, zeta, ..., zeta^(phi(m)-1) reduced modulo the m-th cyclotomic
// polynomial. This representation is canonical for a fixed m.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(std::uint64_t modulus);  // zero
  static Cyclotomic integer(const BigInt& v, std::uint64_t modulus = 1);
  static Cyclotomic root_of_unity(std::uint64_t modulus, std::uint64_t k);
  // Sum of c * zeta_m^e over the given terms; exponents taken mod m.
  static Cyclotomic from_terms(std::uint64_t modulus,
                               const std::vector<std::pair<long long, BigInt>>& terms);

  std::uint64_t modulus() const { return m_; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  std::vector<std::pair<long long, BigInt>> terms() const;

  bool is_zero() const;
  bool is_rational() const;
  const BigInt& rational_part() const { return c_[0]; }

  Cyclotomic lift(std::uint64_t multiple) const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(const BigInt& k) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  // Exact division by an integer; throws DomainError if not integral.
  Cyclotomic div_exact(const BigInt& k) const;
  bool divisible_by(const BigInt& k) const;

  Cyclotomic conj() const;
  Cyclotomic galois(long long k) const;  // zeta -> zeta^k, gcd(k, m) = 1

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  // Total order for canonical sorting: modulus, then coefficients.
  bool less(const Cyclotomic& o) const;

 private:
  static Cyclotomic from_dense(std::uint64_t m, std::vector<BigInt> dense);
  std::uint64_t m_;
  std::vector<BigInt> c_;
};

const std::vector<long long>& cyclotomic_polynomial(std::uint64_t m);
std::uint64_t euler_phi(std::uint64_t m);

}  // namespace indres
