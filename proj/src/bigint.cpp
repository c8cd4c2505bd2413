#include "indres/bigint.hpp"

#include "indres/errors.hpp"

namespace indres {

BigInt parse_bigint(const std::string& s) {
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) throw FormatError("not a decimal integer: '" + s + "'");
  return v;
}

int valuation(const BigInt& n, unsigned long p) {
  if (n == 0) throw DomainError("valuation of zero");
  BigInt m = abs(n);
  int v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    m /= p;
    ++v;
  }
  return v;
}

int valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw DomainError("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) throw ResourceError("integer exceeds 64 bits");
  std::uint64_t r = 0;
  mpz_export(&r, nullptr, -1, sizeof(r), 0, 0, v.get_mpz_t());
  return r;
}

}  // namespace indres
