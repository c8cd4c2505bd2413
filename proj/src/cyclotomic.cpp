#include "indres/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "indres/errors.hpp"

namespace indres {

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t r = m, n = m;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

const std::vector<long long>& cyclotomic_polynomial(std::uint64_t m) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<long long>> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  // x^m - 1 divided by Phi_d for all proper divisors d.
  std::vector<long long> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (std::uint64_t d = 1; d < m; ++d) {
    if (m % d) continue;
    const auto& den = cyclotomic_polynomial(d);
    std::vector<long long> q(num.size() - den.size() + 1, 0);
    for (long long i = static_cast<long long>(num.size()) - 1; i >= static_cast<long long>(den.size()) - 1; --i) {
      long long c = num[i];
      std::size_t s = i - (den.size() - 1);
      q[s] = c;
      for (std::size_t j = 0; j < den.size(); ++j) num[s + j] -= c * den[j];
    }
    num = q;
  }
  std::lock_guard<std::mutex> lk(mu);
  return cache.emplace(m, std::move(num)).first->second;
}

Cyclotomic::Cyclotomic(std::uint64_t modulus) : m_(modulus) {
  if (modulus == 0) throw DomainError("cyclotomic modulus must be positive");
  c_.assign(euler_phi(modulus), 0);
}

Cyclotomic Cyclotomic::integer(const BigInt& v, std::uint64_t modulus) {
  Cyclotomic r(modulus);
  r.c_[0] = v;
  return r;
}

Cyclotomic Cyclotomic::from_dense(std::uint64_t m, std::vector<BigInt> dense) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = dense.size(); i-- > deg;) {
    if (dense[i] == 0) continue;
    BigInt c = dense[i];
    std::size_t s = i - deg;
    for (std::size_t j = 0; j <= deg; ++j)
      if (phi[j]) dense[s + j] -= c * static_cast<long>(phi[j]);
  }
  Cyclotomic r(m);
  for (std::size_t i = 0; i < deg && i < dense.size(); ++i) r.c_[i] = std::move(dense[i]);
  return r;
}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t modulus, std::uint64_t k) {
  std::vector<BigInt> d(modulus, 0);
  d[k % modulus] = 1;
  return from_dense(modulus, std::move(d));
}

Cyclotomic Cyclotomic::from_terms(std::uint64_t modulus,
                                  const std::vector<std::pair<long long, BigInt>>& terms) {
  if (modulus == 0) throw FormatError("cyclotomic modulus must be positive");
  std::vector<BigInt> d(modulus, 0);
  const long long m = static_cast<long long>(modulus);
  for (const auto& [e, c] : terms) d[((e % m) + m) % m] += c;
  return from_dense(modulus, std::move(d));
}

std::vector<std::pair<long long, BigInt>> Cyclotomic::terms() const {
  std::vector<std::pair<long long, BigInt>> t;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) t.emplace_back(static_cast<long long>(i), c_[i]);
  return t;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::lift(std::uint64_t multiple) const {
  if (multiple % m_) throw DomainError("lift target is not a multiple of the modulus");
  if (multiple == m_) return *this;
  if (is_rational()) return integer(c_[0], multiple);
  std::vector<BigInt> d(multiple, 0);
  const std::uint64_t step = multiple / m_;
  for (std::size_t i = 0; i < c_.size(); ++i) d[i * step] = c_[i];
  return from_dense(multiple, std::move(d));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (o.m_ != m_) {
    std::uint64_t l = std::lcm(m_, o.m_);
    return lift(l) + o.lift(l);
  }
  Cyclotomic r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (o.m_ != m_) {
    if (o.is_rational()) return *this * o.c_[0];
    if (is_rational()) return o * c_[0];
    std::uint64_t l = std::lcm(m_, o.m_);
    return lift(l) * o.lift(l);
  }
  std::vector<BigInt> d(2 * c_.size(), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) d[i + j] += c_[i] * o.c_[j];
  }
  return from_dense(m_, std::move(d));
}

Cyclotomic Cyclotomic::operator*(const BigInt& k) const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

bool Cyclotomic::divisible_by(const BigInt& k) const {
  for (const auto& x : c_)
    if (!mpz_divisible_p(x.get_mpz_t(), k.get_mpz_t())) return false;
  return true;
}

Cyclotomic Cyclotomic::div_exact(const BigInt& k) const {
  if (k == 0 || !divisible_by(k)) throw DomainError("cyclotomic value not divisible by integer");
  Cyclotomic r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
  return r;
}

Cyclotomic Cyclotomic::galois(long long k) const {
  const long long m = static_cast<long long>(m_);
  long long kk = ((k % m) + m) % m;
  if (std::gcd(kk, m) != 1 && m > 1) throw DomainError("galois exponent not coprime to modulus");
  if (is_rational()) return *this;
  std::vector<BigInt> d(m_, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) d[(static_cast<long long>(i) * kk) % m] += c_[i];
  return from_dense(m_, std::move(d));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (m_ == o.m_) return c_ == o.c_;
  std::uint64_t l = std::lcm(m_, o.m_);
  return lift(l).c_ == o.lift(l).c_;
}

bool Cyclotomic::less(const Cyclotomic& o) const {
  if (m_ != o.m_) return m_ < o.m_;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

}  // namespace indres
