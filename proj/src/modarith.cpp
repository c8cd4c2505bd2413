#include "indres/modarith.hpp"

#include <algorithm>

#include "indres/errors.hpp"
#include "indres/finite_group.hpp"

namespace indres {

std::uint64_t ModPrime::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % q;
  a %= q;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t ModPrime::inv(std::uint64_t a) const {
  if (a % q == 0) throw DomainError("inverse of zero modulo prime");
  return pow(a, q - 2);
}

std::uint64_t ModPrime::from_signed(long long v) const {
  long long r = v % static_cast<long long>(q);
  return r < 0 ? static_cast<std::uint64_t>(r + static_cast<long long>(q)) : static_cast<std::uint64_t>(r);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  ModPrime f{n};
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) d /= 2, ++s;
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = f.pow(a, d);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s && comp; ++i) {
      x = f.mul(x, x);
      if (x == n - 1) comp = false;
    }
    if (comp) return false;
  }
  return true;
}

std::uint64_t prime_one_mod(std::uint64_t m, std::uint64_t lower_bound) {
  std::uint64_t q = (lower_bound / m + 1) * m + 1;
  while (!is_prime_u64(q)) q += m;
  return q;
}

std::uint64_t primitive_root(std::uint64_t q) {
  ModPrime f{q};
  auto fac = prime_factors(q - 1);
  for (std::uint64_t g = 2;; ++g) {
    bool ok = true;
    for (auto r : fac) ok = ok && f.pow(g, (q - 1) / r) != 1;
    if (ok) return g;
  }
}

std::uint64_t root_of_unity(std::uint64_t q, std::uint64_t e) {
  if ((q - 1) % e) throw DomainError("e does not divide q - 1");
  ModPrime f{q};
  auto fac = prime_factors(e);
  for (std::uint64_t a = 2;; ++a) {
    std::uint64_t w = f.pow(a, (q - 1) / e);
    bool ok = true;
    for (auto r : fac) ok = ok && f.pow(w, e / r) != 1;
    if (ok) return w;
  }
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  std::uint64_t x = a % m, k = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * a % m);
    ++k;
    if (k > m) throw DomainError("element not invertible modulo m");
  }
  return k;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  long long t = 0, nt = 1, r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
  while (nr) {
    long long qq = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - qq * nt);
    std::tie(r, nr) = std::make_pair(nr, r - qq * nr);
  }
  if (r != 1) throw DomainError("not invertible");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<long long>(m) : t);
}

std::vector<std::vector<std::uint64_t>> null_space(const ModPrime& f, ModMatrix a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::uint64_t inv = f.inv(a[r][c]);
    for (auto& x : a[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      std::uint64_t m = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(m, a[r][j]));
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<char> is_piv(cols, 0);
  for (int c : pivot_col) is_piv[c] = 1;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = f.neg(a[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

ModPoly char_poly(const ModPrime& f, ModMatrix a) {
  const std::size_t n = a.size();
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && a[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(a[piv], a[m]);
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i][piv], a[i][m]);
    }
    std::uint64_t inv = f.inv(a[m][m - 1]);
    for (std::size_t i = m + 1; i < n; ++i) {
      std::uint64_t u = f.mul(a[i][m - 1], inv);
      if (!u) continue;
      for (std::size_t j = 0; j < n; ++j) a[i][j] = f.sub(a[i][j], f.mul(u, a[m][j]));
      for (std::size_t j = 0; j < n; ++j) a[j][m] = f.add(a[j][m], f.mul(u, a[j][i]));
    }
  }
  // p_k = char poly of leading k x k block.
  std::vector<ModPoly> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    ModPoly cur(k + 1, 0);
    // (x - a[k-1][k-1]) p_{k-1}
    for (std::size_t i = 0; i < p[k - 1].size(); ++i) {
      cur[i + 1] = f.add(cur[i + 1], p[k - 1][i]);
      cur[i] = f.sub(cur[i], f.mul(a[k - 1][k - 1], p[k - 1][i]));
    }
    std::uint64_t prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod = f.mul(prod, a[k - i][k - i - 1]);
      std::uint64_t t = f.mul(prod, a[k - i - 1][k - 1]);
      for (std::size_t j = 0; j < p[k - i - 1].size(); ++j)
        cur[j] = f.sub(cur[j], f.mul(t, p[k - i - 1][j]));
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly poly_mod(const ModPrime& f, ModPoly a, const ModPoly& b) {
  trim(a);
  std::uint64_t inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    std::uint64_t c = f.mul(a.back(), inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    trim(a);
  }
  return a;
}

ModPoly poly_mulmod(const ModPrime& f, const ModPoly& a, const ModPoly& b, const ModPoly& m) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  return poly_mod(f, std::move(r), m);
}

ModPoly poly_powmod(const ModPrime& f, ModPoly base, std::uint64_t e, const ModPoly& m) {
  ModPoly r = poly_mod(f, {1}, m);
  base = poly_mod(f, base, m);
  while (e) {
    if (e & 1) r = poly_mulmod(f, r, base, m);
    base = poly_mulmod(f, base, base, m);
    e >>= 1;
  }
  return r;
}

ModPoly poly_gcd(const ModPrime& f, ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_mod(f, a, b);
    std::swap(a, b);
  }
  if (!a.empty()) {
    std::uint64_t inv = f.inv(a.back());
    for (auto& x : a) x = f.mul(x, inv);
  }
  return a;
}

ModPoly poly_div(const ModPrime& f, ModPoly a, const ModPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  ModPoly q(a.size() - b.size() + 1, 0);
  std::uint64_t inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    std::uint64_t c = f.mul(a.back(), inv);
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    a.pop_back();
    trim(a);
    if (a.size() < b.size()) break;
  }
  return q;
}

static void split_roots(const ModPrime& f, const ModPoly& g, std::mt19937_64& rng,
                 std::vector<std::uint64_t>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(f.mul(f.neg(g[0]), f.inv(g[1])));
    return;
  }
  while (true) {
    std::uint64_t a = rng() % f.q;
    ModPoly h = poly_powmod(f, {a, 1}, (f.q - 1) / 2, g);
    if (h.empty()) h = {0};
    h[0] = f.sub(h[0], 1);
    ModPoly d = poly_gcd(f, g, h);
    if (d.size() > 1 && d.size() < g.size()) {
      split_roots(f, d, rng, out);
      split_roots(f, poly_div(f, g, d), rng, out);
      return;
    }
  }
}

std::vector<std::uint64_t> poly_roots(const ModPrime& f, const ModPoly& p, std::mt19937_64& rng) {
  ModPoly g = p;
  trim(g);
  if (g.empty()) throw DomainError("roots of the zero polynomial");
  std::vector<std::uint64_t> out;
  // zero is handled separately since x^q - x splitting below assumes q odd
  if (g[0] == 0) {
    out.push_back(0);
    std::size_t k = 0;
    while (g[k] == 0) ++k;
    g.erase(g.begin(), g.begin() + static_cast<long>(k));
  }
  if (g.size() > 1) {
    ModPoly xq = poly_powmod(f, {0, 1}, f.q, g);
    xq.resize(std::max<std::size_t>(xq.size(), 2), 0);
    xq[1] = f.sub(xq[1], 1);
    ModPoly d = poly_gcd(f, g, xq);
    ModPoly d2 = d;
    if (d2.size() > 1) {
      // remove a possible factor x (already recorded)
      if (d2[0] == 0) d2 = poly_div(f, d2, {0, 1});
      split_roots(f, d2, rng, out);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace indres
