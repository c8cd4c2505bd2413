#include "indres/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "indres/errors.hpp"
#include "indres/lattice.hpp"
#include "indres/subgroups.hpp"

namespace indres {

std::vector<BruteClass> brute_classes(const ElementTable& t, std::uint64_t budget) {
  if (t.size() > budget) throw ResourceError("group order exceeds the brute-force class budget");
  std::vector<char> seen(t.size(), 0);
  std::vector<BruteClass> out;
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t n = 0;
    for (std::uint32_t g = 0; g < t.size(); ++g) {
      auto y = t.conjugate(x, g);
      if (!seen[y]) seen[y] = 1, ++n;
    }
    out.push_back({x, n, t.order_of(x)});
  }
  return out;
}

namespace {

using Row = std::vector<Cyclotomic>;
using Rat = mpq_class;

struct Ctx {
  const ElementTable& t;
  std::vector<BruteClass> cls;
  std::vector<int> class_of;
  std::uint64_t e = 1;
  BigInt order;

  BigInt inner(const Row& a, const Row& b) const {
    Cyclotomic s(e);
    for (std::size_t c = 0; c < cls.size(); ++c) s += a[c] * b[c].conj() * BigInt(std::to_string(cls[c].size));
    s = s.div_exact(order);
    if (!s.is_rational()) throw InternalError("inner product is not rational");
    return s.rational_part();
  }
  IntVec flatten(const Row& v) const {
    IntVec out;
    for (const auto& x : v) {
      Cyclotomic y = x.modulus() == e ? x : x.lift(e);
      out.insert(out.end(), y.coeffs().begin(), y.coeffs().end());
    }
    return out;
  }
  Row unflatten(const IntVec& f) const {
    const std::size_t w = f.size() / cls.size();
    Row out;
    for (std::size_t c = 0; c < cls.size(); ++c) {
      std::vector<std::pair<long long, BigInt>> terms;
      for (std::size_t k = 0; k < w; ++k)
        if (f[c * w + k] != 0) terms.emplace_back(static_cast<long long>(k), f[c * w + k]);
      out.push_back(Cyclotomic::from_terms(e, terms));
    }
    return out;
  }
};

std::vector<IndexSet> every_subgroup(const ElementTable& t) {
  std::set<IndexSet> cyclic;
  std::vector<std::uint32_t> gens;
  for (std::uint32_t y = 1; y < t.size(); ++y)
    if (cyclic.insert(closure(t, {y})).second) gens.push_back(y);
  std::set<IndexSet> subs{IndexSet{0}};
  std::vector<IndexSet> queue{IndexSet{0}};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto y : gens) {
      if (contains(queue[i], y)) continue;
      IndexSet j = join(t, queue[i], {y});
      if (subs.insert(j).second) queue.push_back(std::move(j));
    }
  return {subs.begin(), subs.end()};
}

// LLL on a Gram matrix with exact rationals; returns the transformation rows.
std::vector<IntVec> lll_gram(std::vector<std::vector<BigInt>> g) {
  const std::size_t n = g.size();
  std::vector<IntVec> u(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  auto gso = [&](std::vector<std::vector<Rat>>& mu, std::vector<Rat>& b) {
    mu.assign(n, std::vector<Rat>(n, 0));
    b.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Rat s = Rat(g[i][j]);
        for (std::size_t k = 0; k < j; ++k) s -= mu[j][k] * mu[i][k] * b[k];
        mu[i][j] = s / b[j];
      }
      Rat s = Rat(g[i][i]);
      for (std::size_t k = 0; k < i; ++k) s -= mu[i][k] * mu[i][k] * b[k];
      b[i] = s;
    }
  };
  auto sub_row = [&](std::size_t i, std::size_t j, const BigInt& q) {  // b_i -= q b_j
    for (std::size_t k = 0; k < n; ++k) u[i][k] -= q * u[j][k];
    const BigInt gii = g[i][i] - 2 * q * g[i][j] + q * q * g[j][j];
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) g[i][k] -= q * g[j][k];
    g[i][i] = gii;
    for (std::size_t k = 0; k < n; ++k) g[k][i] = g[i][k];
  };
  std::vector<std::vector<Rat>> mu;
  std::vector<Rat> b;
  gso(mu, b);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      BigInt q;
      Rat m = mu[k][jj] + Rat(1, 2);
      mpz_fdiv_q(q.get_mpz_t(), m.get_num_mpz_t(), m.get_den_mpz_t());
      if (q != 0) {
        sub_row(k, jj, q);
        gso(mu, b);
      }
    }
    if (b[k] >= (Rat(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * b[k - 1]) {
      ++k;
    } else {
      std::swap(u[k], u[k - 1]);
      std::swap(g[k], g[k - 1]);
      for (auto& row : g) std::swap(row[k], row[k - 1]);
      gso(mu, b);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return u;
}

// All x with x^T g x == 1 (one of each +-pair), by Fincke-Pohst enumeration.
std::vector<IntVec> norm_one_vectors(const std::vector<std::vector<BigInt>>& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<Rat>> q(n, std::vector<Rat>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = Rat(g[i][j]);
  for (std::size_t i = 0; i < n; ++i) {  // q[i][i] = B_i, q[i][j] = mu_ji for j > i
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  std::vector<IntVec> out;
  IntVec x(n, 0);
  std::function<void(std::size_t, Rat)> rec = [&](std::size_t i, Rat left) {
    Rat c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c -= q[i][j] * Rat(x[j]);
    // (x_i - c)^2 q_ii <= left
    Rat r2 = left / q[i][i];
    BigInt lo, hi;
    {
      double w = std::sqrt(r2.get_d()) + 1;
      Rat lo_r = c - Rat(w), hi_r = c + Rat(w);
      mpz_fdiv_q(lo.get_mpz_t(), lo_r.get_num_mpz_t(), lo_r.get_den_mpz_t());
      mpz_cdiv_q(hi.get_mpz_t(), hi_r.get_num_mpz_t(), hi_r.get_den_mpz_t());
    }
    for (BigInt v = lo; v <= hi; ++v) {
      Rat d = Rat(v) - c;
      Rat used = d * d * q[i][i];
      if (used > left) continue;
      x[i] = v;
      if (i == 0) {
        if (left - used == 0) {
          bool first_nonzero_positive = false;
          for (std::size_t j = n; j-- > 0;)
            if (x[j] != 0) {
              first_nonzero_positive = x[j] > 0;
              break;
            }
          if (first_nonzero_positive) out.push_back(x);
        }
      } else {
        rec(i - 1, left - used);
      }
    }
    x[i] = 0;
  };
  rec(n - 1, Rat(1));
  return out;
}

}  // namespace

BruteTable brute_table(const ElementTable& t, std::uint64_t budget) {
  if (t.size() > budget) throw ResourceError("group order exceeds the brute-force table budget");
  Ctx cx{t, brute_classes(t, budget), {}, 1, BigInt(std::to_string(t.size()))};
  cx.class_of.assign(t.size(), -1);
  for (std::size_t c = 0; c < cx.cls.size(); ++c) {
    cx.e = std::lcm(cx.e, cx.cls[c].rep_order);
    for (std::uint32_t g = 0; g < t.size(); ++g) cx.class_of[t.conjugate(cx.cls[c].rep, g)] = static_cast<int>(c);
  }
  const std::size_t r = cx.cls.size();

  // Every linear character of a subgroup E is a faithful character of a
  // cyclic quotient E/K. Their inductions span the generalized characters.
  const auto subs = every_subgroup(t);
  std::set<IndexSet> seen_classes;
  std::vector<IntVec> gens;
  for (const auto& E : subs) {
    IndexSet canon = E;
    for (std::uint32_t g = 0; g < t.size(); ++g) canon = std::min(canon, conjugate(t, E, g));
    if (!seen_classes.insert(canon).second) continue;
    for (const auto& K : subs) {
      if (E.size() % K.size() != 0 || !is_subset(K, E)) continue;
      const std::uint64_t n = E.size() / K.size();
      bool normal = true;
      for (auto y : E)
        if (!is_subset(conjugate(t, K, y), K)) {
          normal = false;
          break;
        }
      if (!normal) continue;
      std::int64_t gen = -1;
      for (auto y : E) {
        std::uint64_t o = 1;
        std::uint32_t z = y;
        while (!contains(K, z)) z = t.multiply(z, y), ++o;
        if (o == n) {
          gen = y;
          break;
        }
      }
      if (gen < 0) continue;
      std::vector<long long> expo(t.size(), -1);
      std::uint32_t y = 0;
      for (std::uint64_t j = 0; j < n; ++j, y = t.multiply(y, static_cast<std::uint32_t>(gen)))
        for (auto k : K) expo[t.multiply(k, y)] = static_cast<long long>(j);
      for (std::uint64_t m = 1; m <= n; ++m) {
        if (std::gcd(m % n, n) != 1) continue;
        Row row(r, Cyclotomic(cx.e));
        for (std::size_t d = 0; d < r; ++d) {
          Cyclotomic s(cx.e);
          for (std::uint32_t g = 0; g < t.size(); ++g) {
            const long long j = expo[t.conjugate(cx.cls[d].rep, g)];
            if (j >= 0) s += Cyclotomic::root_of_unity(cx.e, (cx.e / n) * ((static_cast<std::uint64_t>(j) * m) % n));
          }
          row[d] = s.div_exact(BigInt(std::to_string(E.size())));
        }
        gens.push_back(cx.flatten(row));
      }
    }
  }
  const IntLattice lat = IntLattice::from_generators(gens.front().size(), gens);
  if (lat.rank() != r) throw InternalError("induced characters do not span the class functions");
  std::vector<Row> basis;
  for (const auto& v : lat.basis()) basis.push_back(cx.unflatten(v));
  std::vector<std::vector<BigInt>> gram(r, std::vector<BigInt>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram[i][j] = cx.inner(basis[i], basis[j]);

  const auto u = lll_gram(gram);
  std::vector<Row> red;
  for (const auto& ui : u) {
    Row v(r, Cyclotomic(cx.e));
    for (std::size_t k = 0; k < r; ++k)
      if (ui[k] != 0)
        for (std::size_t c = 0; c < r; ++c) v[c] = v[c] + basis[k][c] * ui[k];
    red.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram[i][j] = cx.inner(red[i], red[j]);

  BruteTable out;
  out.classes = cx.cls;
  out.exponent = cx.e;
  for (const auto& x : norm_one_vectors(gram)) {
    Row v(r, Cyclotomic(cx.e));
    for (std::size_t k = 0; k < r; ++k)
      if (x[k] != 0)
        for (std::size_t c = 0; c < r; ++c) v[c] = v[c] + red[k][c] * x[k];
    if (v[0].rational_part() < 0)
      for (auto& y : v) y = -y;
    out.irr.push_back(std::move(v));
  }
  if (out.irr.size() != r) throw InternalError("norm-one vectors do not form an orthonormal basis");

  // the degrees must reassemble the regular character
  for (std::size_t c = 0; c < r; ++c) {
    Cyclotomic s(cx.e);
    for (const auto& chi : out.irr) s += chi[c] * chi[0].rational_part();
    const bool ok = c == 0 ? s == Cyclotomic::integer(cx.order, cx.e) : s.is_zero();
    if (!ok) throw InternalError("brute-force table does not decompose the regular character");
  }
  std::sort(out.irr.begin(), out.irr.end(), [](const Row& a, const Row& b) {
    if (a[0].rational_part() != b[0].rational_part()) return a[0].rational_part() < b[0].rational_part();
    for (std::size_t c = 0; c < a.size(); ++c)
      if (a[c] != b[c]) return a[c].less(b[c]);
    return false;
  });
  return out;
}

}  // namespace indres
