#include "indres/blocks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "indres/errors.hpp"

namespace indres {

ResidueField::ResidueField(std::uint64_t p, ModPoly f) : p_(p), d_(static_cast<int>(f.size()) - 1), f_(std::move(f)) {}

bool is_irreducible(const ModPrime& f, const ModPoly& poly) {
  const int d = static_cast<int>(poly.size()) - 1;
  if (d <= 0) return false;
  if (d == 1) return true;
  // Rabin: x^(p^d) = x mod poly and gcd(x^(p^(d/r)) - x, poly) = 1 for primes r | d
  auto frob = [&](int k) {
    ModPoly x = {0, 1};
    for (int i = 0; i < k; ++i) x = poly_powmod(f, x, f.q, poly);
    return x;
  };
  ModPoly full = frob(d);
  ModPoly xm = {0, 1};
  full.resize(std::max<std::size_t>(full.size(), 2), 0);
  full[1] = f.sub(full[1], 1);
  trim(full);
  if (!full.empty()) return false;
  for (auto r : prime_factors(static_cast<std::uint64_t>(d))) {
    ModPoly h = frob(d / static_cast<int>(r));
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = f.sub(h[1], 1);
    trim(h);
    if (h.empty()) return false;
    if (poly_gcd(f, poly, h).size() > 1) return false;
  }
  return true;
}

ResidueField ResidueField::make(std::uint64_t p, int d, int index) {
  ModPrime f{p};
  std::uint64_t limit = 1;
  for (int i = 0; i < d; ++i) limit *= p;
  // wraps around when fewer than index+1 irreducibles exist
  std::optional<ModPoly> first;
  int found = 0;
  for (std::uint64_t code = 0; code < limit; ++code) {
    ModPoly poly(d + 1, 0);
    std::uint64_t c = code;
    for (int i = 0; i < d; ++i) poly[i] = c % p, c /= p;
    poly[d] = 1;
    if (!is_irreducible(f, poly)) continue;
    if (!first) first = poly;
    if (found++ == index) return ResidueField(p, poly);
  }
  if (!first) throw InternalError("no irreducible polynomial found");
  return ResidueField(p, *first);
}

ResidueField::Elem ResidueField::one() const {
  Elem e(d_, 0);
  e[0] = 1;
  return e;
}

ResidueField::Elem ResidueField::scalar(std::uint64_t c) const {
  Elem e(d_, 0);
  e[0] = static_cast<std::uint32_t>(c % p_);
  return e;
}

ResidueField::Elem ResidueField::add(const Elem& a, const Elem& b) const {
  Elem r(d_);
  for (int i = 0; i < d_; ++i) r[i] = static_cast<std::uint32_t>((a[i] + b[i]) % p_);
  return r;
}

ResidueField::Elem ResidueField::mul(const Elem& a, const Elem& b) const {
  std::vector<std::uint64_t> t(2 * d_, 0);
  for (int i = 0; i < d_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < d_; ++j) t[i + j] = (t[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_;
  }
  for (int i = 2 * d_ - 1; i >= d_; --i) {
    std::uint64_t c = t[i];
    if (!c) continue;
    for (int j = 0; j <= d_; ++j) t[i - d_ + j] = (t[i - d_ + j] + (p_ - c) * f_[j]) % p_;
  }
  Elem r(d_);
  for (int i = 0; i < d_; ++i) r[i] = static_cast<std::uint32_t>(t[i]);
  return r;
}

ResidueField::Elem ResidueField::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool ResidueField::is_zero(const Elem& a) const {
  for (auto x : a)
    if (x) return false;
  return true;
}

std::uint64_t ResidueField::encode(const Elem& a) const {
  std::uint64_t v = 0;
  for (int i = d_ - 1; i >= 0; --i) v = v * p_ + a[i];
  return v;
}

ResidueField::Elem ResidueField::decode(std::uint64_t v) const {
  Elem e(d_);
  for (int i = 0; i < d_; ++i) e[i] = static_cast<std::uint32_t>(v % p_), v /= p_;
  return e;
}

ModularReduction ModularReduction::make(std::uint64_t p, std::uint64_t exponent, int variant) {
  ModularReduction r;
  r.m_ = exponent;
  std::uint64_t pa = 1, mp = exponent;
  while (mp % p == 0) mp /= p, pa *= p;
  r.mprime_ = mp;
  const int d = static_cast<int>(mult_order(p % mp == 0 ? 1 : p, mp));
  r.field_ = ResidueField::make(p, d, variant % 2);
  r.t_ = inverse_mod(pa % mp, mp);
  // beta: the first h in encoding order whose power h^((p^d-1)/m') has order m'
  std::uint64_t size = 1;
  for (int i = 0; i < d; ++i) size *= p;
  const std::uint64_t cof = (size - 1) / mp;
  auto mp_primes = prime_factors(mp);
  ResidueField::Elem beta = r.field_.one();
  for (std::uint64_t code = 1; code < size && mp > 1; ++code) {
    auto cand = r.field_.pow(r.field_.decode(code), cof);
    bool ok = true;
    for (auto q : mp_primes) ok = ok && r.field_.encode(r.field_.pow(cand, mp / q)) != 1;
    if (ok) {
      beta = cand;
      break;
    }
  }
  if (variant > 0 && mp > 2) {
    std::uint64_t k = 1;
    for (int seen = 0; seen < variant;) {
      ++k;
      if (std::gcd(k, mp) == 1) ++seen;
      if (k > 4 * mp) break;
    }
    if (std::gcd(k, mp) == 1) beta = r.field_.pow(beta, k);
  }
  r.beta_pow_.resize(mp);
  ResidueField::Elem cur = r.field_.one();
  for (std::uint64_t i = 0; i < mp; ++i) {
    r.beta_pow_[i] = cur;
    cur = r.field_.mul(cur, beta);
  }
  return r;
}

ResidueField::Elem ModularReduction::reduce(const Cyclotomic& v) const {
  if (v.is_rational()) return field_.scalar(mpz_fdiv_ui(v.rational_part().get_mpz_t(), field_.p()));
  if (m_ % v.modulus()) throw DomainError("value modulus does not divide the reduction exponent");
  const std::uint64_t step = m_ / v.modulus();
  std::vector<std::uint64_t> acc(field_.degree(), 0);
  const auto& c = v.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    std::uint64_t coef = mpz_fdiv_ui(c[k].get_mpz_t(), field_.p());
    if (!coef) continue;
    std::uint64_t j = (k * step) % m_;
    const auto& b = beta_pow_[(j % mprime_) * t_ % mprime_];
    for (int i = 0; i < field_.degree(); ++i) acc[i] = (acc[i] + coef * b[i]) % field_.p();
  }
  ResidueField::Elem e(field_.degree());
  for (int i = 0; i < field_.degree(); ++i) e[i] = static_cast<std::uint32_t>(acc[i]);
  return e;
}

namespace {

std::vector<ResidueField::Elem> central_character(const CharTable& t, std::size_t chi,
                                                  const ModularReduction& red) {
  std::vector<ResidueField::Elem> lam(t.num_classes());
  const BigInt deg = t.degree(chi);
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    Cyclotomic w = t.value(chi, c) * BigInt(static_cast<unsigned long>(t.classes()[c].size));
    if (!w.divisible_by(deg)) throw IntegrityError("central character value is not an algebraic integer");
    lam[c] = red.reduce(w.div_exact(deg));
  }
  return lam;
}

}  // namespace

std::vector<Block> compute_blocks(const FiniteGroup& g, std::uint64_t p) {
  return compute_blocks(g, p, ModularReduction::make(p, g.exponent()));
}

std::vector<Block> compute_blocks(const FiniteGroup& g, std::uint64_t p, const ModularReduction& red) {
  const CharTable& t = g.table();
  std::vector<Block> blocks;
  const int vg = valuation(g.order(), p);
  for (std::size_t i = 0; i < t.num_irr(); ++i) {
    auto lam = central_character(t, i, red);
    bool placed = false;
    for (auto& b : blocks)
      if (b.lambda == lam) {
        b.chars.push_back(i);
        placed = true;
        break;
      }
    if (!placed) {
      Block b;
      b.chars = {i};
      b.lambda = std::move(lam);
      blocks.push_back(std::move(b));
    }
  }
  const ElementTable& el = g.elements();
  for (auto& b : blocks) {
    int minv = vg;
    for (auto i : b.chars) minv = std::min(minv, valuation(t.degree(i), static_cast<unsigned long>(p)));
    b.defect = vg - minv;
    int best = -1, bestv = 0;
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
      if (t.classes()[c].rep_order % p == 0) continue;
      if (red.field().is_zero(b.lambda[c])) continue;
      int v = valuation(t.centralizer_order(c), p);
      if (best < 0 || v < bestv) best = static_cast<int>(c), bestv = v;
    }
    if (best < 0) throw InternalError("block has no defect class");
    b.defect_class = best;
    auto x = el.index_of(g.cls(best).rep.images());
    IndexSet cent = centralizer(el, x);
    b.defect_group = sylow(el, cent, p);
    std::uint64_t want = 1;
    for (int k = 0; k < b.defect; ++k) want *= p;
    if (b.defect_group.size() != want)
      throw InternalError("defect group order differs from p^defect");
  }
  return blocks;
}

std::optional<std::size_t> brauer_correspondent(const FiniteGroup& h, const Block& e,
                                                const FiniteGroup& g, const std::vector<Block>& g_blocks,
                                                const ModularReduction& red) {
  const auto fusion = [&] {
    std::vector<int> f(h.num_classes());
    for (std::size_t c = 0; c < f.size(); ++c) f[c] = g.class_of(h.cls(static_cast<int>(c)).rep);
    return f;
  }();
  const ResidueField& F = red.field();
  std::vector<ResidueField::Elem> lam(g.num_classes(), F.zero());
  for (std::size_t k = 0; k < fusion.size(); ++k) {
    if (fusion[k] < 0) throw DomainError("H is not a subgroup of G");
    lam[fusion[k]] = F.add(lam[fusion[k]], e.lambda[k]);
  }
  std::optional<std::size_t> hit;
  for (std::size_t b = 0; b < g_blocks.size(); ++b)
    if (g_blocks[b].lambda == lam) {
      if (hit) return std::nullopt;
      hit = b;
    }
  return hit;
}

int height(const CharTable& t, std::size_t chi, std::uint64_t p, const Block& b) {
  return valuation(t.degree(chi), static_cast<unsigned long>(p)) -
         (valuation(t.order(), p) - b.defect);
}

bool conjugate_into_subgroup(const FiniteGroup& x, const IndexSet& a, const IndexSet& b) {
  if (a.size() > b.size() || b.size() % a.size()) return false;
  const ElementTable& t = x.elements();
  std::vector<std::uint32_t> gens;
  for (const auto& g : x.group().generators()) gens.push_back(t.index_of(g.images()));
  std::vector<IndexSet> seen{a};
  std::unordered_set<std::uint64_t> keys;
  auto key = [](const IndexSet& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : s) h = (h ^ v) * 1099511628211ULL;
    return h;
  };
  std::multimap<std::uint64_t, std::size_t> index;
  index.emplace(key(a), 0);
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (is_subset(seen[i], b)) return true;
    for (auto g : gens) {
      IndexSet c = conjugate(t, seen[i], g);
      auto k = key(c);
      bool dup = false;
      for (auto [lo, hi] = index.equal_range(k); lo != hi; ++lo) dup = dup || seen[lo->second] == c;
      if (dup) continue;
      index.emplace(k, seen.size());
      seen.push_back(std::move(c));
    }
  }
  return false;
}

CharSubsets char_subsets(const FiniteGroup& g, std::uint64_t p, const IndexSet& P,
                         const std::vector<Block>& blocks) {
  CharSubsets s;
  const CharTable& t = g.table();
  const int target = valuation(g.order(), p) - valuation(static_cast<std::uint64_t>(P.size()), p);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const Block& b = blocks[bi];
    if (!conjugate_into_subgroup(g, b.defect_group, P)) continue;
    s.blocks.push_back(bi);
    for (auto i : b.chars) s.all.push_back(i);
  }
  std::sort(s.all.begin(), s.all.end());
  for (auto i : s.all) {
    if (valuation(t.degree(i), static_cast<unsigned long>(p)) == target)
      s.zero.push_back(i);
    else
      s.high.push_back(i);
  }
  return s;
}

}  // namespace indres
