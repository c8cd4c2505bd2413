#include "indres/correspondence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "indres/errors.hpp"

namespace indres {

namespace {

std::vector<std::uint32_t> generator_indices(const FiniteGroup& x) {
  const ElementTable& t = x.elements();
  std::vector<std::uint32_t> out;
  for (const auto& g : x.group().generators()) out.push_back(t.index_of(g.images()));
  return out;
}

// Keeps the members not strictly contained in another member; sorted by size
// descending, then lexicographically.
std::vector<IndexSet> maximal_members(std::vector<IndexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<IndexSet> out;
  for (auto& s : sets) {
    bool covered = false;
    for (const auto& o : out)
      if (o.size() > s.size() && is_subset(s, o)) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(std::move(s));
  }
  return out;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) n /= p, r *= p;
  return r;
}

std::uint64_t p_prime_part(std::uint64_t n, std::uint64_t p) { return n / p_part(n, p); }

IntVec unit(std::size_t n, std::size_t i, long s = 1) {
  IntVec v(n, 0);
  v[i] = s;
  return v;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec neg(const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

}  // namespace

IndexSet transfer(const ElementTable& from, const IndexSet& s, const ElementTable& to) {
  IndexSet out;
  out.reserve(s.size());
  for (auto i : s) out.push_back(to.index_of(from[i]));
  std::sort(out.begin(), out.end());
  return out;
}

IntersectionSetMaxima intersection_set_maxima(const FiniteGroup& g, const IndexSet& P, const IndexSet& H) {
  const ElementTable& t = g.elements();
  if (!is_subset(normalizer(t, P), H)) throw PreconditionError("H does not contain N_G(P)");
  IntersectionSetMaxima out;
  if (H.size() == t.size()) return out;
  auto orbit = conjugate_orbit(t, P, generator_indices(g));
  std::vector<IndexSet> found;
  std::vector<std::uint32_t> wit;
  for (std::size_t i = 0; i < orbit.members.size(); ++i) {
    const auto w = orbit.witnesses[i];
    if (contains(H, w)) continue;
    found.push_back(intersect(P, orbit.members[i]));
    wit.push_back(t.inverse(w));
  }
  out.maxima = maximal_members(found);
  for (const auto& m : out.maxima)
    for (std::size_t i = 0; i < found.size(); ++i)
      if (is_subset(m, found[i])) {
        out.witnesses.push_back(wit[i]);
        break;
      }
  return out;
}

Qualifier::Qualifier(const FiniteGroup& x, std::vector<IndexSet> maxima, bool all_qualify)
    : x_(x), maxima_(std::move(maxima)), all_(all_qualify) {
  class_ok_.assign(x.num_classes(), all_ ? 1 : 0);
  for (const auto& m : maxima_)
    for (auto e : m) class_ok_[x.class_of_index(e)] = 1;
  orbits_.resize(maxima_.size());
}

bool Qualifier::element_qualifies(std::uint32_t y) const { return class_ok_[x_.class_of_index(y)] != 0; }

bool Qualifier::qualifies(const IndexSet& r) const {
  if (all_) return true;
  const ElementTable& t = x_.elements();
  for (auto e : r)
    if (!element_qualifies(e)) return false;
  const auto gens = generator_indices(x_);
  for (const auto& m : maxima_)
    if (m.size() % r.size() == 0 && conjugate_into(t, r, m, gens) >= 0) return true;
  return false;
}

std::vector<IndexSet> Qualifier::maximal_inside(const IndexSet& tsub) const {
  if (all_) return {tsub};
  const ElementTable& t = x_.elements();
  std::vector<IndexSet> cands;
  for (std::size_t k = 0; k < maxima_.size(); ++k) {
    if (orbits_[k].empty()) orbits_[k] = conjugate_orbit(t, maxima_[k], generator_indices(x_)).members;
    for (const auto& m : orbits_[k]) cands.push_back(intersect(tsub, m));
  }
  return maximal_members(std::move(cands));
}

std::vector<IndexSet> qualifying_elementary_subgroups(const FiniteGroup& x, std::uint64_t p, const Qualifier& q) {
  const ElementTable& t = x.elements();
  // one class per cyclic subgroup up to conjugacy
  std::vector<int> reps;
  std::set<int> seen;
  for (std::size_t c = 0; c < x.num_classes(); ++c) {
    const auto o = x.cls(static_cast<int>(c)).rep_order;
    int key = static_cast<int>(c);
    for (std::uint64_t k = 1; k < o; ++k)
      if (std::gcd(k, o) == 1) key = std::min(key, x.power_class(static_cast<int>(c), static_cast<long long>(k)));
    if (seen.insert(key).second) reps.push_back(key);
  }
  std::sort(reps.begin(), reps.end());
  std::set<IndexSet> out;
  for (int c : reps) {
    const auto& cc = x.cls(c);
    const auto xi = t.index_of(cc.rep.images());
    const auto o = cc.rep_order;
    std::optional<IndexSet> cent;
    for (auto l : x.primes()) {
      if (o % l == 0) continue;
      if (!cent) cent = centralizer(t, xi);
      if (l != p) {
        const std::uint64_t pa = p_part(o, p), m = o / pa;
        const long long e = pa == 1 ? 0 : static_cast<long long>(m * inverse_mod(m % pa, pa));
        if (!q.element_qualifies(t.power(xi, e))) continue;
        out.insert(join(t, sylow(t, *cent, l), {xi}));
      } else {
        for (const auto& L : q.maximal_inside(sylow(t, *cent, p))) out.insert(join(t, L, {xi}));
      }
    }
  }
  return {out.begin(), out.end()};
}

IntLattice induced_span(const FiniteGroup::Ptr& x, const std::vector<IndexSet>& subgroups) {
  const ElementTable& t = x->elements();
  const std::size_t r = x->table().num_irr();
  std::vector<IntVec> gens;
  for (const auto& e : subgroups) {
    std::vector<Permutation> perms;
    for (auto i : generating_set(t, e)) perms.push_back(t.perm(i));
    if (perms.empty()) perms.push_back(t.perm(0));
    auto eg = FiniteGroup::make(x->degree(), perms, "E");
    Restriction res(eg, x);
    for (const auto& row : res.matrix()) {
      IntVec v(r);
      for (std::size_t j = 0; j < r; ++j) v[j] = static_cast<long>(row[j]);
      gens.push_back(std::move(v));
    }
  }
  return IntLattice::from_generators(r, gens);
}

IntLattice build_induced_lattice(const FiniteGroup::Ptr& x, std::uint64_t p, const Qualifier& q) {
  if (!q.all() && q.maxima().empty()) return IntLattice(x->table().num_irr());
  return induced_span(x, qualifying_elementary_subgroups(*x, p, q));
}

bool brauer_completeness_check(const FiniteGroup::Ptr& g) {
  Qualifier q(*g, {}, true);
  // the prime only steers the enumeration; with every subgroup qualifying any
  // prime divisor gives all maximal elementary subgroups
  const std::uint64_t p = g->primes().empty() ? 2 : g->primes().front();
  return build_induced_lattice(g, p, q) == IntLattice::full(g->table().num_irr());
}

std::vector<IndexSet> all_subgroups(const FiniteGroup& x, std::uint64_t budget) {
  if (x.order() > budget) throw ResourceError("group too large for subgroup enumeration");
  const ElementTable& t = x.elements();
  std::vector<std::uint32_t> cyc_gens;
  std::set<IndexSet> cyclic;
  for (std::uint32_t y = 1; y < t.size(); ++y)
    if (cyclic.insert(closure(t, {y})).second) cyc_gens.push_back(y);
  std::set<IndexSet> subs{IndexSet{0}};
  std::vector<IndexSet> queue{IndexSet{0}};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto y : cyc_gens) {
      if (contains(queue[i], y)) continue;
      IndexSet j = join(t, queue[i], {y});
      if (subs.insert(j).second) queue.push_back(std::move(j));
    }
  }
  return {subs.begin(), subs.end()};
}

IntLattice brute_induced_lattice(const FiniteGroup::Ptr& x, std::uint64_t p, const IndexSet& P,
                                 const std::function<bool(const IndexSet&)>& in_s, std::uint64_t budget) {
  std::vector<IndexSet> chosen;
  for (const auto& L : all_subgroups(*x, budget)) {
    IndexSet q = intersect(L, P);
    if (q.size() != p_part(L.size(), p)) continue;
    if (in_s(q)) chosen.push_back(L);
  }
  if (chosen.empty()) return IntLattice(x->table().num_irr());
  return induced_span(x, chosen);
}

const char* property_name(Property p) {
  switch (p) {
    case Property::IRC: return "irc";
    case Property::WIRC: return "wirc";
    case Property::WIRCstar: return "wircstar";
    case Property::pRes: return "pres";
    case Property::pInd: return "pind";
  }
  return "";
}

std::optional<Property> parse_property(const std::string& s) {
  for (auto p : {Property::IRC, Property::WIRC, Property::WIRCstar, Property::pRes, Property::pInd})
    if (s == property_name(p)) return p;
  return std::nullopt;
}

std::vector<QuotientInvariants> QuotientReport::bracket_q1() const {
  std::vector<QuotientInvariants> out;
  for (const auto& b : blocks)
    if (static_cast<std::size_t>(b.defect) == top_defect) out.push_back(b.q1);
  return out;
}

std::vector<QuotientInvariants> QuotientReport::bracket_q2() const {
  std::vector<QuotientInvariants> out;
  for (const auto& b : blocks)
    if (static_cast<std::size_t>(b.defect) == top_defect) out.push_back(b.q2);
  return out;
}

std::unique_ptr<Analysis> Analysis::make(FiniteGroup::Ptr g, std::uint64_t p, const std::vector<Permutation>& p_gens,
                                         std::optional<std::vector<Permutation>> h_gens, bool with_lattices,
                                         std::optional<CharTable> h_table) {
  const ElementTable& t = g->elements();
  std::vector<std::uint32_t> pg;
  for (const auto& x : p_gens) {
    if (t.find(x.images()) < 0) throw DomainError("P is not a subgroup of G");
    pg.push_back(t.index_of(x.images()));
  }
  IndexSet P = closure(t, pg);
  std::optional<IndexSet> H;
  if (h_gens) {
    std::vector<std::uint32_t> hg;
    for (const auto& x : *h_gens) {
      if (t.find(x.images()) < 0) throw DomainError("H is not a subgroup of G");
      hg.push_back(t.index_of(x.images()));
    }
    H = closure(t, hg);
  }
  return make(std::move(g), p, P, H, with_lattices, std::move(h_table));
}

std::unique_ptr<Analysis> Analysis::make(FiniteGroup::Ptr g, std::uint64_t p, const IndexSet& P,
                                         std::optional<IndexSet> H, bool with_lattices,
                                         std::optional<CharTable> h_table) {
  std::unique_ptr<Analysis> a(new Analysis());
  const ElementTable& t = g->elements();
  if (!is_power_of(P.size(), p)) throw PreconditionError("P is not a p-subgroup");
  a->g_ = g;
  a->p_ = p;
  a->P_ = P;
  a->H_ = H ? *H : normalizer(t, P);
  if (!is_subset(P, a->H_)) throw PreconditionError("P is not contained in H");
  if (a->H_.size() == t.size()) {
    a->h_ = g;
  } else {
    std::vector<Permutation> perms;
    for (auto i : generating_set(t, a->H_)) perms.push_back(t.perm(i));
    a->h_ = FiniteGroup::make(g->degree(), perms, g->name() + ".H");
    if (h_table) a->h_->install_table(std::move(*h_table));
  }
  a->P_h_ = transfer(t, P, a->h_->elements());
  a->s_ = intersection_set_maxima(*g, P, a->H_);
  for (const auto& m : a->s_.maxima) a->s_h_.push_back(transfer(t, m, a->h_->elements()));
  a->compute(with_lattices);
  return a;
}

void Analysis::compute(bool with_lattices) {
  red_g_ = ModularReduction::make(p_, g_->exponent());
  bg_ = compute_blocks(*g_, p_, red_g_);
  bh_ = compute_blocks(*h_, p_, red_g_);
  corr_.clear();
  for (const auto& e : bh_) corr_.push_back(brauer_correspondent(*h_, e, *g_, bg_, red_g_));
  sg_ = char_subsets(*g_, p_, P_, bg_);
  sh_ = char_subsets(*h_, p_, P_h_, bh_);
  res_ = std::make_unique<Restriction>(h_, g_);
  const std::size_t rg = g_->table().num_irr(), rh = h_->table().num_irr();
  ig_ = IntLattice(rg);
  ih_ = IntLattice(rh);
  if (with_lattices && !s_.maxima.empty()) {
    ig_ = build_induced_lattice(g_, p_, Qualifier(*g_, s_.maxima));
    ih_ = build_induced_lattice(h_, p_, Qualifier(*h_, s_h_));
  }
}

IntVec Analysis::restrict_vec(const IntVec& chi) const {
  const auto& m = res_->matrix();
  IntVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < chi.size(); ++j)
      if (m[i][j] && chi[j] != 0) out[i] += chi[j] * static_cast<long>(m[i][j]);
  return out;
}

IntVec Analysis::induce_vec(const IntVec& phi) const {
  const auto& m = res_->matrix();
  IntVec out(g_->table().num_irr(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (phi[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j)
      if (m[i][j]) out[j] += phi[i] * static_cast<long>(m[i][j]);
  }
  return out;
}

IntVec Analysis::proj_p(const IntVec& phi) const {
  IntVec out(phi.size(), 0);
  for (auto i : sh_.all) out[i] = phi[i];
  return out;
}

std::optional<std::size_t> Analysis::correspondent_of(std::size_t b) const {
  for (std::size_t e = 0; e < bh_.size(); ++e)
    if (corr_[e] && *corr_[e] == b && bh_[e].defect == bg_[b].defect) return e;
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> Analysis::block_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t b = 0; b < bg_.size(); ++b) {
    if (bg_[b].defect_group.size() != P_.size()) continue;
    if (!conjugate_into_subgroup(*g_, bg_[b].defect_group, P_)) continue;
    if (auto e = correspondent_of(b)) out.emplace_back(b, *e);
  }
  return out;
}

QuotientReport Analysis::quotients() const {
  const std::size_t rh = h_->table().num_irr();
  QuotientReport q;
  const IntLattice cp = IntLattice::coordinate(rh, sh_.high).sum(ih_);
  q.q1 = quotient_invariants(IntLattice::coordinate(rh, sh_.all), ih_.restrict_to(sh_.all));
  q.q2 = quotient_invariants(IntLattice::coordinate(rh, sh_.all), cp.restrict_to(sh_.all));
  for (auto e : sh_.blocks) {
    BlockQuotient bq;
    bq.block = e;
    bq.defect = bh_[e].defect;
    bq.chars = bh_[e].chars;
    bq.q1 = quotient_invariants(IntLattice::coordinate(rh, bq.chars), ih_.restrict_to(bq.chars));
    bq.q2 = quotient_invariants(IntLattice::coordinate(rh, bq.chars), cp.restrict_to(bq.chars));
    q.blocks.push_back(std::move(bq));
  }
  std::sort(q.blocks.begin(), q.blocks.end(), [](const BlockQuotient& a, const BlockQuotient& b) {
    return a.defect != b.defect ? a.defect > b.defect : a.chars.front() < b.chars.front();
  });
  q.top_defect = static_cast<std::size_t>(valuation(static_cast<std::uint64_t>(P_.size()), p_));
  return q;
}

std::optional<std::vector<std::size_t>> least_perfect_matching(const std::vector<std::vector<char>>& adj,
                                                               std::size_t right) {
  const std::size_t n = adj.size();
  if (n != right) return std::nullopt;
  std::vector<std::size_t> fixed;
  std::vector<char> used(right, 0);
  // can rows from..n-1 be matched into the unused columns?
  auto feasible = [&](std::size_t from) {
    std::vector<long> owner(right, -1);
    std::function<bool(std::size_t, std::vector<char>&)> aug = [&](std::size_t i, std::vector<char>& vis) {
      for (std::size_t j = 0; j < right; ++j) {
        if (!adj[i][j] || used[j] || vis[j]) continue;
        vis[j] = 1;
        if (owner[j] < 0 || aug(static_cast<std::size_t>(owner[j]), vis)) {
          owner[j] = static_cast<long>(i);
          return true;
        }
      }
      return false;
    };
    for (std::size_t i = from; i < n; ++i) {
      std::vector<char> vis(right, 0);
      if (!aug(i, vis)) return false;
    }
    return true;
  };
  if (!feasible(0)) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    bool done = false;
    for (std::size_t j = 0; j < right && !done; ++j) {
      if (!adj[i][j] || used[j]) continue;
      used[j] = 1;
      if (feasible(i + 1)) {
        fixed.push_back(j);
        done = true;
      } else {
        used[j] = 0;
      }
    }
    if (!done) return std::nullopt;
  }
  return fixed;
}

namespace {

struct LevelSets {
  std::vector<std::size_t> g0, gp, h0, hp;
};

std::vector<std::size_t> height_split(const CharTable& t, const Block& b, std::uint64_t p, bool zero) {
  std::vector<std::size_t> out;
  for (auto i : b.chars)
    if ((height(t, i, p, b) == 0) == zero) out.push_back(i);
  return out;
}

}  // namespace

Verdict Analysis::check(Property prop, std::optional<std::size_t> g_block) const {
  Verdict v;
  const CharTable &tg = g_->table(), &th = h_->table();
  const std::size_t rg = tg.num_irr(), rh = th.num_irr();
  LevelSets s;
  if (!g_block) {
    s = {sg_.zero, sg_.high, sh_.zero, sh_.high};
  } else {
    const std::size_t b = *g_block;
    auto e = correspondent_of(b);
    if (!e) {
      v.certificate = "block has no Brauer correspondent of equal defect";
      return v;
    }
    s.g0 = height_split(tg, bg_[b], p_, true);
    s.gp = height_split(tg, bg_[b], p_, false);
    s.h0 = height_split(th, bh_[*e], p_, true);
    s.hp = height_split(th, bh_[*e], p_, false);
  }
  const IntLattice lh_w = IntLattice::coordinate(rh, s.hp).sum(ih_);
  const IntLattice lg_w = IntLattice::coordinate(rg, s.gp).sum(ig_);
  if (prop == Property::pRes) {
    for (auto chi : s.gp)
      if (!lh_w.contains(proj_p(restrict_vec(unit(rg, chi))))) {
        v.certificate = "chi " + std::to_string(chi);
        return v;
      }
    v.holds = true;
    return v;
  }
  if (prop == Property::pInd) {
    for (auto phi : s.hp)
      if (!lg_w.contains(induce_vec(unit(rh, phi)))) {
        v.certificate = "phi " + std::to_string(phi);
        return v;
      }
    v.holds = true;
    return v;
  }
  if (s.g0.size() != s.h0.size()) {
    v.certificate = "cardinality " + std::to_string(s.g0.size()) + " vs " + std::to_string(s.h0.size());
    return v;
  }
  const std::size_t n = s.g0.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<std::vector<int>> sign(n, std::vector<int>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    if (prop == Property::WIRCstar) {
      const IntVec chi = unit(rg, s.g0[a]);
      for (std::size_t b = 0; b < n; ++b) {
        const IntVec ind = induce_vec(unit(rh, s.h0[b]));
        if (lg_w.contains(sub(ind, chi))) sign[a][b] = 1;
        else if (lg_w.contains(sub(neg(ind), chi))) sign[a][b] = -1;
        adj[a][b] = sign[a][b] != 0;
      }
    } else {
      const IntLattice& L = prop == Property::IRC ? ih_ : lh_w;
      const IntVec t = proj_p(restrict_vec(unit(rg, s.g0[a])));
      for (std::size_t b = 0; b < n; ++b) {
        const IntVec phi = unit(rh, s.h0[b]);
        if (L.contains(sub(phi, t))) sign[a][b] = 1;
        else if (L.contains(sub(neg(phi), t))) sign[a][b] = -1;
        adj[a][b] = sign[a][b] != 0;
      }
    }
  }
  auto m = least_perfect_matching(adj, n);
  if (!m) {
    v.certificate = "no perfect matching";
    return v;
  }
  v.holds = true;
  for (std::size_t a = 0; a < n; ++a) v.matching.push_back({s.g0[a], s.h0[(*m)[a]], sign[a][(*m)[a]]});
  return v;
}

bool Analysis::theorem26_selftest(std::string* why) const {
  const std::size_t rg = g_->table().num_irr(), rh = h_->table().num_irr();
  for (auto phi : sh_.all) {
    IntVec e = unit(rh, phi);
    if (!ih_.contains(sub(proj_p(restrict_vec(induce_vec(e))), e))) {
      if (why) *why = "Proj Res Ind phi - phi outside I(H) for phi " + std::to_string(phi);
      return false;
    }
  }
  std::vector<IntVec> gens;
  for (auto phi : sh_.all) gens.push_back(induce_vec(unit(rh, phi)));
  const IntLattice span = IntLattice::from_generators(rg, gens).sum(ig_);
  for (auto chi : sg_.all)
    if (!span.contains(unit(rg, chi))) {
      if (why) *why = "chi " + std::to_string(chi) + " outside Ind C(H,P) + I(G)";
      return false;
    }
  return true;
}

bool Analysis::block_split_check(std::string* why) const {
  auto check = [&](const IntLattice& L, const std::vector<Block>& blocks, const char* side) {
    IntLattice acc(L.dim());
    for (const auto& b : blocks) acc = acc.sum(L.restrict_to(b.chars));
    if (acc == L) return true;
    if (why) *why = std::string("block splitting fails on ") + side;
    return false;
  };
  return check(ig_, bg_, "G") && check(ih_, bh_, "H");
}

bool Analysis::degree_congruences(const Verdict& v, std::string* why) const {
  const CharTable &tg = g_->table(), &th = h_->table();
  const std::uint64_t m = p_prime_part(g_->order() / h_->order(), p_) % p_;
  for (const auto& pr : v.matching) {
    auto part = [&](BigInt d) {
      while (mpz_divisible_ui_p(d.get_mpz_t(), p_)) d /= static_cast<unsigned long>(p_);
      return static_cast<std::uint64_t>(mpz_fdiv_ui(d.get_mpz_t(), p_));
    };
    const std::uint64_t lhs = part(tg.degree(pr.chi));
    std::uint64_t rhs = m * part(th.degree(pr.phi)) % p_;
    if (pr.sign < 0) rhs = (p_ - rhs) % p_;
    if (lhs != rhs) {
      if (why) *why = "degree congruence fails for chi " + std::to_string(pr.chi);
      return false;
    }
  }
  return true;
}

Analysis::MlTable Analysis::isaacs_navarro(std::optional<std::size_t> g_block) const {
  MlTable out;
  const CharTable &tg = g_->table(), &th = h_->table();
  out.m = p_prime_part(g_->order() / h_->order(), p_);
  std::vector<std::size_t> g0 = sg_.zero, h0 = sh_.zero;
  if (g_block) {
    g0 = height_split(tg, bg_[*g_block], p_, true);
    h0.clear();
    if (auto e = correspondent_of(*g_block)) h0 = height_split(th, bh_[*e], p_, true);
  }
  out.g = ml_counts(tg, p_, true, &g0, out.m);
  out.h = ml_counts(th, p_, true, &h0, 1);
  out.equal = out.g == out.h;
  return out;
}

IntVec omega(const Analysis& a, std::size_t g_block, std::size_t h_block) {
  const CharTable &tg = a.g().table(), &th = a.h().table();
  const std::size_t rh = th.num_irr();
  IntVec out(tg.num_irr() * rh, 0);
  const auto& m = a.res().matrix();
  for (auto i : a.g_blocks()[g_block].chars)
    for (auto j : a.h_blocks()[h_block].chars)
      out[i * rh + static_cast<std::size_t>(th.dual(j))] += static_cast<long>(m[j][i]);
  return out;
}

IntVec dual_product(const IntVec& mu, const CharTable& tg, const CharTable& th) {
  const std::size_t rg = tg.num_irr(), rh = th.num_irr();
  IntVec out(mu.size(), 0);
  for (std::size_t i = 0; i < rg; ++i)
    for (std::size_t k = 0; k < rh; ++k)
      out[static_cast<std::size_t>(tg.dual(i)) * rh + static_cast<std::size_t>(th.dual(k))] = mu[i * rh + k];
  return out;
}

IntVec mu_induce(const IntVec& mu, const CharTable& tg, const CharTable& th, std::size_t phi) {
  const std::size_t rg = tg.num_irr(), rh = th.num_irr();
  IntVec out(rg, 0);
  const auto d = static_cast<std::size_t>(th.dual(phi));
  for (std::size_t i = 0; i < rg; ++i) out[i] = mu[i * rh + d];
  return out;
}

IntVec mu_restrict(const IntVec& mu, const CharTable& tg, const CharTable& th, std::size_t chi) {
  const std::size_t rh = th.num_irr();
  IntVec out(rh, 0);
  const auto d = static_cast<std::size_t>(tg.dual(chi));
  for (std::size_t k = 0; k < rh; ++k) out[k] = mu[d * rh + k];
  return out;
}

IntLattice diagonal_induced_lattice(const Analysis& a, const FiniteGroup::Ptr& product) {
  const std::size_t rg = a.g().table().num_irr(), rh = a.h().table().num_irr();
  // diagonal copies of the maxima inside G x H
  const ElementTable &tgel = a.g().elements(), &tp = product->elements();
  const std::size_t n = a.g().degree();
  std::vector<IndexSet> dmax;
  for (const auto& m : a.s().maxima) {
    IndexSet d;
    for (auto x : m) {
      std::vector<Point> img(2 * n);
      for (std::size_t i = 0; i < n; ++i) img[i] = tgel[x][i], img[n + i] = static_cast<Point>(n + tgel[x][i]);
      d.push_back(tp.index_of(PermView(img.data(), img.size())));
    }
    std::sort(d.begin(), d.end());
    dmax.push_back(std::move(d));
  }
  if (dmax.empty()) return IntLattice(rg * rh);
  return build_induced_lattice(product, a.p(), Qualifier(*product, dmax));
}

PropertyGResult check_property_G(const Analysis& a, std::size_t g_block, const FiniteGroup::Ptr& product,
                                 const IntVec& mu, const IntLattice* diag) {
  PropertyGResult r;
  IntLattice own;
  const CharTable &tg = a.g().table(), &th = a.h().table();
  const std::size_t rg = tg.num_irr(), rh = th.num_irr();
  if (mu.size() != rg * rh) throw DomainError("witness has the wrong length");
  auto e = a.correspondent_of(g_block);
  if (!e) throw PreconditionError("block has no Brauer correspondent");
  const Block &b = a.g_blocks()[g_block], &eb = a.h_blocks()[*e];
  std::vector<char> in_b(rg, 0), in_ebar(rh, 0);
  for (auto i : b.chars) in_b[i] = 1;
  for (auto j : eb.chars) in_ebar[static_cast<std::size_t>(th.dual(j))] = 1;
  std::vector<std::size_t> coords;
  for (std::size_t i = 0; i < rg; ++i)
    for (std::size_t k = 0; k < rh; ++k) {
      if (in_b[i] && in_ebar[k]) coords.push_back(i * rh + k);
      else if (mu[i * rh + k] != 0) throw DomainError("witness is not supported on the block pair");
    }
  const IntVec diff = sub(mu, omega(a, g_block, *e));

  const IntLattice& ip = diag ? *diag : (own = diagonal_induced_lattice(a, product));
  r.congruence = ip.project(coords).contains(diff);

  const IntVec mubar = dual_product(mu, tg, th);
  auto g0 = height_split(tg, b, a.p(), true);
  auto h0 = height_split(th, eb, a.p(), true);
  auto one_constituent = [](const IntVec& v, const std::vector<std::size_t>& zero) {
    int hits = 0;
    bool unit_mult = true;
    for (auto i : zero)
      if (v[i] != 0) {
        ++hits;
        unit_mult = unit_mult && abs(v[i]) == 1;
      }
    return hits == 1 && unit_mult;
  };
  r.constituents = true;
  for (auto phi : h0)
    if (!one_constituent(mu_induce(mu, tg, th, phi), g0)) {
      r.constituents = false;
      r.detail = "I_mu(phi " + std::to_string(phi) + ")";
      break;
    }
  if (r.constituents)
    for (auto chi : g0)
      if (!one_constituent(mu_restrict(mubar, tg, th, chi), h0)) {
        r.constituents = false;
        r.detail = "R_mubar(chi " + std::to_string(chi) + ")";
        break;
      }
  if (!r.congruence && r.detail.empty()) r.detail = "mu - omega outside the diagonal induced lattice";
  r.holds = r.congruence && r.constituents;
  return r;
}

QuotientGroup quotient_by_normal(const FiniteGroup& g, const IndexSet& nsub) {
  const ElementTable& t = g.elements();
  std::vector<int> coset(t.size(), -1);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (auto n : nsub) coset[t.multiply(n, x)] = id;
  }
  const std::size_t k = reps.size();
  auto action = [&](std::uint32_t s) {
    std::vector<long long> img(k);
    for (std::size_t c = 0; c < k; ++c) img[c] = coset[t.multiply(reps[c], s)];
    return Permutation::from_images(img, false);
  };
  std::vector<Permutation> gens;
  for (auto s : generator_indices(g)) gens.push_back(action(s));
  QuotientGroup q;
  q.group = FiniteGroup::make(k, gens, g.name() + "/N");
  const ElementTable& tq = q.group->elements();
  q.image.resize(t.size());
  for (std::uint32_t x = 0; x < t.size(); ++x) q.image[x] = tq.index_of(action(x).images());
  return q;
}

}  // namespace indres
