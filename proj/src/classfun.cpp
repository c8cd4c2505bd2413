#include "indres/classfun.hpp"

#include <mutex>

#include "indres/errors.hpp"

namespace indres {

VirtualCharacter VirtualCharacter::zero(const CharTable& t) {
  return VirtualCharacter(t.id(), IntVec(t.num_irr(), 0));
}

VirtualCharacter VirtualCharacter::irreducible(const CharTable& t, std::size_t i, long sign) {
  IntVec c(t.num_irr(), 0);
  c.at(i) = sign;
  return VirtualCharacter(t.id(), std::move(c));
}

void VirtualCharacter::check_same(const VirtualCharacter& o) const {
  if (table_ != o.table_ || c_.size() != o.c_.size())
    throw DomainError("virtual characters belong to different tables");
}

VirtualCharacter VirtualCharacter::operator+(const VirtualCharacter& o) const {
  check_same(o);
  VirtualCharacter r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

VirtualCharacter VirtualCharacter::operator-(const VirtualCharacter& o) const { return *this + (-o); }

VirtualCharacter VirtualCharacter::operator-() const {
  VirtualCharacter r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

VirtualCharacter VirtualCharacter::operator*(const BigInt& k) const {
  VirtualCharacter r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

bool VirtualCharacter::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

BigInt VirtualCharacter::degree(const CharTable& t) const {
  if (t.id() != table_) throw DomainError("table mismatch");
  BigInt d = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) d += c_[i] * t.degree(i);
  return d;
}

std::vector<Cyclotomic> VirtualCharacter::values(const CharTable& t) const {
  if (t.id() != table_) throw DomainError("table mismatch");
  std::vector<Cyclotomic> v(t.num_classes());
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    Cyclotomic s(t.classes()[c].rep_order);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) s += t.value(i, c) * c_[i];
    v[c] = s;
  }
  return v;
}

Cyclotomic inner_product(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b,
                         const CharTable& t) {
  if (a.size() != t.num_classes() || b.size() != t.num_classes())
    throw DomainError("class function does not match the class list");
  Cyclotomic s(1);
  for (std::size_t c = 0; c < a.size(); ++c)
    s += a[c] * b[c].conj() * BigInt(static_cast<unsigned long>(t.classes()[c].size));
  return s.div_exact(BigInt(static_cast<unsigned long>(t.order())));
}

VirtualCharacter decompose(const std::vector<Cyclotomic>& values, const CharTable& t) {
  IntVec c(t.num_irr());
  for (std::size_t i = 0; i < t.num_irr(); ++i) {
    Cyclotomic ip = inner_product(values, t.irr()[i], t);
    if (!ip.is_rational()) throw DomainError("class function is not a virtual character");
    c[i] = ip.rational_part();
  }
  VirtualCharacter r(t.id(), std::move(c));
  // all values must be reproduced exactly
  auto back = r.values(t);
  for (std::size_t k = 0; k < back.size(); ++k)
    if (back[k] != values[k]) throw DomainError("class function is not in the span of Irr");
  return r;
}

VirtualCharacter dual_character(const VirtualCharacter& chi, const CharTable& t) {
  if (chi.table() != t.id()) throw DomainError("table mismatch");
  IntVec c(chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i) c[t.dual(i)] = chi[i];
  return VirtualCharacter(t.id(), std::move(c));
}

std::vector<int> class_fusion(const FiniteGroup& sub, const FiniteGroup& ambient) {
  std::vector<int> f(sub.num_classes());
  for (std::size_t c = 0; c < f.size(); ++c) {
    f[c] = ambient.class_of(sub.cls(static_cast<int>(c)).rep);
    if (f[c] < 0) throw DomainError("subgroup element not found in ambient group");
  }
  return f;
}

namespace {

const Embedding& embedding_for(std::uint64_t e) {
  static std::mutex mu;
  static std::map<std::uint64_t, Embedding> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(e);
  if (it == cache.end()) it = cache.emplace(e, Embedding::for_exponent(e)).first;
  return it->second;
}

}  // namespace

std::vector<std::vector<long long>> induction_coefficients(const CharTable& sub, const CharTable& amb,
                                                           const std::vector<int>& fusion) {
  const Embedding& E = embedding_for(amb.exponent());
  const ModPrime& f = E.f;
  auto si = sub.image(f, E.w, E.e);
  auto ai = amb.image(f, E.w, E.e);
  const std::size_t rs = sub.num_classes(), ra = amb.num_irr();
  // weight[c] = |K_c| / |sub|; conjugation handled through inverse classes
  std::uint64_t inv_order = f.inv(sub.order() % f.q);
  std::vector<std::uint64_t> wt(rs);
  std::vector<int> conj_cls(rs);
  for (std::size_t c = 0; c < rs; ++c) {
    wt[c] = f.mul(sub.classes()[c].size % f.q, inv_order);
    conj_cls[c] = amb.inverse_class(fusion[c]);
  }
  std::vector<std::vector<long long>> m(sub.num_irr(), std::vector<long long>(ra));
  for (std::size_t i = 0; i < sub.num_irr(); ++i)
    for (std::size_t j = 0; j < ra; ++j) {
      std::uint64_t s = 0;
      for (std::size_t c = 0; c < rs; ++c) s = f.add(s, f.mul(f.mul(wt[c], si[i][c]), ai[j][conj_cls[c]]));
      long long v = f.lift(s);
      m[i][j] = v;
    }
  return m;
}

Restriction::Restriction(FiniteGroup::Ptr sub, FiniteGroup::Ptr ambient)
    : sub_(std::move(sub)), amb_(std::move(ambient)) {
  fusion_ = class_fusion(*sub_, *amb_);
  m_ = induction_coefficients(sub_->table(), amb_->table(), fusion_);
}

VirtualCharacter Restriction::induce(const VirtualCharacter& psi) const {
  const CharTable &ts = sub_->table(), &ta = amb_->table();
  if (psi.table() != ts.id()) throw DomainError("character is not over the subgroup table");
  IntVec c(ta.num_irr(), 0);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (psi[i] == 0) continue;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (m_[i][j]) c[j] += psi[i] * static_cast<long>(m_[i][j]);
  }
  return VirtualCharacter(ta.id(), std::move(c));
}

VirtualCharacter Restriction::restrict(const VirtualCharacter& chi) const {
  const CharTable &ts = sub_->table(), &ta = amb_->table();
  if (chi.table() != ta.id()) throw DomainError("character is not over the ambient table");
  IntVec c(ts.num_irr(), 0);
  for (std::size_t j = 0; j < chi.size(); ++j) {
    if (chi[j] == 0) continue;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (m_[i][j]) c[i] += chi[j] * static_cast<long>(m_[i][j]);
  }
  return VirtualCharacter(ts.id(), std::move(c));
}

VirtualCharacter induce_exact(const VirtualCharacter& psi, const FiniteGroup& sub,
                              const FiniteGroup& amb) {
  const CharTable &ts = sub.table(), &ta = amb.table();
  auto fusion = class_fusion(sub, amb);
  auto pv = psi.values(ts);
  std::vector<Cyclotomic> acc(ta.num_classes());
  for (std::size_t c = 0; c < ta.num_classes(); ++c) acc[c] = Cyclotomic(ta.classes()[c].rep_order);
  for (std::size_t k = 0; k < ts.num_classes(); ++k)
    acc[fusion[k]] += pv[k] * BigInt(static_cast<unsigned long>(ts.classes()[k].size));
  // Ind psi (C) = |G| / (|H| |C|) * sum over H-classes K inside C of |K| psi(K)
  for (std::size_t c = 0; c < ta.num_classes(); ++c) {
    BigInt num = static_cast<unsigned long>(amb.order());
    BigInt den = BigInt(static_cast<unsigned long>(sub.order())) * static_cast<unsigned long>(ta.classes()[c].size);
    acc[c] = (acc[c] * num).div_exact(den);
  }
  return decompose(acc, ta);
}

VirtualCharacter outer_product(const VirtualCharacter& chi, const CharTable& tg,
                               const VirtualCharacter& theta, const CharTable& th,
                               const CharTable& product) {
  if (chi.table() != tg.id() || theta.table() != th.id()) throw DomainError("table mismatch");
  if (product.num_irr() != tg.num_irr() * th.num_irr()) throw DomainError("not the product table");
  IntVec c(product.num_irr(), 0);
  for (std::size_t i = 0; i < chi.size(); ++i)
    for (std::size_t j = 0; j < theta.size(); ++j) c[i * th.num_irr() + j] = chi[i] * theta[j];
  return VirtualCharacter(product.id(), std::move(c));
}

VirtualCharacter pi_phi(const VirtualCharacter& chi, const Restriction& g_over_l, std::size_t phi) {
  const FiniteGroup &L = g_over_l.sub(), &G = g_over_l.ambient();
  // normality: L is a union of G-classes of the right total size
  {
    std::vector<char> hit(G.num_classes(), 0);
    for (int c : g_over_l.fusion()) hit[c] = 1;
    std::uint64_t total = 0;
    for (std::size_t c = 0; c < hit.size(); ++c)
      if (hit[c]) total += G.cls(static_cast<int>(c)).size;
    if (total != L.order()) throw DomainError("subgroup is not normal");
  }
  const auto& m = g_over_l.matrix();
  if (chi.table() != G.table().id()) throw DomainError("table mismatch");
  IntVec c(chi.size(), 0);
  for (std::size_t j = 0; j < chi.size(); ++j)
    if (m[phi][j] != 0) c[j] = chi[j];
  return VirtualCharacter(chi.table(), std::move(c));
}

std::map<int, int> ml_counts(const CharTable& t, std::uint64_t p, bool p_prime_part,
                             const std::vector<std::size_t>* subset, std::uint64_t multiplier) {
  std::map<int, int> out;
  const int top = p == 2 ? 1 : static_cast<int>((p - 1) / 2);
  for (int l = 1; l <= top; ++l) out[l] = 0;
  std::vector<std::size_t> all;
  if (!subset) {
    for (std::size_t i = 0; i < t.num_irr(); ++i) all.push_back(i);
    subset = &all;
  }
  for (auto i : *subset) {
    BigInt d = t.degree(i);
    if (p_prime_part)
      while (mpz_divisible_ui_p(d.get_mpz_t(), p)) d /= static_cast<unsigned long>(p);
    std::uint64_t r = mpz_fdiv_ui(d.get_mpz_t(), p);
    for (int l = 1; l <= top; ++l) {
      std::uint64_t ml = (multiplier % p) * static_cast<std::uint64_t>(l) % p;
      if (r == ml || r == (p - ml) % p) {
        if (r != 0) ++out[l];
        break;
      }
    }
  }
  return out;
}

}  // namespace indres
