#include "indres/finite_group.hpp"

#include <algorithm>
#include <numeric>

#include "indres/char_table.hpp"
#include "indres/errors.hpp"

namespace indres {

FiniteGroup::~FiniteGroup() = default;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> r;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      r.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) r.push_back(n);
  return r;
}

FiniteGroup::Ptr FiniteGroup::make(std::size_t degree, std::vector<Permutation> gens,
                                   std::string name, std::uint64_t budget, std::size_t class_budget) {
  return make(PermGroup(degree, std::move(gens)), std::move(name), budget, class_budget);
}

FiniteGroup::Ptr FiniteGroup::make(PermGroup g, std::string name, std::uint64_t budget, std::size_t class_budget) {
  auto fg = std::make_shared<FiniteGroup>();
  fg->name_ = std::move(name);
  fg->group_ = std::move(g);
  fg->budget_ = budget;
  fg->class_budget_ = class_budget;
  if (fg->group_.order() > budget)
    throw ResourceError("group order " + fg->group_.order().get_str() +
                        " exceeds the order budget");
  fg->order_ = to_u64(fg->group_.order());
  fg->compute_classes();
  return fg;
}

const ElementTable& FiniteGroup::elements() const {
  std::call_once(elements_once_, [this] {
    elements_ = std::make_unique<ElementTable>(group_, budget_);
    if (is_product()) {
      class_index_.resize(elements_->size());
      for (std::size_t i = 0; i < elements_->size(); ++i) class_index_[i] = class_of((*elements_)[i]);
    }
  });
  return *elements_;
}

void FiniteGroup::compute_classes() {
  const ElementTable& t = elements();
  const std::size_t n = t.size();
  std::vector<std::uint32_t> gens;
  for (const auto& g : group_.generators()) gens.push_back(t.index_of(g.images()));
  std::vector<int> tmp(n, -1);
  std::vector<std::uint32_t> reps, sizes;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (tmp[i] >= 0) continue;
    int id = static_cast<int>(reps.size());
    std::vector<std::uint32_t> orbit{i};
    tmp[i] = id;
    std::uint32_t best = i;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (auto g : gens) {
        auto y = t.conjugate(orbit[k], g);
        if (tmp[y] >= 0) continue;
        tmp[y] = id;
        orbit.push_back(y);
        PermView a = t[y], b = t[best];
        if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) best = y;
      }
    reps.push_back(best);
    sizes.push_back(static_cast<std::uint32_t>(orbit.size()));
  }
  const std::size_t r = reps.size();
  std::vector<std::uint64_t> ord(r);
  for (std::size_t c = 0; c < r; ++c) ord[c] = t.order_of(reps[c]);
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (ord[a] != ord[b]) return ord[a] < ord[b];
    if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
    PermView x = t[reps[a]], y = t[reps[b]];
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  std::vector<int> newid(r);
  for (std::size_t c = 0; c < r; ++c) newid[perm[c]] = static_cast<int>(c);
  class_index_.resize(n);
  for (std::size_t i = 0; i < n; ++i) class_index_[i] = newid[tmp[i]];
  classes_.resize(r);
  full_power_.resize(r);
  for (std::size_t c = 0; c < r; ++c) {
    int old = perm[c];
    ConjClass& cc = classes_[c];
    cc.rep = t.perm(reps[old]);
    cc.size = sizes[old];
    cc.rep_order = ord[old];
    cc.centralizer_order = order_ / cc.size;
    auto& fp = full_power_[c];
    fp.resize(cc.rep_order);
    std::uint32_t x = 0;
    for (std::uint64_t k = 0; k < cc.rep_order; ++k) {
      fp[k] = class_index_[x];
      x = t.multiply(x, reps[old]);
    }
  }
  finish_class_data();
}

void FiniteGroup::finish_class_data() {
  const std::size_t r = classes_.size();
  primes_ = prime_factors(order_);
  inverse_.resize(r);
  exponent_ = 1;
  for (std::size_t c = 0; c < r; ++c) {
    auto& cc = classes_[c];
    inverse_[c] = full_power_[c][(cc.rep_order - 1) % cc.rep_order];
    exponent_ = std::lcm(exponent_, cc.rep_order);
    cc.power_map.clear();
    for (auto p : primes_) cc.power_map[p] = full_power_[c][p % cc.rep_order];
  }
}

FiniteGroup::Ptr FiniteGroup::direct_product(Ptr a, Ptr b, std::string name) {
  auto fg = std::make_shared<FiniteGroup>();
  fg->name_ = name.empty() ? a->name() + "x" + b->name() : std::move(name);
  const std::size_t na = a->degree(), nb = b->degree();
  auto embed = [&](const Permutation& x, const Permutation& y) {
    std::vector<long long> img(na + nb);
    for (std::size_t i = 0; i < na; ++i) img[i] = x[i];
    for (std::size_t i = 0; i < nb; ++i) img[na + i] = na + y[i];
    return Permutation::from_images(img, false);
  };
  std::vector<Permutation> gens;
  Permutation ida(na), idb(nb);
  for (const auto& g : a->group().generators()) gens.push_back(embed(g, idb));
  for (const auto& g : b->group().generators()) gens.push_back(embed(ida, g));
  fg->group_ = PermGroup(na + nb, gens);
  fg->order_ = a->order() * b->order();
  fg->budget_ = std::max<std::uint64_t>(fg->order_, kDefaultOrderBudget);
  fg->factor_a_ = a;
  fg->factor_b_ = b;
  const std::size_t ra = a->num_classes(), rb = b->num_classes();
  fg->classes_.resize(ra * rb);
  fg->full_power_.resize(ra * rb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < rb; ++j) {
      auto& cc = fg->classes_[i * rb + j];
      const auto &ci = a->cls(static_cast<int>(i)), &cj = b->cls(static_cast<int>(j));
      cc.rep = embed(ci.rep, cj.rep);
      cc.size = ci.size * cj.size;
      cc.rep_order = std::lcm(ci.rep_order, cj.rep_order);
      cc.centralizer_order = fg->order_ / cc.size;
      auto& fp = fg->full_power_[i * rb + j];
      fp.resize(cc.rep_order);
      for (std::uint64_t k = 0; k < cc.rep_order; ++k)
        fp[k] = a->power_class(static_cast<int>(i), static_cast<long long>(k)) * static_cast<int>(rb) +
                b->power_class(static_cast<int>(j), static_cast<long long>(k));
    }
  fg->finish_class_data();
  return fg;
}

int FiniteGroup::class_of(PermView g) const {
  if (g.size() != degree()) return -1;
  if (is_product()) {
    const std::size_t na = factor_a_->degree(), nb = factor_b_->degree();
    std::vector<Point> x(na), y(nb);
    for (std::size_t i = 0; i < na; ++i) {
      if (g[i] >= na) return -1;
      x[i] = g[i];
    }
    for (std::size_t i = 0; i < nb; ++i) {
      if (g[na + i] < na) return -1;
      y[i] = static_cast<Point>(g[na + i] - na);
    }
    int ca = factor_a_->class_of(PermView(x)), cb = factor_b_->class_of(PermView(y));
    if (ca < 0 || cb < 0) return -1;
    return ca * static_cast<int>(factor_b_->num_classes()) + cb;
  }
  std::int64_t i = elements().find(g);
  return i < 0 ? -1 : class_index_[i];
}

int FiniteGroup::class_of_index(std::uint32_t i) const {
  elements();
  return class_index_[i];
}

int FiniteGroup::power_class(int c, long long k) const {
  const auto& fp = full_power_[c];
  long long o = static_cast<long long>(fp.size());
  return fp[((k % o) + o) % o];
}

const CharTable& FiniteGroup::table() const {
  std::call_once(table_once_, [this] {
    if (!is_product() && classes_.size() > class_budget_)
      throw ResourceError(std::to_string(classes_.size()) +
                          " classes exceed the class budget; supply an external character table");
    if (is_product())
      table_ = std::make_unique<CharTable>(product_table(*this));
    else
      table_ = std::make_unique<CharTable>(dixon_schneider(*this));
  });
  return *table_;
}

void FiniteGroup::install_table(CharTable t) const {
  if (t.order() != order_) throw ConsistencyError("table order " + std::to_string(t.order()) +
                                                  " differs from group order " + std::to_string(order_));
  if (t.num_classes() != classes_.size()) throw ConsistencyError("table and group have different class counts");
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const auto& a = t.classes()[c];
    const auto& b = classes_[c];
    if (a.size != b.size || a.rep_order != b.rep_order || a.power_map != b.power_map)
      throw ConsistencyError("class " + std::to_string(c + 1) + " does not match the group");
  }
  bool installed = false;
  std::call_once(table_once_, [&] {
    table_ = std::make_unique<CharTable>(std::move(t));
    installed = true;
  });
  if (!installed) throw ConsistencyError("group already has a character table");
}

}  // namespace indres
