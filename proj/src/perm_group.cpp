#include "indres/perm_group.hpp"

#include "indres/errors.hpp"

namespace indres {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw FormatError("generator degree differs from group degree");
  schreier_sims();
}

static int first_moved(const Permutation& g) {
  for (std::size_t i = 0; i < g.degree(); ++i)
    if (g[i] != i) return static_cast<int>(i);
  return -1;
}

void PermGroup::rebuild_level(std::size_t i) {
  Level& L = levels_[i];
  L.gens.clear();
  for (std::size_t s = 0; s < strong_.size(); ++s) {
    bool fixes = true;
    for (std::size_t j = 0; j < i && fixes; ++j)
      if (strong_[s][levels_[j].point] != levels_[j].point) fixes = false;
    if (fixes) L.gens.push_back(static_cast<int>(s));
  }
  L.orbit.assign(1, L.point);
  L.slot.assign(degree_, -1);
  L.slot[L.point] = 0;
  L.transversal.assign(1, Permutation(degree_));
  for (std::size_t k = 0; k < L.orbit.size(); ++k) {
    for (int s : L.gens) {
      int img = strong_[s][L.orbit[k]];
      if (L.slot[img] >= 0) continue;
      L.slot[img] = static_cast<int>(L.orbit.size());
      L.orbit.push_back(img);
      L.transversal.push_back(L.transversal[k] * strong_[s]);
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g, std::size_t start) const {
  for (std::size_t i = start; i < levels_.size(); ++i) {
    const Level& L = levels_[i];
    int d = g[L.point];
    if (L.slot[d] < 0) return {g, i};
    g = g * L.transversal[L.slot[d]].inverse();
  }
  return {g, levels_.size()};
}

void PermGroup::schreier_sims() {
  for (const auto& g : gens_) {
    if (g.is_identity()) continue;
    bool dup = false;
    for (const auto& s : strong_) dup = dup || s == g;
    if (!dup) strong_.push_back(g);
  }
  for (const auto& s : strong_) {
    bool fixes_base = true;
    for (const auto& L : levels_) fixes_base = fixes_base && s[L.point] == L.point;
    if (fixes_base) {
      Level L;
      L.point = first_moved(s);
      levels_.push_back(std::move(L));
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_level(i);

  long long i = static_cast<long long>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    Level& L = levels_[i];
    for (std::size_t k = 0; !extended && k < L.orbit.size(); ++k) {
      for (std::size_t gi = 0; !extended && gi < L.gens.size(); ++gi) {
        const Permutation& s = strong_[L.gens[gi]];
        Permutation us = L.transversal[k] * s;
        const Permutation& v = L.transversal[L.slot[us[L.point]]];
        if (us == v) continue;
        Permutation h = us * v.inverse();
        auto [res, j] = strip(h, static_cast<std::size_t>(i) + 1);
        if (res.is_identity()) continue;
        strong_.push_back(res);
        if (j == levels_.size()) {
          Level nl;
          nl.point = first_moved(res);
          levels_.push_back(std::move(nl));
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) rebuild_level(l);
        i = static_cast<long long>(j);
        extended = true;
      }
    }
    if (!extended) --i;
  }
  order_ = 1;
  for (const auto& lv : levels_) order_ *= static_cast<unsigned long>(lv.orbit.size());
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  for (const auto& L : levels_) b.push_back(L.point);
  return b;
}

std::vector<std::size_t> PermGroup::orbit_lengths() const {
  std::vector<std::size_t> r;
  for (const auto& L : levels_) r.push_back(L.orbit.size());
  return r;
}

bool PermGroup::contains(PermView g) const {
  if (g.size() != degree_) return false;
  Permutation p(g);
  auto [res, j] = strip(p, 0);
  return j == levels_.size() && res.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  for (const auto& g : gens_)
    if (!other.contains(g)) return false;
  return true;
}

void PermGroup::for_each_element(const std::function<void(PermView)>& fn) const {
  // g = u_{k-1} * ... * u_0 with u_i from the transversal of level i.
  const std::size_t k = levels_.size();
  std::vector<Permutation> prefix(k + 1, Permutation(degree_));
  std::vector<std::size_t> pos(k, 0);
  if (k == 0) {
    fn(prefix[0].images());
    return;
  }
  // prefix[k] = identity; prefix[i] = prefix[i+1] * u_i.
  std::vector<Point> buf(degree_);
  long long lvl = static_cast<long long>(k) - 1;
  pos.assign(k, 0);
  for (long long l = lvl; l >= 0; --l) {
    compose_into(prefix[l + 1].images(), levels_[l].transversal[0].images(), buf.data());
    prefix[l] = Permutation(PermView(buf));
  }
  while (true) {
    fn(prefix[0].images());
    std::size_t l = 0;
    while (l < k && pos[l] + 1 == levels_[l].orbit.size()) ++l;
    if (l == k) break;
    ++pos[l];
    for (long long m = static_cast<long long>(l); m >= 0; --m) {
      if (static_cast<std::size_t>(m) < l) pos[m] = 0;
      compose_into(prefix[m + 1].images(), levels_[m].transversal[pos[m]].images(), buf.data());
      prefix[m] = Permutation(PermView(buf));
    }
  }
}

}  // namespace indres
