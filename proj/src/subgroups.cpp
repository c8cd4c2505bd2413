#include "indres/subgroups.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "indres/errors.hpp"

namespace indres {

namespace {

// Reusable membership marks keyed by epoch, sized to the largest table seen.
struct Marks {
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;
  void reset(std::size_t n) {
    if (stamp.size() < n) stamp.assign(n, 0), epoch = 0;
    if (++epoch == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
  }
  bool test_set(std::uint32_t i) {
    if (stamp[i] == epoch) return false;
    stamp[i] = epoch;
    return true;
  }
};

thread_local Marks marks;

std::uint64_t hash_set(const IndexSet& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : s) h = (h ^ x) * 1099511628211ULL;
  return h;
}

}  // namespace

IndexSet closure(const ElementTable& t, const std::vector<std::uint32_t>& gens) {
  return join(t, IndexSet{0}, gens);
}

IndexSet join(const ElementTable& t, const IndexSet& a, const std::vector<std::uint32_t>& extra) {
  std::vector<std::uint32_t> gens = generating_set(t, a);
  for (auto g : extra)
    if (g != 0) gens.push_back(g);
  marks.reset(t.size());
  std::vector<std::uint32_t> out;
  out.push_back(0);
  marks.test_set(0);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto g : gens) {
      auto y = t.multiply(out[i], g);
      if (marks.test_set(y)) out.push_back(y);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const IndexSet& s, std::uint32_t x) { return std::binary_search(s.begin(), s.end(), x); }

bool is_subset(const IndexSet& small, const IndexSet& big) {
  return small.size() <= big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

IndexSet intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

std::vector<std::uint32_t> generating_set(const ElementTable& t, const IndexSet& s) {
  std::vector<std::uint32_t> gens;
  if (s.size() <= 1) return gens;
  IndexSet span{0};
  for (auto x : s) {
    if (contains(span, x)) continue;
    gens.push_back(x);
    // closure of gens, computed directly to avoid recursion through join()
    marks.reset(t.size());
    std::vector<std::uint32_t> out{0};
    marks.test_set(0);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (auto g : gens) {
        auto y = t.multiply(out[i], g);
        if (marks.test_set(y)) out.push_back(y);
      }
    std::sort(out.begin(), out.end());
    span = std::move(out);
    if (span.size() == s.size()) break;
  }
  return gens;
}

IndexSet whole_group(const ElementTable& t) {
  IndexSet r(t.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint32_t>(i);
  return r;
}

IndexSet centralizer(const ElementTable& t, std::uint32_t x, const IndexSet* within) {
  IndexSet r;
  auto test = [&](std::uint32_t g) {
    if (t.multiply(g, x) == t.multiply(x, g)) r.push_back(g);
  };
  if (within)
    for (auto g : *within) test(g);
  else
    for (std::uint32_t g = 0; g < t.size(); ++g) test(g);
  return r;
}

IndexSet conjugate(const ElementTable& t, const IndexSet& k, std::uint32_t g) {
  IndexSet r;
  r.reserve(k.size());
  for (auto x : k) r.push_back(t.conjugate(x, g));
  std::sort(r.begin(), r.end());
  return r;
}

IndexSet normalizer(const ElementTable& t, const IndexSet& k, const IndexSet* within) {
  auto gens = generating_set(t, k);
  IndexSet r;
  auto test = [&](std::uint32_t g) {
    for (auto x : gens)
      if (!contains(k, t.conjugate(x, g))) return;
    r.push_back(g);
  };
  if (within)
    for (auto g : *within) test(g);
  else
    for (std::uint32_t g = 0; g < t.size(); ++g) test(g);
  return r;
}

IndexSet sylow(const ElementTable& t, const IndexSet& y, std::uint64_t p) {
  std::uint64_t target = 1, n = y.size();
  while (n % p == 0) n /= p, target *= p;
  IndexSet s{0};
  while (s.size() < target) {
    IndexSet n_s = normalizer(t, s, &y);
    std::int64_t pick = -1;
    for (auto g : n_s) {
      if (contains(s, g)) continue;
      if (contains(s, t.power(g, static_cast<long long>(p)))) {
        pick = g;
        break;
      }
    }
    INDRES_ASSERT(pick >= 0, "Sylow construction found no extending element");
    s = join(t, s, {static_cast<std::uint32_t>(pick)});
  }
  INDRES_ASSERT(s.size() == target, "Sylow subgroup has wrong order");
  return s;
}

ConjugateOrbit conjugate_orbit(const ElementTable& t, const IndexSet& k,
                               const std::vector<std::uint32_t>& acting) {
  ConjugateOrbit orb;
  std::unordered_multimap<std::uint64_t, std::size_t> seen;
  auto find = [&](const IndexSet& s) -> bool {
    auto [lo, hi] = seen.equal_range(hash_set(s));
    for (auto it = lo; it != hi; ++it)
      if (orb.members[it->second] == s) return true;
    return false;
  };
  orb.members.push_back(k);
  orb.witnesses.push_back(0);
  seen.emplace(hash_set(k), 0);
  for (std::size_t i = 0; i < orb.members.size(); ++i)
    for (auto g : acting) {
      IndexSet c = conjugate(t, orb.members[i], g);
      if (find(c)) continue;
      seen.emplace(hash_set(c), orb.members.size());
      orb.members.push_back(std::move(c));
      orb.witnesses.push_back(t.multiply(orb.witnesses[i], g));
    }
  return orb;
}

std::int64_t conjugate_into(const ElementTable& t, const IndexSet& a, const IndexSet& b,
                            const std::vector<std::uint32_t>& acting) {
  if (a.size() > b.size() || b.size() % a.size() != 0) return -1;
  auto orb = conjugate_orbit(t, b, acting);
  for (std::size_t i = 0; i < orb.members.size(); ++i)
    if (is_subset(a, orb.members[i])) return t.inverse(orb.witnesses[i]);
  return -1;
}

}  // namespace indres
