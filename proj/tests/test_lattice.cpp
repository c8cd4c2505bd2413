#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "indres/correspondence.hpp"
#include "indres/lattice.hpp"
#include "indres/subgroups.hpp"
#include "support.hpp"

using namespace indres;

namespace {

IntVec vec(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("hermite normal form") {
  auto l = IntLattice::from_generators(3, {vec({2, 4, 6}), vec({0, 3, 3}), vec({2, 7, 9})});
  CHECK(l.rank() == 2);
  CHECK(l.basis()[0] == vec({2, 1, 3}));
  CHECK(l.basis()[1] == vec({0, 3, 3}));
  CHECK(l.contains(vec({4, 11, 15})));
  CHECK_FALSE(l.contains(vec({1, 0, 0})));
}

TEST_CASE("quotient invariants") {
  auto full = IntLattice::full(3);
  auto sub = IntLattice::from_generators(3, {vec({2, 0, 0}), vec({0, 6, 0})});
  auto q = quotient_invariants(full, sub);
  CHECK(q.free_rank == 1);
  CHECK(q.torsion == IntVec{BigInt(2), BigInt(6)});
  CHECK(q.to_string() == "Z + Z/2 + Z/6");
  CHECK(quotient_invariants(full, full).to_string() == "0");
  CHECK(smith_invariants({vec({2, 4}), vec({6, 8})}) == IntVec{BigInt(2), BigInt(4)});
}

TEST_CASE("lattice operations are consistent") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int round = 0; round < 40; ++round) {
    std::vector<IntVec> a, b;
    for (int i = 0; i < 3; ++i) a.push_back(vec({d(rng), d(rng), d(rng), d(rng)}));
    for (int i = 0; i < 2; ++i) b.push_back(vec({d(rng), d(rng), d(rng), d(rng)}));
    auto la = IntLattice::from_generators(4, a), lb = IntLattice::from_generators(4, b);
    auto s = la.sum(lb);
    CHECK(s.contains(la));
    CHECK(s.contains(lb));
    CHECK(s == lb.sum(la));
    for (const auto& v : a) CHECK(la.contains(v));
    auto r = la.restrict_to({0, 2});
    for (const auto& v : r.basis()) {
      CHECK(v[1] == 0);
      CHECK(v[3] == 0);
      CHECK(la.contains(v));
    }
    CHECK(la.project({0, 1}).contains(la.restrict_to({0, 1})));
    // index of the sum in Z^4 divides that of each summand when full rank
    auto qa = quotient_invariants(IntLattice::full(4), s);
    CHECK(qa.free_rank == 4 - s.rank());
  }
}

TEST_CASE("Brauer induction spans Z Irr(G)") {
  for (const std::string name : {"S3", "S4", "A5", "Q8", "D8", "SL2(3)"}) {
    CAPTURE(name);
    CHECK(brauer_completeness_check(named(name)));
  }
}

TEST_CASE("elementary reduction equals the literal definition") {
  // every subgroup L with L cap P Sylow in L and L cap P in the intersection set
  for (auto [name, p] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"S4", 2}, {"S4", 3}, {"A5", 2}, {"A5", 5}, {"D12", 2}, {"SL2(3)", 2}, {"S3xS3", 3}, {"C2xA4", 3}}) {
    CAPTURE(name);
    CAPTURE(p);
    auto g = named(name);
    const ElementTable& el = g->elements();
    auto P = sylow(el, whole_group(el), p);
    auto a = Analysis::make(g, p, P);
    if (a->h_is_g()) continue;
    auto in_s = [&](const IndexSet& q) {
      if (!is_subset(q, a->P())) return false;
      for (std::uint32_t t = 0; t < el.size(); ++t)
        if (!contains(a->H_in_g(), t) && is_subset(q, conjugate(el, a->P(), t))) return true;
      return false;
    };
    CHECK(brute_induced_lattice(g, p, a->P(), in_s) == a->i_g());
    auto lh = brute_induced_lattice(a->h_ptr(), p, a->P_in_h(), [&](const IndexSet& q) {
      return in_s(transfer(a->h().elements(), q, el));
    });
    CHECK(lh == a->i_h());
  }
}

TEST_CASE("H = G gives the zero lattice") {
  auto g = named("S3");
  const ElementTable& el = g->elements();
  auto a = Analysis::make(g, 3, sylow(el, whole_group(el), 3), whole_group(el));
  CHECK(a->s().maxima.empty());
  CHECK(a->i_g().rank() == 0);
  CHECK(a->i_h().rank() == 0);
}

TEST_CASE("A5 at 5: the lattice in N(P) has rank 2") {
  auto g = named("A5");
  const ElementTable& el = g->elements();
  auto a = Analysis::make(g, 5, sylow(el, whole_group(el), 5));
  CHECK(a->h().order() == 10);
  REQUIRE(a->s().maxima.size() == 1);
  CHECK(a->s().maxima[0].size() == 1);
  CHECK(a->i_h().rank() == 2);
}
