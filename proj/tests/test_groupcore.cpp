#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "indres/errors.hpp"
#include "indres/oracles.hpp"
#include "indres/subgroups.hpp"
#include "support.hpp"

using namespace indres;

TEST_CASE("composition applies the left factor first") {
  auto a = Permutation::from_cycles(3, {{1, 2}});
  auto b = Permutation::from_cycles(3, {{2, 3}});
  auto ab = a * b;
  // 1 -> 2 -> 3
  CHECK(ab[0] == 2);
  CHECK(ab.conjugate_by(b) == b.inverse() * ab * b);
  CHECK((a * b).inverse() == b.inverse() * a.inverse());
}

TEST_CASE("orders of the corpus") {
  const std::map<std::string, std::uint64_t> expected = {
      {"S3", 6},      {"S5", 120},       {"A6", 360},   {"D10", 10},         {"Q8", 8},
      {"SL2(3)", 24}, {"SL2(11)", 1320}, {"M11", 7920}, {"5^(1+2):Q8", 1000}, {"PSU3(3)", 6048},
      {"SL3(3)", 5616}, {"M12", 95040}};
  for (const auto& [name, order] : expected) {
    auto s = named_group(name);
    CHECK_MESSAGE(PermGroup(s.degree, s.gens).order() == order, name);
  }
  CHECK_THROWS_AS(named_group("nope"), DomainError);
}

TEST_CASE("order budget") {
  auto s = symmetric_group(7);
  CHECK_THROWS_AS(FiniteGroup::make(s.degree, s.gens, "S7", 1000), ResourceError);
}

TEST_CASE("classes agree with orbits under conjugation") {
  for (const std::string name : {"S3", "S4", "S5", "A5", "D8", "Q8", "SL2(3)", "C2xA4", "S3xS3", "A6", "M11"}) {
    CAPTURE(name);
    auto g = named(name);
    const ElementTable& el = g->elements();
    auto brute = brute_classes(el, 10000);
    REQUIRE(brute.size() == g->num_classes());
    std::vector<int> hit(g->num_classes(), 0);
    for (const auto& c : brute) {
      const int k = g->class_of_index(c.rep);
      hit[k]++;
      CHECK(g->cls(k).size == c.size);
      CHECK(g->cls(k).rep_order == c.rep_order);
    }
    for (int h : hit) CHECK(h == 1);
    // sorted by (rep_order, size)
    for (std::size_t k = 1; k < g->num_classes(); ++k) {
      const auto &x = g->cls(k - 1), &y = g->cls(k);
      CHECK((x.rep_order < y.rep_order || (x.rep_order == y.rep_order && x.size <= y.size)));
    }
  }
}

TEST_CASE("power maps") {
  auto g = named("A5");
  for (std::size_t c = 0; c < g->num_classes(); ++c)
    for (const auto& [p, d] : g->cls(c).power_map)
      CHECK(g->class_of(g->cls(c).rep.pow(p)) == d);
}

TEST_CASE("sylow subgroups and normalizers") {
  struct Case {
    const char* name;
    std::uint64_t p, sylow, normalizer;
  };
  for (auto c : {Case{"S4", 2, 8, 8}, Case{"S4", 3, 3, 6}, Case{"A5", 2, 4, 12}, Case{"A5", 5, 5, 10},
                 Case{"M11", 2, 16, 16}, Case{"M11", 3, 9, 144}, Case{"SL2(11)", 2, 8, 24}}) {
    CAPTURE(c.name);
    CAPTURE(c.p);
    auto g = named(c.name);
    const ElementTable& el = g->elements();
    auto P = sylow(el, whole_group(el), c.p);
    CHECK(P.size() == c.sylow);
    CHECK(normalizer(el, P).size() == c.normalizer);
    CHECK(closure(el, generating_set(el, P)) == P);
  }
}

TEST_CASE("element table arithmetic") {
  auto g = named("S4");
  const ElementTable& el = g->elements();
  CHECK(el[0][0] == 0);
  for (std::uint32_t a = 0; a < el.size(); a += 5)
    for (std::uint32_t b = 0; b < el.size(); b += 3) {
      CHECK(el.perm(el.multiply(a, b)) == el.perm(a) * el.perm(b));
      CHECK(el.perm(el.conjugate(a, b)) == el.perm(a).conjugate_by(el.perm(b)));
    }
}

TEST_CASE("class budget") {
  auto s = symmetric_group(5);
  auto g = FiniteGroup::make(s.degree, s.gens, "S5", kDefaultOrderBudget, 3);
  CHECK_THROWS_AS(g->table(), ResourceError);
}
