#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "indres/classfun.hpp"
#include "indres/errors.hpp"
#include "indres/subgroups.hpp"
#include "support.hpp"

using namespace indres;

namespace {

FiniteGroup::Ptr subgroup(const FiniteGroup& g, const IndexSet& s, const std::string& name) {
  const ElementTable& el = g.elements();
  std::vector<Permutation> gens;
  for (auto i : generating_set(el, s)) gens.push_back(el.perm(i));
  return FiniteGroup::make(g.degree(), gens, name);
}

}  // namespace

TEST_CASE("induction by matrix and by class sums agree, Frobenius reciprocity") {
  for (auto [gname, p] : std::vector<std::pair<std::string, std::uint64_t>>{{"S4", 2}, {"A5", 2}, {"A5", 5}, {"SL2(3)", 3}}) {
    CAPTURE(gname);
    auto g = named(gname);
    const ElementTable& el = g->elements();
    auto h = subgroup(*g, normalizer(el, sylow(el, whole_group(el), p)), "N");
    Restriction r(h, g);
    const auto& th = h->table();
    const auto& tg = g->table();
    for (std::size_t i = 0; i < th.num_irr(); ++i) {
      auto psi = VirtualCharacter::irreducible(th, i);
      auto ind = r.induce(psi);
      CHECK(ind == induce_exact(psi, *h, *g));
      CHECK(ind.degree(tg) == th.degree(i) * (g->order() / h->order()));
      for (std::size_t j = 0; j < tg.num_irr(); ++j)
        CHECK(r.restrict(VirtualCharacter::irreducible(tg, j))[i] == ind[j]);
    }
  }
}

TEST_CASE("decomposition and inner products") {
  auto g = named("S4");
  const auto& t = g->table();
  std::vector<Cyclotomic> reg(g->num_classes(), Cyclotomic::integer(0));
  reg[0] = Cyclotomic::integer(24);
  auto v = decompose(reg, t);
  for (std::size_t i = 0; i < t.num_irr(); ++i) CHECK(v[i] == t.degree(i));
  CHECK(inner_product(t.irr()[3], t.irr()[3], t) == Cyclotomic::integer(1));
  CHECK(inner_product(t.irr()[3], t.irr()[2], t).is_zero());
  std::vector<Cyclotomic> bad(g->num_classes(), Cyclotomic::integer(0));
  bad[0] = Cyclotomic::integer(1);
  CHECK_THROWS_AS(decompose(bad, t), DomainError);
}

TEST_CASE("duals and virtual arithmetic") {
  auto g = named("C6");
  const auto& t = g->table();
  for (std::size_t i = 0; i < t.num_irr(); ++i) {
    auto chi = VirtualCharacter::irreducible(t, i);
    auto d = dual_character(chi, t);
    CHECK(dual_character(d, t) == chi);
    CHECK(d[t.dual(i)] == 1);
  }
  auto a = VirtualCharacter::irreducible(t, 1);
  CHECK((a - a).is_zero());
  auto other = VirtualCharacter::irreducible(named("S3")->table(), 0);
  CHECK_THROWS(a + other);
}

TEST_CASE("outer products index i * r_h + j") {
  auto g = named("S3");
  auto h = named("C3xS3");
  auto p = FiniteGroup::direct_product(g, h);
  const auto &tg = g->table(), &th = h->table(), &tp = p->table();
  auto x = outer_product(VirtualCharacter::irreducible(tg, 2), tg, VirtualCharacter::irreducible(th, 4), th, tp);
  CHECK(x[2 * th.num_irr() + 4] == 1);
  CHECK(x.degree(tp) == tg.degree(2) * th.degree(4));
}

TEST_CASE("M_l counts") {
  auto t = named("A5")->table();
  // degrees 1,3,3,4,5 mod 5: 1 -> l=1, 3 -> l=2 (3 = -2), 4 -> l=1
  auto m = ml_counts(t, 5, false);
  CHECK(m[1] == 2);
  CHECK(m[2] == 2);
}
