#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "indres/char_table.hpp"
#include "indres/errors.hpp"
#include "indres/oracles.hpp"
#include "support.hpp"

using namespace indres;

namespace {

// Rows of the brute table in the class order of g, each value lifted to the
// group exponent so that rows compare as plain vectors.
std::vector<std::vector<Cyclotomic>> brute_rows(const FiniteGroup& g) {
  auto bt = brute_table(g.elements());
  std::vector<int> to(bt.classes.size());
  for (std::size_t c = 0; c < bt.classes.size(); ++c) to[c] = g.class_of_index(bt.classes[c].rep);
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& r : bt.irr) {
    std::vector<Cyclotomic> v(r.size());
    for (std::size_t c = 0; c < r.size(); ++c) v[to[c]] = r[c].lift(g.exponent());
    rows.push_back(v);
  }
  return rows;
}

std::vector<std::vector<Cyclotomic>> lifted(const CharTable& t, std::uint64_t e) {
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& r : t.irr()) {
    std::vector<Cyclotomic> v;
    for (const auto& x : r) v.push_back(x.lift(e));
    rows.push_back(v);
  }
  return rows;
}

bool row_less(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Cyclotomic& x, const Cyclotomic& y) { return x.less(y); });
}

}  // namespace

TEST_CASE("small tables") {
  auto s3 = named("S3");
  const auto& t = s3->table();
  REQUIRE(t.num_irr() == 3);
  CHECK(t.degree(0) == 1);
  CHECK(t.degree(1) == 1);
  CHECK(t.degree(2) == 2);
  CHECK(named("Q8")->table().num_irr() == 5);
  auto a5 = named("A5")->table();
  std::vector<long> degs;
  for (std::size_t i = 0; i < a5.num_irr(); ++i) degs.push_back(a5.degree(i).get_si());
  CHECK(degs == std::vector<long>{1, 3, 3, 4, 5});
}

TEST_CASE("tables agree with the lattice-method oracle up to row order") {
  for (const std::string name : {"S3", "S4", "A4", "A5", "S5", "D8", "D10", "D12", "Q8", "C6", "SL2(3)", "D8xC3",
                                 "C2xA4", "S3xS3", "C3xS3"}) {
    CAPTURE(name);
    auto g = named(name);
    auto a = brute_rows(*g);
    auto b = lifted(g->table(), g->exponent());
    std::sort(a.begin(), a.end(), row_less);
    std::sort(b.begin(), b.end(), row_less);
    CHECK(a == b);
  }
}

TEST_CASE("orthogonality across the corpus") {
  for (const auto& name : corpus_names()) {
    auto s = named_group(name);
    if (PermGroup(s.degree, s.gens).order() > 2000) continue;
    CAPTURE(name);
    auto g = FiniteGroup::make(s.degree, s.gens, s.name);
    CHECK_NOTHROW(g->table().verify());
    const auto& t = g->table();
    CHECK(t.num_irr() == g->num_classes());
    CHECK(t.degree(0) == 1);
    for (std::size_t i = 1; i < t.num_irr(); ++i) CHECK(t.degree(i - 1) <= t.degree(i));
    CHECK(g->order() % t.exponent() == 0);
  }
}

TEST_CASE("perturbed table is rejected") {
  auto g = named("S4");
  const auto& t = g->table();
  auto irr = t.irr();
  irr[1][1] = irr[1][1] + Cyclotomic::integer(2);
  CharTable bad(t.id(), t.order(), t.classes(), irr);
  CHECK_THROWS_AS(bad.verify(), IntegrityError);
}

TEST_CASE("installed tables must match the class list") {
  auto s4 = named("S4");
  auto s4b = named("S4");
  CHECK_NOTHROW(s4b->install_table(s4->table()));
  CHECK(s4b->table().id() == s4->table().id());
  CHECK_THROWS_AS(s4b->install_table(s4->table()), ConsistencyError);
  auto d12 = named("D12");  // order 12, 6 classes
  auto a4 = named("A4");    // order 12, 4 classes
  CHECK_THROWS_AS(a4->install_table(d12->table()), ConsistencyError);
  auto c6 = named("C6");
  auto s3 = named("S3");
  CHECK_THROWS_AS(s3->install_table(c6->table()), ConsistencyError);
}

TEST_CASE("product tables") {
  auto a = named("S3");
  auto b = named("Q8");
  auto p = FiniteGroup::direct_product(a, b);
  CHECK(p->order() == 48);
  const auto& t = p->table();
  CHECK(t.num_irr() == 15);
  CHECK_NOTHROW(t.verify());
  CHECK(t.degree(2 * 5 + 4) == 4);
}
