#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "indres/correspondence.hpp"
#include "indres/errors.hpp"
#include "indres/subgroups.hpp"
#include "indres/suite.hpp"
#include "support.hpp"

using namespace indres;

namespace {

constexpr Property kAll[] = {Property::IRC, Property::WIRC, Property::WIRCstar, Property::pRes, Property::pInd};

IndexSet image_of(const IndexSet& s, const std::vector<std::uint32_t>& image) {
  IndexSet out;
  for (auto x : s) out.push_back(image[x]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("least perfect matching") {
  std::vector<std::vector<char>> adj = {{1, 1, 0}, {1, 0, 0}, {0, 1, 1}};
  auto m = least_perfect_matching(adj, 3);
  REQUIRE(m);
  CHECK(*m == std::vector<std::size_t>{1, 0, 2});
  adj[2] = {1, 0, 0};
  CHECK_FALSE(least_perfect_matching(adj, 3));
  CHECK_FALSE(least_perfect_matching({{1}}, 2));
}

TEST_CASE("H must contain the normalizer") {
  auto g = named("S4");
  const ElementTable& el = g->elements();
  auto P = sylow(el, whole_group(el), 3);
  CHECK_THROWS_AS(Analysis::make(g, 3, P, P), PreconditionError);
}

TEST_CASE("S4 at 2") {
  auto g = named("S4");
  const ElementTable& el = g->elements();
  auto a = Analysis::make(g, 2, sylow(el, whole_group(el), 2));
  CHECK(a->h().order() == 8);
  auto q = a->quotients();
  CHECK(q.q1.to_string() == "Z^2");
  CHECK(q.q2.to_string() == "Z^2");
  for (auto prop : kAll) CHECK(a->check(prop).holds);
  auto v = a->check(Property::IRC);
  CHECK(a->degree_congruences(v));
  CHECK(a->theorem26_selftest());
  CHECK(a->block_split_check());
  CHECK(a->isaacs_navarro().equal);
}

TEST_CASE("quotient by a normal subgroup inside P preserves the properties") {
  // G = S4, L = V4, P = H = D8; G/L = S3 with P/L = H/L = C2.
  auto g = named("S4");
  const ElementTable& el = g->elements();
  const IndexSet P = sylow(el, whole_group(el), 2);
  IndexSet v4;
  for (std::uint32_t x = 0; x < el.size(); ++x) {
    bool fixed_free_involution = el.order_of(x) == 2;
    for (std::size_t i = 0; i < 4 && fixed_free_involution; ++i) fixed_free_involution = el[x][i] != i;
    if (x == 0 || fixed_free_involution) v4.push_back(x);
  }
  REQUIRE(v4.size() == 4);
  REQUIRE(is_subset(v4, P));
  auto big = Analysis::make(g, 2, P, P);
  auto q = quotient_by_normal(*g, v4);
  REQUIRE(q.group->order() == 6);
  const ElementTable& qe = q.group->elements();
  const IndexSet Pq = image_of(P, q.image);
  CHECK(Pq.size() == 2);
  auto small = Analysis::make(q.group, 2, Pq, Pq);

  auto s3 = named("S3");
  const ElementTable& se = s3->elements();
  const IndexSet Ps = sylow(se, whole_group(se), 2);
  auto direct = Analysis::make(s3, 2, Ps, Ps);

  for (auto prop : kAll) {
    CAPTURE(property_name(prop));
    const bool up = big->check(prop).holds;
    const bool down = small->check(prop).holds;
    if (up) CHECK(down);
    CHECK(down == direct->check(prop).holds);
  }
  CHECK(small->quotients().q1 == direct->quotients().q1);
  CHECK(small->quotients().q2 == direct->quotients().q2);
  CHECK(qe.size() == 6);
}

TEST_CASE("block level verdicts and the correspondent") {
  auto g = named("M12");
  auto P = select_p(*g, 2, 4);
  auto a = Analysis::make(g, 2, P);
  CHECK(a->h().order() == 72);
  auto pairs = a->block_pairs();
  REQUIRE_FALSE(pairs.empty());
  for (auto [b, e] : pairs) {
    CHECK(a->correspondent_of(b) == e);
    for (auto prop : kAll) CHECK(a->check(prop, b).holds);
  }
  auto q = a->quotients();
  CHECK(q.q1.to_string() == "Z/2");
  CHECK(q.q2.to_string() == "Z/2");
}

TEST_CASE("a failing instance carries a certificate") {
  auto g = named("PSU3(3)");
  const ElementTable& el = g->elements();
  auto a = Analysis::make(g, 3, sylow(el, whole_group(el), 3));
  auto v = a->check(Property::IRC);
  CHECK_FALSE(v.holds);
  CHECK_FALSE(v.certificate.empty());
  CHECK(a->check(Property::WIRC).holds);
  CHECK(a->check(Property::pRes).holds);
  CHECK(a->check(Property::pInd).holds);
}

TEST_CASE("invariant parsing") {
  CHECK(parse_invariants("Z^2").free_rank == 2);
  CHECK(parse_invariants("Z/7 + Z^5").to_string() == "Z^5 + Z/7");
  CHECK(parse_invariants("0").to_string() == "0");
  CHECK_THROWS_AS(parse_invariants("Q"), FormatError);
  CHECK_THROWS_AS(reference_rows("huge"), DomainError);
  CHECK(reference_rows("small").size() == 27);
}
