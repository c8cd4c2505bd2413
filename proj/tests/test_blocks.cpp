#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "indres/blocks.hpp"
#include "indres/subgroups.hpp"
#include "support.hpp"

using namespace indres;

namespace {

std::set<std::vector<std::size_t>> partition(const std::vector<Block>& bs) {
  std::set<std::vector<std::size_t>> s;
  for (const auto& b : bs) s.insert(b.chars);
  return s;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) n /= p, r *= p;
  return r;
}

}  // namespace

TEST_CASE("known block partitions of A5") {
  auto g = named("A5");
  // degrees 1,3,3,4,5
  CHECK(partition(compute_blocks(*g, 2)) == std::set<std::vector<std::size_t>>{{0, 1, 2, 4}, {3}});
  CHECK(partition(compute_blocks(*g, 3)) == std::set<std::vector<std::size_t>>{{0, 3, 4}, {1}, {2}});
  CHECK(partition(compute_blocks(*g, 5)) == std::set<std::vector<std::size_t>>{{0, 1, 2, 3}, {4}});
}

TEST_CASE("blocks do not depend on the reduction") {
  for (auto [name, p] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"S4", 2}, {"S4", 3}, {"A5", 2}, {"A5", 3}, {"A5", 5}, {"SL2(11)", 2}, {"SL2(11)", 3}, {"SL2(11)", 5}}) {
    CAPTURE(name);
    CAPTURE(p);
    auto g = named(name);
    auto base = partition(compute_blocks(*g, p));
    for (int v = 1; v <= 3; ++v)
      CHECK(partition(compute_blocks(*g, p, ModularReduction::make(p, g->exponent(), v))) == base);
  }
}

TEST_CASE("defects, defect groups and heights") {
  for (auto [name, p] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"S4", 2}, {"A5", 2}, {"SL2(3)", 2}, {"SL2(11)", 2}, {"SL2(11)", 3}, {"M11", 2}, {"M11", 3}, {"A6", 3}}) {
    CAPTURE(name);
    CAPTURE(p);
    auto g = named(name);
    const auto& t = g->table();
    const ElementTable& el = g->elements();
    auto blocks = compute_blocks(*g, p);
    std::vector<int> seen(t.num_irr(), 0);
    const std::uint64_t sylow_order = p_part(g->order(), p);
    for (const auto& b : blocks) {
      for (auto i : b.chars) seen[i]++;
      std::uint64_t dg = 1;
      for (int k = 0; k < b.defect; ++k) dg *= p;
      CHECK(b.defect_group.size() == dg);
      CHECK(closure(el, b.defect_group) == b.defect_group);
      // the least p-part of a degree in b is |G|_p / |D|
      std::uint64_t least = sylow_order;
      for (auto i : b.chars) least = std::min(least, p_part(t.degree(i).get_ui(), p));
      CHECK(least * dg == sylow_order);
      for (auto i : b.chars) CHECK(height(t, i, p, b) >= 0);
    }
    for (int s : seen) CHECK(s == 1);
    CHECK(blocks[0].chars[0] == 0);
    CHECK(blocks[0].defect_group.size() == sylow_order);
  }
}

TEST_CASE("defect zero blocks are singletons") {
  auto g = named("M11");
  const auto& t = g->table();
  for (const auto& b : compute_blocks(*g, 11)) {
    if (b.defect == 0) {
      CHECK(b.chars.size() == 1);
      CHECK(t.degree(b.chars[0]) % 11 == 0);
    }
  }
}

TEST_CASE("residue fields") {
  auto f = ResidueField::make(3, 2);
  auto x = f.decode(3);  // the class of x
  auto one = f.one();
  CHECK(f.pow(x, 8) == one);
  std::set<std::uint64_t> all;
  for (std::uint64_t v = 0; v < 9; ++v) all.insert(f.encode(f.decode(v)));
  CHECK(all.size() == 9);
  CHECK(f.is_zero(f.add(f.scalar(2), f.scalar(1))));
}
