// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "indres/blocks.hpp"
#include "indres/correspondence.hpp"
#include "indres/errors.hpp"
#include "indres/io.hpp"
#include "indres/suite.hpp"

using namespace indres;

namespace {

const std::string kFixtures = INDRES_FIXTURE_DIR;

// Runtime limits in seconds.
constexpr double kTable1Limit = 300, kTable3Limit = 900, kTable2Limit = 1800;
constexpr double kExampleLimit = 60, kOracleLimit = 600;

struct Line {
  int id;
  std::string title;
  bool pass = true;
  double seconds = 0;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    if (notes.size() < 8) notes.push_back(why);
  }
};

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

FiniteGroup::Ptr build(const std::string& name) {
  auto s = named_group(name);
  return FiniteGroup::make(s.degree, s.gens, s.name);
}

void guard(Line& line, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    line.fail(std::string("exception: ") + e.what());
  }
}

constexpr Property kAll[] = {Property::IRC, Property::WIRC, Property::WIRCstar, Property::pRes, Property::pInd};

// Theorem checks shared by criteria 5 and 6 for one analysed instance.
void instance_checks(const Analysis& a, const std::string& label, std::optional<std::size_t> block, Line& c5,
                     Line& c6) {
  for (auto prop : {Property::pRes, Property::pInd, Property::WIRC})
    if (!a.check(prop, block).holds) c5.fail(label + ": " + property_name(prop) + " fails");
  std::string why;
  if (!a.theorem26_selftest(&why)) c6.fail(label + ": idempotent self-test: " + why);
  if (!a.block_split_check(&why)) c6.fail(label + ": block splitting: " + why);
  for (auto prop : kAll) {
    auto v = a.check(prop, block);
    if (v.holds && !v.matching.empty() && !a.degree_congruences(v, &why))
      c6.fail(label + ": degree congruence on " + property_name(prop) + " matching: " + why);
  }
}

}  // namespace

int main() {
  std::vector<Line> lines = {{1, "Table 1 rows"},
                             {2, "Table 3 rows"},
                             {3, "Table 2 rows"},
                             {4, "order-1000 example"},
                             {5, "pRes, pInd, WIRC hold on criteria 1-4"},
                             {6, "theorem checks"},
                             {7, "literal lattice equals elementary reduction"},
                             {8, "character tables and file round trip"}};
  Line &c1 = lines[0], &c2 = lines[1], &c3 = lines[2], &c4 = lines[3], &c5 = lines[4], &c6 = lines[5],
       &c7 = lines[6], &c8 = lines[7];

  // Criteria 1-3 (and the per-instance parts of 5 and 6).
  for (const auto& row : reference_rows("small")) {
    Line& line = row.table == "1" ? c1 : row.table == "3" ? c2 : c3;
    guard(line, [&] {
      auto r = run_reference_row(row);
      line.seconds += r.seconds;
      std::printf("  [%s] %-8s %s  (%.2fs)\n", row.table.c_str(), r.match ? "match" : "MISMATCH", r.rendered.c_str(),
                  r.seconds);
      std::fflush(stdout);
      if (!r.match) line.fail(r.rendered + " expected " + r.expected);
      std::optional<std::size_t> block;
      if (row.defect_group_order) {
        auto pairs = r.analysis->block_pairs();
        if (!pairs.empty()) block = pairs.front().first;
      }
      instance_checks(*r.analysis, r.rendered, std::nullopt, c5, c6);
      if (block) instance_checks(*r.analysis, r.rendered + " (block)", block, c5, c6);
    });
  }
  if (c1.seconds > kTable1Limit) c1.fail("over the time limit");
  if (c2.seconds > kTable3Limit) c2.fail("over the time limit");
  if (c3.seconds > kTable2Limit) c3.fail("over the time limit");

  // Criterion 4.
  guard(c4, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    auto s = io::load_group(kFixtures + "/heisenberg_q8.json");
    auto g = FiniteGroup::make(s.degree, s.gens, s.name);
    if (g->order() != 1000) c4.fail("fixture group has order " + std::to_string(g->order()));
    auto pspec = io::load_group(kFixtures + "/heisenberg_q8_P.json");
    auto a = Analysis::make(g, 2, pspec.gens);
    if (a->P().size() != 8 || a->h().order() != 40) c4.fail("unexpected P or H");
    auto prod = FiniteGroup::direct_product(a->g_ptr(), a->h_ptr());
    const IntLattice diag = diagonal_induced_lattice(*a, prod);
    const auto& tg = a->g().table();
    int checked = 0;
    for (std::size_t b = 0; b < a->g_blocks().size(); ++b) {
      if (!a->correspondent_of(b)) continue;
      bool faithful_center = false;
      for (auto i : a->g_blocks()[b].chars) faithful_center = faithful_center || tg.degree(i) == 5;
      if (!faithful_center) continue;
      const std::string label = "block " + std::to_string(b + 1);
      ++checked;
      if (a->check(Property::IRC, b).holds) c4.fail(label + ": IRC holds");
      for (auto prop : {Property::WIRC, Property::pRes, Property::pInd})
        if (!a->check(prop, b).holds) c4.fail(label + ": " + property_name(prop) + " fails");
      instance_checks(*a, "example " + label, b, c5, c6);
      const std::string wpath = kFixtures + "/heisenberg_q8_witness_b" + std::to_string(b + 1) + ".json";
      auto w = io::vchar_from_json(io::read_json_file(wpath));
      if (w.table() != prod->table().id()) c4.fail(label + ": witness table id differs");
      auto res = check_property_G(*a, b, prod, w.coeffs(), &diag);
      if (!res.holds) c4.fail(label + ": witness rejected: " + res.detail);
    }
    if (checked == 0) c4.fail("no block with a faithful-center character");
    instance_checks(*a, "example", std::nullopt, c5, c6);
    c4.seconds = since(t0);
    if (c4.seconds > kExampleLimit) c4.fail("over the time limit");
  });

  // Criterion 6, remaining parts.
  guard(c6, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    for (const std::string name : {"S3", "S4", "A5", "Q8", "D8", "SL2(3)"})
      if (!brauer_completeness_check(build(name))) c6.fail("Brauer completeness fails on " + name);
    for (auto [name, p] : std::vector<std::pair<std::string, std::uint64_t>>{
             {"S4", 2}, {"S4", 3}, {"A5", 2}, {"A5", 3}, {"A5", 5}, {"SL2(11)", 2}, {"SL2(11)", 3}, {"SL2(11)", 5}}) {
      auto g = build(name);
      std::set<std::vector<std::size_t>> base;
      for (const auto& b : compute_blocks(*g, p)) base.insert(b.chars);
      for (int v = 1; v <= 2; ++v) {
        std::set<std::vector<std::size_t>> other;
        for (const auto& b : compute_blocks(*g, p, ModularReduction::make(p, g->exponent(), v))) other.insert(b.chars);
        if (other != base) c6.fail("blocks of " + name + " depend on the ideal");
      }
    }
    c6.seconds = since(t0);
  });

  // Criterion 7.
  guard(c7, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    int groups = 0, cases = 0;
    for (const std::string name : {"S3", "S4", "A4", "A5", "D8", "D10", "D12", "Q8", "C6", "SL2(3)", "D8xC3", "C2xA4",
                                   "S3xS3", "C3xS3", "S5"}) {
      auto g = build(name);
      if (g->order() > 200) continue;
      const ElementTable& el = g->elements();
      bool used = false;
      for (auto p : prime_factors(g->order())) {
        auto a = Analysis::make(g, p, sylow(el, whole_group(el), p));
        if (a->h_is_g()) continue;
        auto in_s = [&](const IndexSet& q) {
          if (!is_subset(q, a->P())) return false;
          for (std::uint32_t t = 0; t < el.size(); ++t)
            if (!contains(a->H_in_g(), t) && is_subset(q, conjugate(el, a->P(), t))) return true;
          return false;
        };
        const std::string label = name + "/" + std::to_string(p);
        if (!(brute_induced_lattice(g, p, a->P(), in_s) == a->i_g())) c7.fail(label + ": G-level lattices differ");
        auto lh = brute_induced_lattice(a->h_ptr(), p, a->P_in_h(),
                                        [&](const IndexSet& q) { return in_s(transfer(a->h().elements(), q, el)); });
        if (!(lh == a->i_h())) c7.fail(label + ": H-level lattices differ");
        used = true;
        ++cases;
      }
      groups += used;
    }
    c7.notes.push_back(std::to_string(groups) + " groups, " + std::to_string(cases) + " instances");
    if (groups < 10) c7.fail("fewer than 10 groups compared");
    c7.seconds = since(t0);
    if (c7.seconds > kOracleLimit) c7.fail("over the time limit");
  });

  // Criterion 8.
  guard(c8, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    int n = 0;
    for (const auto& name : corpus_names()) {
      auto s = named_group(name);
      if (PermGroup(s.degree, s.gens).order() > 2000) continue;
      auto g = FiniteGroup::make(s.degree, s.gens, s.name);
      const auto& t = g->table();
      try {
        t.verify();
      } catch (const IntegrityError& e) {
        c8.fail(name + ": " + e.what());
      }
      BigInt sq = 0;
      for (std::size_t i = 0; i < t.num_irr(); ++i) sq += t.degree(i) * t.degree(i);
      if (sq != g->order()) c8.fail(name + ": sum of squared degrees");
      auto back = io::table_from_json(io::json::parse(io::dump(io::table_to_json(t))));
      if (back.irr() != t.irr() || back.id() != t.id() || io::dump(io::table_to_json(back)) != io::dump(io::table_to_json(t)))
        c8.fail(name + ": round trip is lossy");
      ++n;
    }
    c8.notes.push_back(std::to_string(n) + " groups");
    c8.seconds = since(t0);
  });

  bool all = true;
  for (const auto& l : lines) {
    std::printf("%s criterion %d: %s (%.1fs)", l.pass ? "PASS" : "FAIL", l.id, l.title.c_str(), l.seconds);
    for (const auto& n : l.notes) std::printf("; %s", n.c_str());
    std::printf("\n");
    all = all && l.pass;
  }
  return all ? 0 : 1;
}
