#include "indres/suite.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "indres/errors.hpp"
#include "indres/fixtures.hpp"
#include "indres/io.hpp"

namespace indres {

QuotientInvariants parse_invariants(const std::string& s) {
  QuotientInvariants q;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '+')) {
    part.erase(std::remove(part.begin(), part.end(), ' '), part.end());
    if (part.empty() || part == "0") continue;
    if (part == "Z") {
      q.free_rank += 1;
    } else if (part.rfind("Z^", 0) == 0) {
      q.free_rank += std::stoul(part.substr(2));
    } else if (part.rfind("Z/", 0) == 0) {
      q.torsion.emplace_back(part.substr(2));
    } else {
      throw FormatError("cannot parse invariants \"" + s + "\"");
    }
  }
  std::sort(q.torsion.begin(), q.torsion.end());
  return q;
}

bool same_components(std::vector<QuotientInvariants> a, std::vector<QuotientInvariants> b) {
  auto key = [](const QuotientInvariants& x) { return x.to_string(); };
  auto cmp = [&](const QuotientInvariants& x, const QuotientInvariants& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), cmp);
  std::sort(b.begin(), b.end(), cmp);
  return a == b;
}

namespace {

ReferenceRow row(std::string g, std::uint64_t p, std::string q1, bool irc, std::string q2, std::string table,
                 std::string suite = "small", std::uint64_t dgo = 0, std::string label = "Sylow") {
  ReferenceRow r;
  r.group = std::move(g);
  r.p = p;
  r.defect_group_order = dgo;
  r.p_label = std::move(label);
  auto comps = [](const std::string& s) {
    std::vector<QuotientInvariants> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '|')) out.push_back(parse_invariants(part));
    return out;
  };
  r.q1 = comps(q1);
  r.q2 = comps(q2);
  r.irc = irc;
  r.table = std::move(table);
  r.suite = std::move(suite);
  return r;
}

}  // namespace

std::vector<ReferenceRow> reference_rows(const std::string& suite) {
  // Components separated by '|' are the bracketed per-block quotients.
  static const std::vector<ReferenceRow> rows = {
      row("S4", 2, "Z^2", true, "Z^2", "1"),
      row("S5", 2, "Z", true, "Z", "1"),
      row("S6", 2, "Z^2", true, "Z^2", "1"),
      row("S6", 3, "Z^4", true, "Z^4", "1"),
      row("S7", 2, "Z", true, "Z", "1"),
      row("S7", 3, "Z^2", true, "Z^2", "1"),
      row("S8", 2, "Z^2", true, "Z", "1"),
      row("S8", 3, "Z^2|Z^2", true, "Z^2|Z^2", "1"),
      row("A5", 2, "Z", true, "Z", "1"),
      row("A6", 2, "Z", true, "Z", "1"),
      row("A6", 3, "Z^2", true, "Z^2", "1"),
      row("A7", 2, "Z", true, "Z", "1"),
      row("A7", 3, "Z", true, "Z", "1"),
      row("A8", 2, "Z", true, "Z", "1"),
      row("A8", 3, "Z^2", true, "Z^2", "1"),
      row("M11", 2, "Z^2", true, "Z", "2"),
      row("M11", 3, "Z^2", true, "Z^2", "2"),
      row("M12", 2, "Z^2", true, "Z^2", "2"),
      row("M12", 2, "Z/2", true, "Z/2", "2", "small", 4, "C2xC2"),
      row("M12", 3, "Z/3", true, "Z/3", "2"),
      row("SL2(11)", 2, "Z/2", true, "Z/2", "3"),
      row("SL2(13)", 2, "Z/2", true, "Z/2", "3"),
      row("SL2(17)", 2, "Z^6", true, "Z", "3"),
      row("SL2(19)", 2, "Z/2", true, "Z/2", "3"),
      row("SL3(3)", 2, "Z^2", true, "Z", "3"),
      row("PSU3(3)", 2, "Z^2", true, "Z^2", "3"),
      row("PSU3(3)", 3, "Z^5", false, "Z", "3"),
      row("S9", 2, "Z", true, "Z", "1", "extended"),
      row("S9", 3, "Z", true, "Z", "1", "extended"),
      row("A9", 2, "Z/2", true, "Z/2", "1", "extended"),
      row("A9", 3, "Z^2", true, "Z^2", "1", "extended"),
      row("S10", 2, "Z^2", true, "Z^2", "1", "extended"),
      row("S10", 3, "Z", true, "Z", "1", "extended"),
      row("S10", 5, "Z^2", true, "Z^2", "1", "extended"),
      row("A10", 2, "Z", true, "Z", "1", "extended"),
      row("A10", 3, "Z^2", true, "Z^2", "1", "extended"),
      row("A10", 5, "Z", true, "Z", "1", "extended"),
  };
  if (suite != "small" && suite != "extended" && suite != "all")
    throw DomainError("unknown suite \"" + suite + "\"");
  std::vector<ReferenceRow> out;
  for (const auto& r : rows)
    if (suite == "all" || r.suite == suite || (suite == "extended" && r.suite == "small")) out.push_back(r);
  return out;
}

IndexSet select_p(const FiniteGroup& g, std::uint64_t p, std::uint64_t defect_group_order) {
  const ElementTable& el = g.elements();
  if (defect_group_order == 0) return sylow(el, whole_group(el), p);
  for (const auto& b : compute_blocks(g, p))
    if (b.defect_group.size() == defect_group_order) return b.defect_group;
  throw PreconditionError("no block with a defect group of order " + std::to_string(defect_group_order));
}

RowOutcome run_reference_row(const ReferenceRow& row, FiniteGroup::Ptr g) {
  const auto t0 = std::chrono::steady_clock::now();
  RowOutcome out;
  out.row = row;
  if (!g) {
    GroupSpec s = named_group(row.group);
    g = FiniteGroup::make(s.degree, s.gens, s.name);
  }
  const IndexSet P = select_p(*g, row.p, row.defect_group_order);
  out.analysis = Analysis::make(g, row.p, P);
  out.q = out.analysis->quotients();
  for (auto prop : {Property::IRC, Property::WIRC, Property::WIRCstar, Property::pRes, Property::pInd})
    out.verdicts[property_name(prop)] = out.analysis->check(prop);
  const bool irc = out.verdicts["irc"].holds;
  out.match = irc == row.irc && same_components(out.q.bracket_q1(), row.q1) &&
              same_components(out.q.bracket_q2(), row.q2);
  std::string label = row.group + ", " + std::to_string(row.p);
  if (row.defect_group_order) label += " [" + row.p_label + "]";
  out.rendered = io::table_row(label, out.q, irc);
  out.expected = label + " | " + io::bracket_string(row.q1) + " | " + (row.irc ? "Yes" : "No") + " | " +
                 io::bracket_string(row.q2);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

IntVec extension_witness(const Analysis& a, std::size_t g_block, std::uint64_t d) {
  auto e = a.correspondent_of(g_block);
  if (!e) throw PreconditionError("block has no Brauer correspondent");
  const CharTable &tg = a.g().table(), &th = a.h().table();
  const std::size_t rh = th.num_irr();
  IntVec mu = omega(a, g_block, *e);
  for (auto i : a.g_blocks()[g_block].chars) {
    const BigInt di = tg.degree(i);
    if (di % d != 0) throw PreconditionError("character degree not divisible by d");
    for (auto k : a.h_blocks()[*e].chars) mu[i * rh + static_cast<std::size_t>(th.dual(k))] -= (di / d) * th.degree(k);
  }
  return mu;
}

}  // namespace indres
