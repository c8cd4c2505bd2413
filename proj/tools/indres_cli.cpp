#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "indres/blocks.hpp"
#include "indres/correspondence.hpp"
#include "indres/errors.hpp"
#include "indres/fixtures.hpp"
#include "indres/io.hpp"
#include "indres/oracles.hpp"
#include "indres/suite.hpp"

using namespace indres;
using io::json;

namespace {

struct GroupArgs {
  std::string file, named, table;
  std::uint64_t budget_order = kDefaultOrderBudget;
  std::size_t budget_classes = kDefaultClassBudget;

  void add(CLI::App* c) {
    auto* g = c->add_option("--group", file, "group file (JSON)");
    auto* n = c->add_option("--named", named, "built-in group, e.g. S4, M11, SL2(11), 5^(1+2):Q8");
    g->excludes(n);
    c->add_option("--table", table, "external character table of G (JSON)");
    c->add_option("--budget-order", budget_order, "largest group order to enumerate");
    c->add_option("--budget-classes", budget_classes, "largest class count for internal tables");
  }
  FiniteGroup::Ptr build() const {
    GroupSpec s;
    if (!file.empty()) s = io::load_group(file);
    else if (!named.empty()) s = named_group(named);
    else throw PreconditionError("one of --group or --named is required");
    if (s.name.empty()) s.name = std::filesystem::path(file).stem().string();
    auto g = FiniteGroup::make(s.degree, s.gens, s.name, budget_order, budget_classes);
    if (!table.empty()) g->install_table(io::load_table(table));
    return g;
  }
};

struct JobArgs {
  GroupArgs g;
  std::uint64_t p = 0;
  std::string p_file, h_file, h_table, witness, props = "irc,wirc,wircstar,pres,pind", out;
  std::size_t defect_block = 0, block = 0;

  void add(CLI::App* c, bool with_props) {
    g.add(c);
    c->add_option("-p,--prime", p, "the prime p")->required();
    auto* pf = c->add_option("--P", p_file, "P given by generators (group file format)");
    auto* db = c->add_option("--defect-block", defect_block, "P = defect group of this block of G (1-based)");
    c->add_flag("--sylow", "P = a Sylow p-subgroup (default)");
    pf->excludes(db);
    c->add_option("--H", h_file, "H given by generators, or \"normalizer\" (default)");
    c->add_option("--table-h", h_table, "external character table of H (JSON)");
    if (with_props) {
      c->add_option("--props", props, "comma list of irc,wirc,wircstar,pres,pind,in,g");
      c->add_option("--block", block, "evaluate block versions for this block of G (1-based)");
      c->add_option("--witness", witness, "virtual character on G x H for property g (JSON)");
    }
    c->add_option("-o,--output", out, "write the JSON report here");
  }

  std::unique_ptr<Analysis> analysis(FiniteGroup::Ptr grp) const {
    const ElementTable& el = grp->elements();
    IndexSet P;
    if (!p_file.empty()) {
      auto spec = io::load_group(p_file);
      std::vector<std::uint32_t> idx;
      for (const auto& x : spec.gens) {
        if (x.degree() != grp->degree() || el.find(x.images()) < 0) throw PreconditionError("P is not a subgroup of G");
        idx.push_back(el.index_of(x.images()));
      }
      P = closure(el, idx);
    } else if (defect_block) {
      auto blocks = compute_blocks(*grp, p);
      if (defect_block > blocks.size()) throw PreconditionError("no such block");
      P = blocks[defect_block - 1].defect_group;
    } else {
      P = sylow(el, whole_group(el), p);
    }
    std::optional<IndexSet> H;
    if (!h_file.empty() && h_file != "normalizer") {
      auto spec = io::load_group(h_file);
      std::vector<std::uint32_t> idx;
      for (const auto& x : spec.gens) {
        if (x.degree() != grp->degree() || el.find(x.images()) < 0) throw PreconditionError("H is not a subgroup of G");
        idx.push_back(el.index_of(x.images()));
      }
      H = closure(el, idx);
    }
    std::optional<CharTable> ht;
    if (!h_table.empty()) ht = io::load_table(h_table);
    return Analysis::make(grp, p, P, H, true, std::move(ht));
  }
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// Order 1000, transitive on 125 points with point stabilizers of order 8.
void check_example_group(const FiniteGroup& g) {
  if (g.order() != 1000 || g.degree() != 125) throw ConsistencyError("example group has the wrong order");
  std::vector<char> seen(g.degree(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (const auto& gen : g.group().generators())
      if (!seen[gen[x]]) seen[gen[x]] = 1, ++reached, stack.push_back(gen[x]);
  }
  if (reached != g.degree()) throw ConsistencyError("example group is not transitive");
  const ElementTable& el = g.elements();
  std::size_t stab = 0;
  for (std::size_t i = 0; i < el.size(); ++i) stab += el[i][0] == 0;
  if (stab != 8) throw ConsistencyError("point stabilizer of the example group is not of order 8");
}

void emit(const json& j, const std::string& out) {
  const std::string text = io::dump(j);
  if (out.empty()) std::cout << text;
  else io::write_text_file(out, text);
}

int cmd_table(const GroupArgs& ga, const std::string& out) {
  auto g = ga.build();
  emit(io::table_to_json(g->table()), out);
  return 0;
}

int cmd_blocks(const GroupArgs& ga, std::uint64_t p, const std::string& out) {
  auto g = ga.build();
  if (p < 2 || g->order() % p != 0) throw PreconditionError("p must be a prime dividing the group order");
  emit(io::blocks_to_json(*g, p, compute_blocks(*g, p)), out);
  return 0;
}

int cmd_verify(const JobArgs& ja) {
  auto a = ja.analysis(ja.g.build());
  io::VerifyRequest req;
  req.props = split_list(ja.props);
  if (ja.block) req.block = ja.block - 1;
  if (!ja.witness.empty()) req.witness = io::vchar_from_json(io::read_json_file(ja.witness));
  auto outcome = io::build_report(*a, req);
  emit(outcome.report, ja.out);
  return outcome.all_hold ? 0 : 1;
}

int cmd_quotients(const JobArgs& ja) {
  auto a = ja.analysis(ja.g.build());
  const auto q = a->quotients();
  const bool irc = a->check(Property::IRC).holds;
  json j;
  j["row"] = io::table_row(a->g().name() + ", " + std::to_string(a->p()), q, irc);
  j["q1"] = io::invariants_to_json(q.q1);
  j["q2"] = io::invariants_to_json(q.q2);
  json b1 = json::array(), b2 = json::array();
  for (const auto& x : q.bracket_q1()) b1.push_back(io::invariants_to_json(x));
  for (const auto& x : q.bracket_q2()) b2.push_back(io::invariants_to_json(x));
  j["bracket_q1"] = b1;
  j["bracket_q2"] = b2;
  j["irc"] = irc;
  emit(j, ja.out);
  return 0;
}

int cmd_paper_table(const std::string& suite, const std::string& only) {
  int mismatches = 0;
  for (const auto& row : reference_rows(suite)) {
    if (!only.empty() && row.group != only) continue;
    auto r = run_reference_row(row);
    std::printf("%-8s %s   (expected %s)  %.2fs\n", r.match ? "match" : "MISMATCH", r.rendered.c_str(),
                r.expected.c_str(), r.seconds);
    std::fflush(stdout);
    if (!r.match) ++mismatches;
  }
  return mismatches ? 1 : 0;
}

int cmd_oracle(const std::string& kind, const GroupArgs& ga, std::uint64_t p, const std::string& out) {
  auto g = ga.build();
  const ElementTable& el = g->elements();
  json j;
  j["group"] = g->name();
  j["order"] = std::to_string(g->order());
  if (kind == "brute-classes") {
    const std::uint64_t budget = std::min<std::uint64_t>(ga.budget_order, 5000);
    json cls = json::array();
    for (const auto& c : brute_classes(el, budget))
      cls.push_back({{"rep", el.perm(c.rep).one_based()}, {"size", std::to_string(c.size)}, {"rep_order", c.rep_order}});
    j["classes"] = cls;
  } else if (kind == "brute-table") {
    const std::uint64_t budget = std::min<std::uint64_t>(ga.budget_order, 500);
    auto t = brute_table(el, budget);
    json degs = json::array();
    for (const auto& row : t.irr) degs.push_back(row[0].rational_part().get_str());
    j["degrees"] = degs;
    json rows = json::array();
    for (const auto& row : t.irr) {
      json r = json::array();
      for (const auto& v : row) {
        json terms = json::array();
        for (const auto& [e, c] : v.terms()) terms.push_back(json::array({e, c.get_str()}));
        r.push_back({{"modulus", v.modulus()}, {"terms", terms}});
      }
      rows.push_back(r);
    }
    j["irreducibles"] = rows;
  } else if (kind == "subgroup-lattice") {
    if (p < 2) throw PreconditionError("subgroup-lattice needs -p");
    const std::uint64_t budget = std::min<std::uint64_t>(ga.budget_order, 200);
    if (g->order() > budget) throw ResourceError("group order exceeds the subgroup-lattice budget");
    auto a = Analysis::make(g, p, sylow(el, whole_group(el), p));
    auto in_s = [&](const IndexSet& q) {
      if (!is_subset(q, a->P())) return false;
      for (std::uint32_t t = 0; t < el.size(); ++t)
        if (!contains(a->H_in_g(), t) && is_subset(q, conjugate(el, a->P(), t))) return true;
      return false;
    };
    auto lg = brute_induced_lattice(g, p, a->P(), in_s, budget);
    auto lh = brute_induced_lattice(a->h_ptr(), p, a->P_in_h(),
                                    [&](const IndexSet& q) { return in_s(transfer(a->h().elements(), q, el)); },
                                    budget);
    auto hnf = [](const IntLattice& l) {
      json rows = json::array();
      for (const auto& r : l.basis()) {
        json row = json::array();
        for (const auto& x : r) row.push_back(x.get_str());
        rows.push_back(row);
      }
      return rows;
    };
    j["p"] = p;
    j["G"] = {{"hnf", hnf(lg)}, {"equals_reduction", lg == a->i_g()}};
    j["H"] = {{"order", a->h().order()}, {"hnf", hnf(lh)}, {"equals_reduction", lh == a->i_h()}};
  } else {
    throw PreconditionError("unknown oracle \"" + kind + "\"");
  }
  emit(j, out);
  return 0;
}

int cmd_fixtures(const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto path = [&](const std::string& f) { return (std::filesystem::path(dir) / f).string(); };

  GroupSpec s = heisenberg_q8();
  auto g = FiniteGroup::make(s.degree, s.gens, s.name);
  check_example_group(*g);
  io::write_text_file(path("heisenberg_q8.json"), io::dump(io::group_to_json(s)));
  GroupSpec pspec{"Q8", s.degree, heisenberg_q8_complement()};
  io::write_text_file(path("heisenberg_q8_P.json"), io::dump(io::group_to_json(pspec)));

  auto a = Analysis::make(g, 2, heisenberg_q8_complement());
  auto prod = FiniteGroup::direct_product(a->g_ptr(), a->h_ptr());
  for (std::size_t b = 0; b < a->g_blocks().size(); ++b) {
    if (!a->correspondent_of(b)) continue;
    IntVec coeffs;
    try {
      coeffs = extension_witness(*a, b, 5);
    } catch (const PreconditionError&) {
      continue;
    }
    VirtualCharacter mu(prod->table().id(), coeffs);
    json w = io::vchar_to_json(mu);
    w["block"] = b + 1;
    io::write_text_file(path("heisenberg_q8_witness_b" + std::to_string(b + 1) + ".json"), io::dump(w));
  }

  GroupSpec s4 = symmetric_group(4);
  io::write_text_file(path("S4.json"), io::dump(io::group_to_json(s4)));
  auto g4 = FiniteGroup::make(s4.degree, s4.gens, s4.name);
  io::write_text_file(path("S4_table.json"), io::dump(io::table_to_json(g4->table())));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induction/restriction correspondences for permutation groups"};
  app.require_subcommand(1);

  GroupArgs table_g;
  std::string table_out;
  auto* table = app.add_subcommand("table", "character table of a group");
  table_g.add(table);
  table->add_option("-o,--output", table_out);

  GroupArgs blocks_g;
  std::uint64_t blocks_p = 0;
  std::string blocks_out;
  auto* blocks = app.add_subcommand("blocks", "p-blocks with defects");
  blocks_g.add(blocks);
  blocks->add_option("-p,--prime", blocks_p)->required();
  blocks->add_option("-o,--output", blocks_out);

  JobArgs verify_j;
  auto* verify = app.add_subcommand("verify", "decide properties; exit 0 all hold, 1 some fail, 2 error");
  verify_j.add(verify, true);

  JobArgs quot_j;
  auto* quot = app.add_subcommand("quotients", "Q1 and Q2 with per-block components");
  quot_j.add(quot, false);

  std::string suite = "small", only;
  auto* paper = app.add_subcommand("paper-table", "run the published rows and compare");
  paper->add_option("--suite", suite, "small, extended or all");
  paper->add_option("--group", only, "run only rows of this group");

  std::string oracle_kind, oracle_out;
  GroupArgs oracle_g;
  std::uint64_t oracle_p = 0;
  auto* oracle = app.add_subcommand("oracle", "independent brute-force computations");
  oracle->add_option("kind", oracle_kind, "subgroup-lattice, brute-classes or brute-table")->required();
  oracle_g.add(oracle);
  oracle->add_option("-p,--prime", oracle_p);
  oracle->add_option("-o,--output", oracle_out);

  std::string fixtures_dir = "fixtures";
  auto* fixtures = app.add_subcommand("fixtures", "regenerate the shipped fixture files");
  fixtures->add_option("--dir", fixtures_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cout << io::dump(io::error_record("usage", e.what()));
    return 2;
  }

  std::string out_path;
  try {
    if (*table) return out_path = table_out, cmd_table(table_g, table_out);
    if (*blocks) return out_path = blocks_out, cmd_blocks(blocks_g, blocks_p, blocks_out);
    if (*verify) return out_path = verify_j.out, cmd_verify(verify_j);
    if (*quot) return out_path = quot_j.out, cmd_quotients(quot_j);
    if (*paper) return cmd_paper_table(suite, only);
    if (*oracle) return out_path = oracle_out, cmd_oracle(oracle_kind, oracle_g, oracle_p, oracle_out);
    if (*fixtures) return cmd_fixtures(fixtures_dir);
  } catch (const Error& e) {
    const std::string rec = io::dump(io::error_record(e.kind(), e.what()));
    std::cout << rec;
    if (!out_path.empty()) {
      try {
        io::write_text_file(out_path, rec);
      } catch (const Error&) {
      }
    }
    return 2;
  } catch (const std::exception& e) {
    std::cout << io::dump(io::error_record("internal", e.what()));
    return 2;
  }
  return 2;
}
