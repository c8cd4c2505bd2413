#include "indres/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "indres/errors.hpp"

namespace indres::io {

namespace {

BigInt big_from(const json& v, const char* what) {
  if (v.is_string()) {
    BigInt r;
    if (r.set_str(v.get<std::string>(), 10) != 0) throw FormatError(std::string("bad integer in ") + what);
    return r;
  }
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<long long>()));
  throw FormatError(std::string("expected an integer in ") + what);
}

std::uint64_t u64_from(const json& v, const char* what) {
  BigInt b = big_from(v, what);
  if (b < 0 || !b.fits_ulong_p()) throw FormatError(std::string("integer out of range in ") + what);
  return b.get_ui();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

json perm_json(PermView p) {
  json a = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) a.push_back(static_cast<long long>(p[i]) + 1);
  return a;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json group_to_json(const GroupSpec& g) {
  json j;
  if (!g.name.empty()) j["name"] = g.name;
  j["degree"] = g.degree;
  json gens = json::array();
  for (const auto& p : g.gens) gens.push_back(perm_json(p.images()));
  j["generators"] = gens;
  return j;
}

GroupSpec group_from_json(const json& j, const std::string& name) {
  GroupSpec g;
  g.degree = u64_from(field(j, "degree"), "degree");
  if (g.degree == 0 || g.degree > 65535) throw FormatError("degree out of range");
  g.name = name.empty() && j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : name;
  const json& gens = field(j, "generators");
  if (!gens.is_array()) throw FormatError("generators must be an array");
  for (const auto& gen : gens) {
    if (!gen.is_array() || gen.size() != g.degree) throw FormatError("generator has wrong length");
    std::vector<long long> img;
    for (const auto& v : gen) {
      if (!v.is_number_integer()) throw FormatError("generator entries must be integers");
      img.push_back(v.get<long long>());
    }
    g.gens.push_back(Permutation::from_images(img, true));
  }
  return g;
}

GroupSpec load_group(const std::string& path) { return group_from_json(read_json_file(path)); }

json subgroup_to_json(const ElementTable& t, const IndexSet& s) {
  json j;
  j["order"] = s.size();
  j["degree"] = t.degree();
  json gens = json::array();
  for (auto x : generating_set(t, s)) gens.push_back(perm_json(t[x]));
  j["generators"] = gens;
  return j;
}

json table_to_json(const CharTable& t) {
  json j;
  j["id"] = t.id();
  j["order"] = std::to_string(t.order());
  j["exponent"] = t.exponent();
  json cls = json::array();
  for (const auto& c : t.classes()) {
    json cj;
    cj["rep_order"] = c.rep_order;
    cj["size"] = std::to_string(c.size);
    json pm = json::object();
    for (const auto& [p, k] : c.power_map) pm[std::to_string(p)] = k + 1;
    cj["powermap"] = pm;
    cls.push_back(cj);
  }
  j["classes"] = cls;
  json irr = json::array();
  for (const auto& row : t.irr()) {
    json r = json::array();
    for (const auto& v : row) {
      json terms = json::array();
      for (const auto& [e, c] : v.terms()) terms.push_back(json::array({e, c.get_str()}));
      json vj;
      vj["modulus"] = v.modulus();
      vj["terms"] = terms;
      r.push_back(vj);
    }
    irr.push_back(r);
  }
  j["irreducibles"] = irr;
  return j;
}

CharTable table_from_json(const json& j, const std::string& id) {
  const std::uint64_t order = u64_from(field(j, "order"), "order");
  std::string tid = id;
  if (tid.empty()) tid = j.contains("id") && j["id"].is_string() ? j["id"].get<std::string>() : "table";
  const json& cls = field(j, "classes");
  if (!cls.is_array() || cls.empty()) throw FormatError("classes must be a nonempty array");
  const std::size_t r = cls.size();
  std::vector<ClassInfo> info;
  for (const auto& c : cls) {
    ClassInfo ci;
    ci.rep_order = u64_from(field(c, "rep_order"), "rep_order");
    ci.size = u64_from(field(c, "size"), "size");
    if (c.contains("powermap")) {
      const json& pm = c["powermap"];
      if (!pm.is_object()) throw FormatError("powermap must be an object");
      for (const auto& [k, v] : pm.items()) {
        const std::uint64_t p = std::stoull(k);
        const std::uint64_t idx = u64_from(v, "powermap");
        if (idx < 1 || idx > r) throw FormatError("powermap index out of range");
        ci.power_map[p] = static_cast<int>(idx - 1);
      }
    }
    info.push_back(std::move(ci));
  }
  const json& irr = field(j, "irreducibles");
  if (!irr.is_array()) throw FormatError("irreducibles must be an array");
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& row : irr) {
    if (!row.is_array() || row.size() != r) throw FormatError("character row has wrong length");
    std::vector<Cyclotomic> vals;
    for (const auto& v : row) {
      const std::uint64_t m = u64_from(field(v, "modulus"), "modulus");
      if (m == 0) throw FormatError("modulus must be positive");
      std::vector<std::pair<long long, BigInt>> terms;
      for (const auto& t : field(v, "terms")) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
          throw FormatError("terms must be [exponent, coefficient] pairs");
        terms.emplace_back(t[0].get<long long>(), big_from(t[1], "terms"));
      }
      vals.push_back(Cyclotomic::from_terms(m, terms));
    }
    rows.push_back(std::move(vals));
  }
  CharTable t(tid, order, std::move(info), std::move(rows));
  t.verify();
  return t;
}

CharTable load_table(const std::string& path) { return table_from_json(read_json_file(path)); }

json vchar_to_json(const VirtualCharacter& v) {
  json j;
  j["table"] = v.table();
  json c = json::array();
  for (const auto& x : v.coeffs()) c.push_back(x.get_str());
  j["coeffs"] = c;
  return j;
}

VirtualCharacter vchar_from_json(const json& j) {
  const json& t = field(j, "table");
  if (!t.is_string()) throw FormatError("table id must be a string");
  IntVec c;
  for (const auto& x : field(j, "coeffs")) c.push_back(big_from(x, "coeffs"));
  return VirtualCharacter(t.get<std::string>(), std::move(c));
}

json invariants_to_json(const QuotientInvariants& q) {
  json j;
  j["free_rank"] = q.free_rank;
  json t = json::array();
  for (const auto& d : q.torsion) t.push_back(d.get_str());
  j["torsion"] = t;
  return j;
}

json block_to_json(const Block& b, std::uint64_t p, std::optional<std::size_t> correspondent) {
  json j;
  json ch = json::array();
  for (auto c : b.chars) ch.push_back(c + 1);
  j["chars"] = ch;
  j["defect"] = b.defect;
  BigInt po;
  mpz_ui_pow_ui(po.get_mpz_t(), p, static_cast<unsigned long>(b.defect));
  j["defect_group_order"] = po.get_str();
  if (correspondent) j["correspondent"] = *correspondent + 1;
  else j["correspondent"] = nullptr;
  return j;
}

json blocks_to_json(const FiniteGroup& g, std::uint64_t p, const std::vector<Block>& blocks) {
  json j;
  j["group"] = g.name();
  j["order"] = std::to_string(g.order());
  j["p"] = p;
  json arr = json::array();
  for (const auto& b : blocks) arr.push_back(block_to_json(b, p, std::nullopt));
  j["blocks"] = arr;
  return j;
}

std::string bracket_string(const std::vector<QuotientInvariants>& v) {
  if (v.size() == 1) return v[0].to_string();
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " + [" : "[") + v[i].to_string() + "]";
  return s.empty() ? "0" : s;
}

std::string table_row(const std::string& label, const QuotientReport& q, bool irc) {
  return label + " | " + bracket_string(q.bracket_q1()) + " | " + (irc ? "Yes" : "No") + " | " +
         bracket_string(q.bracket_q2());
}

json error_record(const std::string& kind, const std::string& message) {
  json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  return j;
}

namespace {

json verdict_json(const Verdict& v) {
  json j;
  j["holds"] = v.holds;
  if (v.holds && !v.matching.empty()) {
    json m = json::array();
    for (const auto& pr : v.matching) m.push_back({{"chi", pr.chi + 1}, {"phi", pr.phi + 1}, {"sign", pr.sign}});
    j["witness"] = m;
  } else {
    j["witness"] = nullptr;
  }
  if (v.certificate.empty()) j["failure_certificate"] = nullptr;
  else j["failure_certificate"] = v.certificate;
  return j;
}

json counts_json(const std::map<int, int>& m) {
  json j = json::object();
  for (const auto& [l, c] : m) j[std::to_string(l)] = c;
  return j;
}

}  // namespace

VerifyOutcome build_report(const Analysis& a, const VerifyRequest& req) {
  for (const auto& p : req.props)
    if (p != "in" && p != "g" && !parse_property(p)) throw PreconditionError("unknown property \"" + p + "\"");
  const bool want_g = std::find(req.props.begin(), req.props.end(), "g") != req.props.end();
  if (want_g && (!req.block || !req.witness)) throw PreconditionError("property g needs a block and a witness");
  if (req.block) {
    if (*req.block >= a.g_blocks().size()) throw PreconditionError("block index out of range");
    if (!a.correspondent_of(*req.block)) throw PreconditionError("block has no Brauer correspondent in H");
  }

  VerifyOutcome out;
  json& r = out.report;
  const ElementTable& tg = a.g().elements();
  json inst;
  inst["group"] = a.g().name();
  inst["order"] = std::to_string(a.g().order());
  inst["p"] = a.p();
  inst["P"] = subgroup_to_json(tg, a.P());
  inst["H"] = subgroup_to_json(tg, a.H_in_g());
  if (req.block) inst["block"] = *req.block + 1;
  r["instance"] = inst;

  json maxima = json::array();
  for (const auto& m : a.s().maxima) maxima.push_back(subgroup_to_json(tg, m));
  r["s_maxima"] = maxima;
  r["lattice_ranks"] = {{"H", a.i_h().rank()}, {"G", a.i_g().rank()}};

  const QuotientReport q = a.quotients();
  r["q1"] = invariants_to_json(q.q1);
  r["q2"] = invariants_to_json(q.q2);
  json per = json::array();
  for (const auto& bq : q.blocks) {
    json bj;
    bj["block"] = bq.block + 1;
    bj["defect"] = bq.defect;
    bj["q1"] = invariants_to_json(bq.q1);
    bj["q2"] = invariants_to_json(bq.q2);
    per.push_back(bj);
  }
  r["q_blocks"] = per;

  json gb = json::array();
  for (std::size_t i = 0; i < a.g_blocks().size(); ++i)
    gb.push_back(block_to_json(a.g_blocks()[i], a.p(), a.correspondent_of(i)));
  r["blocks_G"] = gb;
  json hb = json::array();
  for (const auto& b : a.h_blocks()) hb.push_back(block_to_json(b, a.p(), std::nullopt));
  r["blocks_H"] = hb;

  json verdicts = json::object();
  for (const auto& name : req.props) {
    if (name == "in") {
      auto ml = a.isaacs_navarro(req.block);
      verdicts["in"] = {{"holds", ml.equal}};
      out.all_hold = out.all_hold && ml.equal;
    } else if (name == "g") {
      auto e = *a.correspondent_of(*req.block);
      auto prod = FiniteGroup::direct_product(a.g_ptr(), a.h_ptr());
      if (req.witness->table() != prod->table().id())
        throw PreconditionError("witness refers to table " + req.witness->table() + ", expected " + prod->table().id());
      auto g = check_property_G(a, *req.block, prod, req.witness->coeffs());
      json gj;
      gj["holds"] = g.holds;
      gj["congruence"] = g.congruence;
      gj["constituents"] = g.constituents;
      if (g.detail.empty()) gj["failure_certificate"] = nullptr;
      else gj["failure_certificate"] = g.detail;
      gj["correspondent"] = e + 1;
      verdicts["g"] = gj;
      out.all_hold = out.all_hold && g.holds;
    } else {
      auto v = a.check(*parse_property(name), req.block);
      verdicts[name] = verdict_json(v);
      out.all_hold = out.all_hold && v.holds;
    }
  }
  r["verdicts"] = verdicts;

  auto ml = a.isaacs_navarro(req.block);
  r["ml_table"] = {{"m", ml.m}, {"G", counts_json(ml.g)}, {"H", counts_json(ml.h)}, {"equal", ml.equal}};
  return out;
}

}  // namespace indres::io
