#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "indres/errors.hpp"
#include "indres/io.hpp"
#include "support.hpp"

using namespace indres;
using io::json;

namespace {

const std::string kFixtures = INDRES_FIXTURE_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("table round trip") {
  for (const std::string name : {"S4", "A5", "Q8", "SL2(3)", "M11"}) {
    CAPTURE(name);
    auto g = named(name);
    const auto& t = g->table();
    auto j = io::table_to_json(t);
    auto back = io::table_from_json(json::parse(io::dump(j)));
    CHECK(back.id() == t.id());
    CHECK(back.irr() == t.irr());
    CHECK(io::dump(io::table_to_json(back)) == io::dump(j));
  }
}

TEST_CASE("a perturbed table file fails the integrity check") {
  auto j = io::read_json_file(kFixtures + "/S4_table.json");
  j["irreducibles"][1][1]["terms"][0][1] = "5";
  CHECK_THROWS_AS(io::table_from_json(j), IntegrityError);
  auto k = io::read_json_file(kFixtures + "/S4_table.json");
  k["classes"].erase(k["classes"].begin());
  CHECK_THROWS_AS(io::table_from_json(k), Error);
}

TEST_CASE("group files") {
  auto s = io::load_group(kFixtures + "/S4.json");
  CHECK(s.degree == 4);
  auto back = io::group_from_json(io::group_to_json(s));
  CHECK(back.gens == s.gens);
  CHECK_THROWS_AS(io::group_from_json(json::parse(R"({"degree": 3, "generators": [[1, 1, 2]]})")), FormatError);
  CHECK_THROWS_AS(io::group_from_json(json::parse(R"({"degree": 3, "generators": [[1, 2]]})")), FormatError);
  CHECK_THROWS_AS(io::read_json_file(kFixtures + "/missing.json"), FormatError);
}

TEST_CASE("shipped example group") {
  auto s = io::load_group(kFixtures + "/heisenberg_q8.json");
  auto g = FiniteGroup::make(s.degree, s.gens, s.name);
  CHECK(g->order() == 1000);
  CHECK(g->degree() == 125);
  auto p = io::load_group(kFixtures + "/heisenberg_q8_P.json");
  CHECK(PermGroup(p.degree, p.gens).order() == 8);
  auto w = io::vchar_from_json(io::read_json_file(kFixtures + "/heisenberg_q8_witness_b2.json"));
  CHECK(w.size() % g->num_classes() == 0);
}

TEST_CASE("external table installs and drives the analysis") {
  auto g = named("S4");
  g->install_table(io::load_table(kFixtures + "/S4_table.json"));
  auto s5 = named("S5");
  CHECK_THROWS_AS(s5->install_table(io::load_table(kFixtures + "/S4_table.json")), ConsistencyError);
}

TEST_CASE("report structure") {
  auto g = named("A5");
  const ElementTable& el = g->elements();
  auto a = Analysis::make(g, 2, sylow(el, whole_group(el), 2));
  io::VerifyRequest req;
  req.props = {"irc", "wirc", "in"};
  auto out = io::build_report(*a, req);
  CHECK(out.all_hold);
  for (const char* key : {"instance", "s_maxima", "lattice_ranks", "q1", "q2", "q_blocks", "blocks_G", "blocks_H",
                          "verdicts", "ml_table"})
    CHECK(out.report.contains(key));
  const auto& w = out.report["verdicts"]["irc"]["witness"];
  REQUIRE(w.is_array());
  for (const auto& pr : w) CHECK(pr["chi"].get<int>() >= 1);
  req.props = {"bogus"};
  CHECK_THROWS_AS(io::build_report(*a, req), PreconditionError);
  req.props = {"g"};
  CHECK_THROWS_AS(io::build_report(*a, req), PreconditionError);
}

TEST_CASE("fixtures regenerate byte for byte") {
  const auto dir = std::filesystem::temp_directory_path() / "indres_fixture_check";
  std::filesystem::remove_all(dir);
  const std::string cmd = std::string(INDRES_CLI) + " fixtures --dir " + dir.string();
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::size_t n = 0;
  for (const auto& f : std::filesystem::directory_iterator(kFixtures)) {
    CAPTURE(f.path().filename().string());
    CHECK(slurp(f.path().string()) == slurp((dir / f.path().filename()).string()));
    ++n;
  }
  CHECK(n == static_cast<std::size_t>(std::distance(std::filesystem::directory_iterator(dir), {})));
  std::filesystem::remove_all(dir);
}

TEST_CASE("command line exit codes") {
  auto run = [](const std::string& args) {
    const std::string cmd = std::string(INDRES_CLI) + " " + args + " > /dev/null 2>&1";
    const int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  };
  const auto out = (std::filesystem::temp_directory_path() / "indres_cli_report.json").string();
  CHECK(run("verify --named S4 -p 2 --sylow --H normalizer --props irc -o " + out) == 0);
  auto rep = io::read_json_file(out);
  CHECK(rep["q1"]["free_rank"] == 2);
  CHECK(run("verify --named 'PSU3(3)' -p 3 --props irc -o " + out) == 1);
  rep = io::read_json_file(out);
  CHECK(rep["verdicts"]["irc"]["failure_certificate"].is_string());
  CHECK(run("verify --group " + kFixtures + "/missing.json -p 2") == 2);
  CHECK(run("verify --named S4 -p 2 --props nonsense") == 2);
  CHECK(run("oracle brute-table --named M11") == 2);
  CHECK(run("oracle brute-classes --named Q8 -o " + out) == 0);
  CHECK(io::read_json_file(out)["classes"].size() == 5);
  CHECK(run("oracle brute-table --named S3 -o " + out) == 0);
  CHECK(io::read_json_file(out)["degrees"] == json::parse(R"(["1", "1", "2"])"));
  CHECK(run("oracle subgroup-lattice --named S4 -p 2 -o " + out) == 0);
  CHECK(io::read_json_file(out)["G"]["equals_reduction"] == true);
  std::filesystem::remove(out);
}

TEST_CASE("reports are byte-stable") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = (dir / "indres_det_a.json").string(), b = (dir / "indres_det_b.json").string();
  for (const auto& path : {a, b}) {
    const std::string cmd = std::string(INDRES_CLI) + " verify --named M11 -p 3 --props irc,wirc,wircstar,pres,pind,in -o " + path + " > /dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
  }
  CHECK(slurp(a) == slurp(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}
