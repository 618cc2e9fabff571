#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symquot/engine.hpp"
#include "symquot/geometry.hpp"

#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace symquot;
using json = nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  file << text;
}

RunResult run_cli(const std::string& args) {
  const std::string out_path = "/tmp/symquot_test_stdout.txt";
  const std::string err_path = "/tmp/symquot_test_stderr.txt";
  const std::string cmd =
      std::string(SYMQUOT_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(out_path);
  r.err = read_file(err_path);
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

Degree parse_key(const std::string& key) {
  Degree d;
  std::stringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) d.push_back(std::stoi(part));
  return d;
}

GradedDimension dims_from_json(const json& axes, const json& dims) {
  std::vector<std::string> names;
  for (const auto& a : axes) names.push_back(a.get<std::string>());
  GradedDimension v{AxisSystem(names)};
  for (const auto& [key, value] : dims.items()) {
    v.add(parse_key(key), Integer(value.get<long long>()));
  }
  return v;
}

}  // namespace

TEST_CASE("hs series prints the Hilbert square polynomial of the plane") {
  const RunResult r = run_cli("hs --preset p2 --k 0 --series --max-n 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1 + 8 t + 48 t^2 + 115 t^3 + 83 t^4"));
  CHECK(contains(r.out, "hh^3: 115"));
  CHECK(contains(r.out, "total: 255"));
}

TEST_CASE("hs json output round-trips and is byte-deterministic") {
  const RunResult first = run_cli("hs --preset p2 --k 0 --n 2 --format json");
  const RunResult second = run_cli("hs --preset p2 --k 0 --n 2 --format json");
  REQUIRE(first.code == 0);
  CHECK(first.out == second.out);

  const json doc = json::parse(first.out);
  CHECK(doc["command"] == "hs");
  CHECK(doc["inputs"]["variety"] == "p2");
  CHECK(doc["inputs"]["k"] == 0);
  REQUIRE(doc["results"].size() == 1);
  const GradedDimension parsed = dims_from_json(doc["axes"], doc["results"][0]["dims"]);
  CHECK(parsed == hs_sym(preset("p2"), 0, 2).dims);
  CHECK(doc["results"][0]["total"] == 255);
}

TEST_CASE("hh routes through the coefficient families") {
  const RunResult homology = run_cli("hh --preset p1 --n 2");
  CHECK(homology.code == 0);
  CHECK(contains(homology.out, "hh^0: 5"));

  const RunResult twisted = run_cli("hh --preset p2 --line-bundle O3 --series --max-n 2 --format json");
  REQUIRE(twisted.code == 0);
  const json doc = json::parse(twisted.out);
  const GradedDimension parsed = dims_from_json(doc["axes"], doc["results"][2]["dims"]);
  const CoefficientFamily fam = line_bundle_family(preset("p2"), "O3", 2);
  CHECK(parsed == hh_with_coefficients_sym(fam, 2).dims);
}

TEST_CASE("boissiere-diff lists exactly the three corrected monomials") {
  const RunResult text = run_cli("boissiere-diff --preset p2 --line-bundle O3 --max-n 2");
  CHECK(text.code == 0);
  CHECK(contains(text.out, "3 differing monomials through t^2"));
  CHECK(contains(text.out, "x^1 y^1 t^2: 28 vs 10"));
  CHECK(contains(text.out, "x^2 y^1 t^2: 35 vs 8"));
  CHECK(contains(text.out, "x^3 y^1 t^2: 10 vs 1"));

  const RunResult as_json =
      run_cli("boissiere-diff --preset p2 --line-bundle O3 --max-n 2 --format json");
  REQUIRE(as_json.code == 0);
  const json doc = json::parse(as_json.out);
  REQUIRE(doc["differences"].size() == 3);
  CHECK(doc["differences"][0]["degree"] == "1,1,2");
  CHECK(doc["differences"][2]["degree"] == "3,1,2");
  CHECK(doc["differences"][2]["corrected"] == 10);
  CHECK(doc["differences"][2]["original"] == 1);
}

TEST_CASE("hodge-hilb reproduces the diamond in the t^1 slice") {
  const RunResult r = run_cli("hodge-hilb --preset p2 --max-n 1 --format json");
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["dims"]["0,0,0"] == 1);
  CHECK(doc["dims"]["0,0,1"] == 1);
  CHECK(doc["dims"]["1,1,1"] == 1);
  CHECK(doc["dims"]["2,2,1"] == 1);
  CHECK(doc["dims"].size() == 4);
}

TEST_CASE("deformation prints the Hilbert square summary of the plane") {
  const RunResult r = run_cli("deformation --preset p2 --n 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "h^0(T) = 8"));
  CHECK(contains(r.out, "h^1(T) = 10"));
  CHECK(contains(r.out, "h^0(wedge^2 T) = 38"));
  CHECK(contains(r.out, "HH^2 = 48"));
}

TEST_CASE("schur-dim matches the Weyl formula values") {
  CHECK(contains(run_cli("schur-dim --weight 1,0,-1").out, "= 8"));
  CHECK(contains(run_cli("schur-dim --weight 1,1,-2").out, "= 10"));
  CHECK(contains(run_cli("schur-dim --weight 2,1,-3").out, "= 35"));
  CHECK(contains(run_cli("schur-dim --weight 2,-1,-1").out, "= 10"));
  CHECK(run_cli("schur-dim --weight 0,1").code == 2);
}

TEST_CASE("bwb and bott expose the rho-shift algorithm") {
  const RunResult adjoint = run_cli("bwb --lambda-s 1,0 --lambda-q 2 --n 2");
  CHECK(adjoint.code == 0);
  CHECK(contains(adjoint.out, "H^0: weight (2, 1, 0), dim 8"));

  const RunResult hodge = run_cli("bott --p 1 --j 0 --n 2 --format json");
  REQUIRE(hodge.code == 0);
  CHECK(json::parse(hodge.out)["dims"]["1"] == 1);

  const RunResult sections = run_cli("bott --p 0 --j 3 --n 2");
  CHECK(contains(sections.out, "h^0 = 10"));
}

TEST_CASE("quiver reports trace, euler characteristic and the series") {
  const RunResult r = run_cli("quiver");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "tr C = -1"));
  CHECK(contains(r.out, "Euler characteristic -tr C = 1"));
  CHECK(contains(r.out, "Hochschild series: 1 + 3 t + 3 t^2"));

  const json doc = json::parse(run_cli("quiver --format json").out);
  CHECK(doc["trace"] == -1);
  CHECK(doc["euler_characteristic"] == 1);
  CHECK(doc["series"] == json::array({1, 3, 3}));

  write_file("/tmp/symquot_test_cartan.json", "[[1,0],[2,1]]");
  const RunResult bad = run_cli("quiver --input /tmp/symquot_test_cartan.json");
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "entry (1,0)"));

  write_file("/tmp/symquot_test_cartan.json", "[[1,5],[0,1]]");
  const RunResult ok = run_cli("quiver --input /tmp/symquot_test_cartan.json --format json");
  CHECK(ok.code == 0);
  // C = [[24, 5], [-5, -1]], so tr C = 23.
  CHECK(json::parse(ok.out)["euler_characteristic"] == -23);
}

TEST_CASE("verify suites pass and reject unknown names") {
  const RunResult three = run_cli("verify three-path --max-n 2");
  CHECK(three.code == 0);
  CHECK(contains(three.out, "28 of 28 checks passed"));

  const RunResult fock = run_cli("verify fock --max-n 3");
  CHECK(fock.code == 0);
  CHECK(contains(fock.out, "checks passed"));

  const RunResult unknown = run_cli("verify nosuch");
  CHECK(unknown.code == 2);
  CHECK(contains(unknown.err, "unknown verify suite 'nosuch'"));
}

TEST_CASE("flag grammar violations exit 1") {
  CHECK(run_cli("hs --preset p2 --k 0 --n 1 --bogus").code == 1);
  CHECK(run_cli("hs --preset p2 --k 0").code == 1);
  CHECK(run_cli("hs --preset p2 --k 0 --n 1 --series --max-n 2").code == 1);
  CHECK(run_cli("hs --preset p2 --k 0 --max-n 2").code == 1);
  CHECK(run_cli("hs --k 0 --n 1").code == 1);
  CHECK(run_cli("hs --preset p1 --input /tmp/x.json --k 0 --n 1").code == 1);
  CHECK(run_cli("hs --preset p1 --k 0 --n 1 --format yaml").code == 1);
  CHECK(run_cli("").code == 1);
}

TEST_CASE("validation failures exit 2 and name the datum") {
  const RunResult preset_err = run_cli("hs --preset nosuch --k 0 --n 1");
  CHECK(preset_err.code == 2);
  CHECK(contains(preset_err.err, "unknown preset 'nosuch'"));

  const RunResult file_err = run_cli("hs --input /tmp/symquot_no_such_file.json --k 0 --n 1");
  CHECK(file_err.code == 2);
  CHECK(contains(file_err.err, "cannot open variety file"));

  const RunResult curve_err = run_cli("deformation --preset p1 --n 2");
  CHECK(curve_err.code == 2);
  CHECK(contains(curve_err.err, "needs a surface"));
}

TEST_CASE("custom variety files load and validate through the CLI") {
  VarietyData x = preset("p1");
  x.name = "custom-line";
  write_file("/tmp/symquot_test_variety.json", variety_to_json_text(x));
  const RunResult ok = run_cli("hs --input /tmp/symquot_test_variety.json --k 0 --n 2");
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "1 + 3 t + 3 t^2"));

  std::string corrupt = variety_to_json_text(x);
  const auto pos = corrupt.find("\"name\": \"custom-line\"");
  REQUIRE(pos != std::string::npos);
  json doc = json::parse(corrupt);
  doc["omega_tables"]["0"][0][0] = 7;
  write_file("/tmp/symquot_test_variety.json", doc.dump());
  const RunResult bad = run_cli("hs --input /tmp/symquot_test_variety.json --k 0 --n 2");
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "twisted Serre duality"));
}

TEST_CASE("--out writes the payload to a file and keeps stdout quiet") {
  const std::string path = "/tmp/symquot_test_out.json";
  const RunResult r =
      run_cli("hs --preset p1 --k 0 --n 2 --format json --out " + path);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const json doc = json::parse(read_file(path));
  CHECK(doc["results"][0]["dims"]["0"] == 1);
  CHECK(doc["results"][0]["dims"]["1"] == 3);
  CHECK(doc["results"][0]["dims"]["2"] == 3);
}
