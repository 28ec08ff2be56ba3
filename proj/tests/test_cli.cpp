#include <doctest.h>

#include <set>
#include <sstream>

#include <json.hpp>

#include "kconj/cli.hpp"
#include "kconj/group_model.hpp"
#include "kconj/verify.hpp"

using namespace kconj;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("present SU(2)") {
  auto r = run({"present", "SU(2)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("R(G) = Z[y1]; K^0 = R(G), K^1 = R(G)·b[y1]") != std::string::npos);
  auto j = nlohmann::json::parse(run({"present", "SU(2) x U(1)", "--json"}).out);
  CHECK(j["ranks"]["K0"] == 2);
}

TEST_CASE("beta on the adjoint class") {
  auto r = run({"beta", "SU(2)", "y1^2+4*y1+3"});
  CHECK(r.code == 0);
  CHECK(r.out == "(2*y1+4) b[y1]; forgetful: 4 b[y1]\n");
}

TEST_CASE("diff and char") {
  CHECK(run({"diff", "SU(2)", "y1^2"}).out == "2*y1 dy1; phi: 2*y1 b[y1]\n");
  CHECK(run({"char", "from-gen", "SU(2)", "y1^2+4*y1+3"}).out == "x1_1^2+1+x1_1^-2\n");
  CHECK(run({"char", "to-gen", "SU(2)", "x1_1^2+1+x1_1^-2"}).out == "y1^2+4*y1+3\n");
  auto bad = run({"char", "to-gen", "SU(2)", "x1_1"});
  CHECK(bad.code == kExitInput);
  CHECK(bad.err.find("Weyl") != std::string::npos);
}

TEST_CASE("verify U(1) with window 3") {
  auto r = run({"verify", "U(1)", "--window", "3", "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  for (const auto& c : j["checks"])
    if (c["data"].contains("reports"))
      for (const auto& rep : c["data"]["reports"]) CHECK(rep["deficit"] == 0);
}

TEST_CASE("tor table") {
  auto j = nlohmann::json::parse(run({"tor", "SU(2) x U(1)", "--json"}).out);
  CHECK(j["tor_RGxRG_RG_RG_over_RG"] == nlohmann::json({1, 2, 1}));
}

TEST_CASE("errors report positions and exit nonzero") {
  auto r = run({"beta", "SU(2)", "y1 + z"});
  CHECK(r.code == kExitInput);
  CHECK(r.err.find("position 5") != std::string::npos);
  auto g = run({"present", "SU(2) x"});
  CHECK(g.code == kExitInput);
  CHECK(g.err.find("position 7") != std::string::npos);
  CHECK(run({"present", "SU(99)"}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({"char", "sideways", "SU(2)", "y1"}).code == kExitInput);
}

TEST_CASE("every registered check has a unique name within its module") {
  const auto& reg = invariant_registry();
  CHECK(reg.size() == 33);
  std::set<std::string> names;
  std::set<std::string> modules;
  for (const auto& c : reg) {
    CHECK(names.insert(c.name).second);
    CHECK(c.name.rfind(c.module == "group_model" ? "group." : c.module + ".", 0) == 0);
    modules.insert(c.module);
  }
  CHECK(modules == std::set<std::string>{"group_model", "rep_ring", "characters", "homological", "ktheory",
                                         "differentials", "cli"});
  for (const char* required :
       {"homological.koszul_square_zero", "homological.augmentation_square_zero", "homological.koszul_window_exactness",
        "homological.augmentation_window_exactness", "homological.tor_ranks", "ktheory.leibniz_beta",
        "differentials.derivation", "characters.roundtrip"})
    CHECK(names.count(required) == 1);
}

TEST_CASE("verify names the failing invariant") {
  VerifyConfig c;
  c.samples = 5;
  auto report = run_verify(build_group("SU(3)"), c);
  CHECK(report.passed());
  CHECK(report.results.size() == invariant_registry().size());
  auto text = report.to_text();
  CHECK(text.find("all invariants hold") != std::string::npos);
}
