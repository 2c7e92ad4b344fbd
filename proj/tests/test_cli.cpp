#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

const std::string kCli = TEAMCOMP_CLI;
const std::string kSpecs = TEAMCOMP_SPEC_DIR;

struct Run {
  int exit_code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  FILE* pipe = popen((kCli + " " + args + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args, int expected_exit = 0) {
  const Run r = run(args);
  CHECK(r.exit_code == expected_exit);
  return json::parse(r.out);
}

// No float may appear outside approx_* fields.
void check_no_floats(const json& j, const std::string& key = "") {
  if (j.is_number_float()) CHECK_MESSAGE(key.rfind("approx_", 0) == 0, key);
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) check_no_floats(v, k);
  } else if (j.is_array()) {
    for (const auto& v : j) check_no_floats(v, key);
  }
}

}  // namespace

TEST_CASE("solve from files and fixtures") {
  const json card = run_json("solve " + kSpecs + "/card_game.json");
  CHECK(card.at("root_value") == "-1/3");
  CHECK(card.at("team1_root_strategy").is_array());
  CHECK_FALSE(card.contains("values"));
  CHECK(run_json("solve " + kSpecs + "/diagonal_plus_dominated_um.json").at("root_value") == "0");
  CHECK(run_json("solve --example ex2").at("root_value") == "-3/4");
  const json full = run_json("solve --example ex1 --full");
  CHECK(full.at("values").size() == 22);
  check_no_floats(full);
}

TEST_CASE("input errors exit 2, budget exits 3") {
  CHECK(run("solve " + kSpecs + "/ragged_row.json").exit_code == 2);
  CHECK(run("solve " + kSpecs + "/missing.json").exit_code == 2);
  CHECK(run("solve --example nope").exit_code == 2);
  CHECK(run("solve").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("solve --example card --budget 10").exit_code == 3);
  CHECK(run("verify theorem1 --example ex1").exit_code == 2);
}

TEST_CASE("abandon-delta and gamma emit re-parseable specs") {
  const json d = run_json("abandon-delta --example ex3 --players 4");
  CHECK(d.at("delta") == "2/3");
  CHECK(d.at("value_abandoned") == "-2/3");
  const std::string path = "cli_abandoned_spec.json";
  std::ofstream(path) << d.at("abandoned_spec").dump();
  CHECK(run_json("solve " + path).at("root_value") == "-2/3");

  const json g = run_json("gamma --C 3");
  CHECK(g.at("T") == 3);
  std::ofstream("cli_gamma_spec.json") << g.at("spec").dump();
  CHECK(run_json("solve cli_gamma_spec.json").at("root_value") == g.at("value"));
  CHECK(run_json("gamma --C 4 --a 2 --b 2").at("value") == "1");
  CHECK(run("gamma --C 3 --a 5").exit_code == 2);
}

TEST_CASE("classify and best-response") {
  const json c = run_json("classify --example ex2");
  CHECK(c.at("team1").at("dominated") == json::array({3}));
  CHECK(c.at("team1").at("transitive") == false);
  const json br = run_json("best-response --example ex1 --team 1 --strategy uniform");
  CHECK(br.at("best_response_value") == "-1/2");
  CHECK(br.at("is_equilibrium_guarantee") == false);
}

TEST_CASE("verify exit codes") {
  const json t1 = run_json("verify theorem1 --T 3 --instances 50 --seed 7");
  CHECK(t1.at("pass") == true);
  CHECK(run_json("verify theorem4 --T 4 --utility UM").at("pass") == true);
  CHECK(run_json("verify lemma6 --Cmax 4").at("pass") == true);
  const json contrast = run_json("verify theorem3 --example ex3", 1);
  CHECK(contrast.at("pass") == false);
  CHECK(contrast.at("values").at("value") == "0");
  CHECK(contrast.at("values").at("value_without_tail") == "-2/3");
  CHECK_FALSE(contrast.at("witnesses").empty());
}

TEST_CASE("simulate") {
  const json s = run_json("simulate --example card --samples 20000 --seed 3");
  CHECK(s.at("exact_value") == "-1/3");
  CHECK(s.at("approx_mean").is_number_float());
  check_no_floats(s);
  const double z = s.at("approx_error_in_standard_errors").get<double>();
  CHECK(z <= 4.0);
  CHECK(z >= -4.0);
  const json det = run_json("simulate --example ex3 --strategy1 uniform --strategy2 uniform --samples 100");
  CHECK(det.at("exact_value").is_string());
}

TEST_CASE("identical inputs give identical bytes") {
  for (const std::string args : {"solve --example ex3 --full", "verify all --instances 2",
                                 "sweep --instances 15 --seed 4", "simulate --example card --samples 5000"}) {
    CAPTURE(args);
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("sweep writes csv") {
  const json s = run_json("sweep --instances 10 --seed 2 --T-range 2:3 --out cli_sweep.csv");
  CHECK(s.at("instances_solved") == 10);
  check_no_floats(s);
  std::ifstream in("cli_sweep.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "index,T,m,n,utility,recruits_used,base_value,best_value,gain");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 10);
  CHECK(run("sweep --utility XX").exit_code == 2);
}
