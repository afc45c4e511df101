// End-to-end tests against the built binary: exit codes, golden bytes,
// determinism across thread counts.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(APOLY_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

std::string golden(const std::string& name) {
  std::ifstream f(std::string(APOLY_GOLDEN) + "/" + name, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

nlohmann::json masked_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.contains("routes"))
    for (auto& [name, info] : j["routes"].items()) info["millis"] = 0;
  return j;
}

}  // namespace

TEST_CASE("verify --n 3 passes and matches the golden text byte for byte") {
  const RunResult r = run_cli("verify --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("verify_n3.txt"));
}

TEST_CASE("identical argv gives byte-identical output across thread counts") {
  const RunResult a = run_cli("verify --n 3 --threads 1");
  const RunResult b = run_cli("verify --n 3 --threads 4");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out == b.out);

  // json differs only in measured millis
  const RunResult ja = run_cli("verify --n 3 --format json --threads 1");
  const RunResult jb = run_cli("verify --n 3 --format json --threads 4");
  CHECK(masked_json(ja.out) == masked_json(jb.out));
}

TEST_CASE("verify json carries the declared report schema") {
  const RunResult r = run_cli("verify --n 2 --format json");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  for (const char* key :
       {"n", "routes", "equal", "expansion", "refined", "omega_convention",
        "pass", "pairwise", "first_diff"})
    CHECK(j.contains(key));
  CHECK(j["n"] == 2);
  CHECK(j["equal"] == true);
  CHECK(j["omega_convention"] == "section4");
  CHECK(j["routes"].size() == 4);
  for (const auto& [name, info] : j["routes"].items()) {
    CHECK(info["hash"].get<std::string>().size() == 64);
    CHECK(info.contains("millis"));
  }
  CHECK(j["expansion"].size() == 2);
  CHECK(j["refined"]["asm_total"] == "2");
}

TEST_CASE("the printed omega convention fails verification with a witness") {
  const RunResult r = run_cli("verify --n 3 --omega-convention theorem");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("result: FAIL") != std::string::npos);
  CHECK(r.out.find("first-diff:") != std::string::npos);
}

TEST_CASE("exit codes: usage, domain, resource guard") {
  CHECK(run_cli("verify --n 0").exit_code == 2);          // domain
  CHECK(run_cli("verify").exit_code == 2);                // missing flag
  CHECK(run_cli("verify --n 3 --bogus").exit_code == 2);  // unknown flag
  CHECK(run_cli("frobnicate").exit_code == 2);            // unknown subcommand
  CHECK(run_cli("verify --n 3 --format yaml").exit_code == 2);
  CHECK(run_cli("verify --n 6").exit_code == 3);          // desk guard
  CHECK(run_cli("asm --n 9").exit_code == 3);
  CHECK(run_cli("tspp --n 7").exit_code == 3);
  CHECK(run_cli("lemma --n 6").exit_code == 3);
  CHECK(run_cli("dyck --partition 1 --n 3").exit_code == 2);  // not mod-balanced
  CHECK(run_cli("dyck").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("verify respects --routes restriction") {
  const RunResult r =
      run_cli("verify --n 2 --routes determinant,tspp_per_lambda --format json");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["routes"].size() == 2);
  CHECK(j["routes"].contains("determinant"));
  CHECK(j["routes"].contains("tspp_per_lambda"));
  CHECK(j["expansion"].empty());
  CHECK(run_cli("verify --n 2 --routes nonsense").exit_code == 2);
}

TEST_CASE("expand: goldens and the worked-example weight line") {
  const RunResult csv = run_cli("expand --n 2 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == golden("expand_n2.csv"));
  // exactly two data rows: the empty partition and (1,1)
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 3);

  const RunResult txt = run_cli("expand --n 3");
  CHECK(txt.exit_code == 0);
  CHECK(txt.out == golden("expand_n3.txt"));
  CHECK(txt.out.find("1 · u^2 (1-u-v)^0 v^1") != std::string::npos);
}

TEST_CASE("dyck: five-part fixture and decode direction") {
  const RunResult enc = run_cli("dyck --partition 3,2,2,2,1 --n 5");
  CHECK(enc.exit_code == 0);
  CHECK(enc.out == golden("dyck_fig1.txt"));
  CHECK(enc.out.rfind("N2 E1 N2 E2 N1 E2\n", 0) == 0);

  const RunResult dec = run_cli("dyck --path \"N2 E1 N2 E2 N1 E2\"");
  CHECK(dec.exit_code == 0);
  CHECK(dec.out.find("partition: 3,2,2,2,1") != std::string::npos);
}

TEST_CASE("asm and tspp emit their golden tables") {
  const RunResult a = run_cli("asm --n 3 --format csv");
  CHECK(a.exit_code == 0);
  CHECK(a.out == golden("asm_n3.csv"));
  CHECK(a.out.rfind("n,top_col,minus_count,inv,inv_c,count\n", 0) == 0);

  const RunResult t = run_cli("tspp --n 2");
  CHECK(t.exit_code == 0);
  CHECK(t.out == golden("tspp_n2.txt"));
}

TEST_CASE("tspp json carries matrix, diag, pi and omega per entry") {
  const RunResult r = run_cli("tspp --n 2 --format json");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 5);
  REQUIRE(j["tspps"].size() == 5);
  const auto& last = j["tspps"][4];
  CHECK(last["matrix"] == nlohmann::json({{2, 2}, {2, 2}}));
  CHECK(last["pi"]["frobenius"] == "(1,0|2,1)");
  CHECK(last["omega"]["alpha"] == 3);
  CHECK(last["omega"]["gamma"] == 0);
}

TEST_CASE("forced scalar kernels reproduce the SIMD-path bytes") {
  const std::string cmd = std::string("APOLY_SIMD=scalar ") + APOLY_BIN +
                          " verify --n 3 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  CHECK(WEXITSTATUS(pclose(pipe)) == 0);
  CHECK(out == golden("verify_n3.txt"));
}

TEST_CASE("lemma subcommand passes at n=3") {
  const RunResult r = run_cli("lemma --n 3 --trials 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("result: PASS") != std::string::npos);
}

TEST_CASE("--out writes the same bytes the stdout path would") {
  const std::string path = "cli_out_test.tmp";
  const RunResult direct = run_cli("expand --n 2 --format csv");
  const RunResult filed = run_cli("expand --n 2 --format csv --out " + path);
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == direct.out);
  f.close();
  std::remove(path.c_str());
}
