// Copyright 2026 The eprsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end checks against the installed binary: exit-status contract
// (0 physics-pass, 1 physics-fail, 2 usage/parse), report shapes, and
// byte-identical reruns. The binary path arrives as the last argument.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

namespace {

std::string g_cli;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  const std::string err_path = "cli_stderr.tmp";
  const std::string command = g_cli + " " + args + " 2>" + err_path;

  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t n;
  while ((n = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  std::ifstream err_file(err_path, std::ios::binary);
  std::ostringstream err_text;
  err_text << err_file.rdbuf();
  result.err = err_text.str();
  return result;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << content;
}

nlohmann::json parse_report(const std::string& text) {
  return nlohmann::json::parse(text);
}

}  // namespace

TEST_CASE("version and usage errors") {
  CHECK(run_cli("--version").code == 0);
  CHECK(run_cli("--version").out.find("0.1.0") != std::string::npos);

  CHECK(run_cli("").code == 2);           // a subcommand is required
  CHECK(run_cli("teleport").code == 2);   // unknown subcommand
  CHECK(run_cli("device-run").code == 2); // missing required options
  CHECK(run_cli("--format yaml reduce").code == 2);
}

TEST_CASE("reduce reports the maximally mixed state and passes") {
  const RunResult result = run_cli("reduce");
  CHECK(result.code == 0);

  const nlohmann::json report = parse_report(result.out);
  CHECK(report["command"] == "reduce");
  CHECK(report["result"]["verdict"] == "pass");
  CHECK(report["result"]["trace_distance_to_maximally_mixed"].get<double>() <=
        1e-12);
  CHECK(report["result"]["reduced_state"][0][0][0].get<double>() ==
        doctest::Approx(0.5));
  CHECK(report["result"]["reduced_state"][0][1][0].get<double>() ==
        doctest::Approx(0.0));

  CHECK(run_cli("reduce --traced-out alice").code == 0);
  // Determinism: repeated runs emit identical bytes.
  CHECK(run_cli("reduce").out == result.out);
}

TEST_CASE("device files drive the run and compare commands") {
  write_file("cli_ideal45.json",
             R"({"type":"ideal_michalski","omega_deg":45})");
  write_file("cli_simplified45.json",
             R"({"type":"simplified_analyzer","omega_deg":45})");
  write_file("cli_coarse45.json",
             R"({"type":"coarse_grained",
                 "inner":{"type":"ideal_michalski","omega_deg":45}})");
  write_file("cli_bad_syntax.json", R"({"type": )");
  write_file("cli_bad_n.json", R"({"type":"zeno_cascade","omega_deg":45,"n":1})");

  const RunResult run = run_cli(
      "device-run --device cli_ideal45.json --alpha-deg 45");
  CHECK(run.code == 0);
  const nlohmann::json report = parse_report(run.out);
  CHECK(report["result"]["outcomes"][0]["label"] == "FIRST_PLUS");
  CHECK(report["result"]["outcomes"][0]["probability"].get<double>() ==
        doctest::Approx(1.0));

  // Parse and validation failures are usage errors, with diagnostics on
  // stderr rather than a half-written report on stdout.
  const RunResult missing = run_cli(
      "device-run --device cli_nonexistent.json --alpha-deg 0");
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);

  const RunResult syntax = run_cli(
      "device-run --device cli_bad_syntax.json --alpha-deg 0");
  CHECK(syntax.code == 2);
  CHECK(syntax.err.find("device spec error at byte") != std::string::npos);
  CHECK(syntax.out.empty());

  const RunResult bad_n = run_cli(
      "device-run --device cli_bad_n.json --alpha-deg 0");
  CHECK(bad_n.code == 2);
  CHECK(bad_n.err.find("n must be >= 2") != std::string::npos);

  // The simplified analyzer is the device.
  const RunResult same = run_cli(
      "device-compare cli_simplified45.json cli_ideal45.json");
  CHECK(same.code == 0);
  CHECK(parse_report(same.out)["result"]["distance"].get<double>() <= 1e-12);

  // The coarse-grained reading is not, and --expect-max turns that into a
  // physics failure (exit 1, not 2).
  const RunResult coarse = run_cli(
      "device-compare cli_ideal45.json cli_coarse45.json "
      "--pair FIRST_PLUS=PRESENT --expect-max 0.4");
  CHECK(coarse.code == 1);
  const nlohmann::json coarse_report = parse_report(coarse.out);
  CHECK(coarse_report["result"]["verdict"] == "fail");
  CHECK(coarse_report["result"]["distance"].get<double>() >= 0.5);

  CHECK(run_cli("device-compare cli_ideal45.json cli_coarse45.json "
                "--pair NOPE").code == 2);
}

TEST_CASE("cascade convergence table") {
  const RunResult csv = run_cli(
      "--format tabular cascade-converge --omega-deg 45 --alpha-deg 135 "
      "--n 2,3,11");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("n,leak_probability\n", 0) == 0);
  CHECK(csv.out.find("\n2,1\n") != std::string::npos);
  CHECK(csv.out.find("\n3,0.75\n") != std::string::npos);
  CHECK(csv.out.find("\n11,0.21945393021886\n") != std::string::npos);

  const RunResult structured = run_cli(
      "cascade-converge --omega-deg 45 --alpha-deg 135 --n 2,1001");
  CHECK(structured.code == 0);
  const nlohmann::json report = parse_report(structured.out);
  CHECK(report["result"]["rows"][1][1].get<double>() <= 0.0025);
}

TEST_CASE("audit and telephone verdicts") {
  const RunResult audit = run_cli("audit");
  CHECK(audit.code == 0);
  const nlohmann::json audit_report = parse_report(audit.out);
  CHECK(audit_report["result"]["verdict"] == "pass");
  CHECK(audit_report["result"]["max_marginal_tv"].get<double>() <= 1e-12);
  CHECK(audit_report["result"]["analytic_mi_bits"].get<double>() <= 1e-12);

  const RunResult first = run_cli("telephone --shots 2000 --seed 42");
  CHECK(first.code == 0);
  const nlohmann::json phone = parse_report(first.out);
  CHECK(phone["seed"] == 42);
  CHECK(phone["result"]["verdict"] == "pass");
  CHECK(phone["result"]["refuted_claim_probability"].get<double>() == 1.0);

  // Same seed, same bytes.
  CHECK(run_cli("telephone --shots 2000 --seed 42").out == first.out);
  CHECK(run_cli("telephone --shots 2000 --seed 43").out != first.out);

  CHECK(run_cli("telephone --shots 0").code == 2);

  const RunResult with_transcript = run_cli(
      "telephone --shots 50 --seed 7 --transcript cli_transcript.csv");
  CHECK(with_transcript.code == 0);
  std::ifstream transcript("cli_transcript.csv");
  REQUIRE(transcript.good());
  std::string header;
  std::getline(transcript, header);
  CHECK(header == "shot,sent_bit,alice_outcome,bob_outcome");
  std::size_t rows = 0;
  for (std::string line; std::getline(transcript, line);) ++rows;
  CHECK(rows == 50);
}

int main(int argc, char** argv) {
  int forwarded = argc;
  if (argc > 1 && argv[argc - 1][0] != '-') {
    g_cli = argv[argc - 1];
    --forwarded;
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: %s [doctest options] <path to eprsim>\n",
                 argv[0]);
    return 64;
  }
  doctest::Context context;
  context.applyCommandLine(forwarded, argv);
  return context.run();
}
