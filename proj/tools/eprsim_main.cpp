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

// Command-line front end. Exit status contract:
//   0 - run completed and any physics verdict passed
//   1 - a physics assertion failed (the math disagrees with no-signaling)
//   2 - usage, parse, or validation error

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eprsim/device_spec.hpp"
#include "eprsim/epr.hpp"
#include "eprsim/errors.hpp"
#include "eprsim/instruments.hpp"
#include "eprsim/linalg.hpp"
#include "eprsim/nosignal.hpp"
#include "eprsim/polarization.hpp"
#include "eprsim/report.hpp"
#include "eprsim/version.hpp"

namespace {

using eprsim::DensityOperator;
using eprsim::Matrix;
using eprsim::OutcomeDistribution;
using eprsim::PolarizationAngle;
using eprsim::QuantumInstrument;
using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitPhysicsFail = 1;
constexpr int kExitUsage = 2;

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) {
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json distribution_to_json(const OutcomeDistribution& dist) {
  json node = json::object();
  for (const auto& [label, p] : dist) node[label] = p;
  return node;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw eprsim::ValidationError("cannot open file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

eprsim::DeviceSpecDocument load_device(const std::string& path) {
  return eprsim::parse_device_spec(read_file(path));
}

void print_report(const eprsim::ReportDocument& doc,
                  const std::string& format_name) {
  std::cout << eprsim::emit_report(doc,
                                   eprsim::parse_report_format(format_name));
}

json audit_report_to_json(const eprsim::AuditReport& report) {
  json node;
  node["max_marginal_tv"] = report.max_marginal_tv;
  node["analytic_mi_bits"] = report.analytic_mi_bits;
  node["empirical_mi_bits"] = report.empirical_mi_bits;
  node["bit_error_rate"] = report.bit_error_rate;
  node["refuted_claim_probability"] = report.refuted_claim_probability;
  node["shots"] = report.shots;
  node["seed"] = report.seed;
  node["ber_deviation_bound"] = report.ber_deviation_bound;
  node["empirical_mi_bound"] = report.empirical_mi_bound;
  node["verdict"] = report.verdict ? "pass" : "fail";
  return node;
}

// The default Alice battery for `audit`: a polarizer grid, the identity
// (no measurement), and the coarse-grained multiport.
std::vector<std::pair<std::string, QuantumInstrument>> default_settings() {
  std::vector<std::pair<std::string, QuantumInstrument>> settings;
  for (double deg : {0.0, 22.5, 45.0, 67.5, 90.0}) {
    settings.emplace_back("pbs(" + eprsim::format_double(deg) + "deg)",
                          pbs_instrument(PolarizationAngle::from_degrees(deg)));
  }
  settings.emplace_back("identity", eprsim::identity_instrument());
  settings.emplace_back(
      "coarse_grained(ideal_michalski(45deg))",
      eprsim::coarse_grain(
          eprsim::ideal_michalski(PolarizationAngle::from_degrees(45.0))));
  return settings;
}

int run_reduce(const std::string& traced_out, const std::string& format) {
  const eprsim::BipartiteState state = eprsim::phi_plus();
  const eprsim::Party party =
      traced_out == "alice" ? eprsim::Party::kAlice : eprsim::Party::kBob;
  const DensityOperator reduced = eprsim::partial_trace(state.rho, party);
  const double distance =
      eprsim::trace_distance(reduced, DensityOperator::maximally_mixed(2));
  const bool pass = distance <= eprsim::kTol;

  eprsim::ReportDocument doc;
  doc.command = "reduce";
  doc.tool_version = eprsim::kToolVersion;
  doc.input = {{"state", "phi_plus"}, {"traced_out", traced_out}};
  doc.result = {{"reduced_state", matrix_to_json(reduced.matrix())},
                {"trace_distance_to_maximally_mixed", distance},
                {"verdict", pass ? "pass" : "fail"}};
  print_report(doc, format);
  return pass ? kExitPass : kExitPhysicsFail;
}

int run_device_run(const std::string& device_path, double alpha_deg,
                   const std::string& format) {
  const eprsim::DeviceSpecDocument spec = load_device(device_path);
  const QuantumInstrument device = eprsim::build_device(spec);
  const DensityOperator input = DensityOperator::from_pure(
      eprsim::linear_state(PolarizationAngle::from_degrees(alpha_deg)));

  json outcomes = json::array();
  for (const eprsim::OutcomeRecord& record :
       eprsim::apply_instrument(device, input)) {
    json entry;
    entry["label"] = record.label;
    entry["probability"] = record.probability;
    if (record.post_state.has_value()) {
      entry["post_state"] = matrix_to_json(record.post_state->matrix());
    }
    outcomes.push_back(std::move(entry));
  }

  eprsim::ReportDocument doc;
  doc.command = "device-run";
  doc.tool_version = eprsim::kToolVersion;
  doc.input = {{"device", json::parse(eprsim::serialize_device_spec(spec))},
               {"alpha_deg", alpha_deg}};
  doc.result = {{"outcomes", std::move(outcomes)}};
  print_report(doc, format);
  return kExitPass;
}

int run_device_compare(const std::string& path_a, const std::string& path_b,
                       const std::vector<std::string>& pair_flags,
                       double expect_max, bool expect_max_set,
                       const std::string& format) {
  const eprsim::DeviceSpecDocument spec_a = load_device(path_a);
  const eprsim::DeviceSpecDocument spec_b = load_device(path_b);
  const QuantumInstrument a = eprsim::build_device(spec_a);
  const QuantumInstrument b = eprsim::build_device(spec_b);

  eprsim::LabelPairing pairing;
  if (pair_flags.empty()) {
    // Default: pair identically named branches.
    for (const eprsim::InstrumentBranch& branch : a.branches()) {
      if (b.has_label(branch.label)) {
        pairing.emplace_back(branch.label, branch.label);
      }
    }
  } else {
    for (const std::string& flag : pair_flags) {
      const auto eq = flag.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == flag.size()) {
        throw eprsim::ValidationError("--pair expects LABEL_A=LABEL_B, got '" +
                                      flag + "'");
      }
      pairing.emplace_back(flag.substr(0, eq), flag.substr(eq + 1));
    }
  }

  const double distance = eprsim::instrument_distance(a, b, pairing);
  const bool pass = !expect_max_set || distance <= expect_max;

  json pairing_json = json::array();
  for (const auto& [la, lb] : pairing) {
    pairing_json.push_back(json::array({la, lb}));
  }

  eprsim::ReportDocument doc;
  doc.command = "device-compare";
  doc.tool_version = eprsim::kToolVersion;
  doc.input = {{"device_a", json::parse(eprsim::serialize_device_spec(spec_a))},
               {"device_b", json::parse(eprsim::serialize_device_spec(spec_b))},
               {"pairing", std::move(pairing_json)}};
  if (expect_max_set) doc.input["expect_max"] = expect_max;
  doc.result = {{"distance", distance},
                {"verdict", pass ? "pass" : "fail"}};
  print_report(doc, format);
  return pass ? kExitPass : kExitPhysicsFail;
}

int run_cascade_converge(double omega_deg, double alpha_deg,
                         const std::vector<int>& n_values,
                         const std::string& format) {
  const PolarizationAngle omega = PolarizationAngle::from_degrees(omega_deg);
  const DensityOperator input = DensityOperator::from_pure(
      eprsim::linear_state(PolarizationAngle::from_degrees(alpha_deg)));

  json rows = json::array();
  for (int n : n_values) {
    const QuantumInstrument cascade =
        eprsim::zeno_cascade(eprsim::CascadeParams{n, omega});
    double leak = 0.0;
    for (const eprsim::OutcomeRecord& record :
         eprsim::apply_instrument(cascade, input)) {
      if (record.label.rfind("LEAK_", 0) == 0) leak += record.probability;
    }
    rows.push_back(json::array({n, leak}));
  }

  eprsim::ReportDocument doc;
  doc.command = "cascade-converge";
  doc.tool_version = eprsim::kToolVersion;
  doc.input = {{"omega_deg", omega_deg},
               {"alpha_deg", alpha_deg},
               {"n", n_values}};
  doc.result = {{"columns", json::array({"n", "leak_probability"})},
                {"rows", std::move(rows)}};
  print_report(doc, format);
  return kExitPass;
}

int run_audit(double omega_deg, const std::string& format) {
  const eprsim::BipartiteState state = eprsim::phi_plus();
  const QuantumInstrument bob =
      eprsim::ideal_michalski(PolarizationAngle::from_degrees(omega_deg));

  std::vector<std::string> setting_names;
  std::vector<QuantumInstrument> settings;
  for (auto& [name, instrument] : default_settings()) {
    setting_names.push_back(name);
    settings.push_back(std::move(instrument));
  }

  const double max_tv = eprsim::marginal_invariance_audit(state, settings, bob);
  const eprsim::SignalingProtocol defaults =
      eprsim::SignalingProtocol::defaults();
  const double analytic_mi = eprsim::mutual_information(eprsim::telephone_joint(
      state, defaults.encode_zero, defaults.encode_one, bob));
  const bool pass = max_tv <= eprsim::kTol && analytic_mi <= eprsim::kTol;

  eprsim::ReportDocument doc;
  doc.command = "audit";
  doc.tool_version = eprsim::kToolVersion;
  doc.input = {{"bob_device",
                {{"type", "ideal_michalski"}, {"omega_deg", omega_deg}}},
               {"alice_settings", setting_names}};
  doc.result = {{"max_marginal_tv", max_tv},
                {"analytic_mi_bits", analytic_mi},
                {"verdict", pass ? "pass" : "fail"}};
  print_report(doc, format);
  return pass ? kExitPass : kExitPhysicsFail;
}

int run_telephone_command(std::uint64_t shots, std::uint64_t seed,
                          const std::string& transcript_path,
                          const std::string& format) {
  eprsim::SignalingProtocol protocol = eprsim::SignalingProtocol::defaults();
  protocol.shots = shots;
  protocol.seed = seed;

  std::ofstream transcript;
  if (!transcript_path.empty()) {
    transcript.open(transcript_path, std::ios::binary);
    if (!transcript) {
      throw eprsim::ValidationError("cannot open transcript file '" +
                                    transcript_path + "'");
    }
  }

  const eprsim::AuditReport report = eprsim::run_telephone(
      protocol, transcript.is_open() ? &transcript : nullptr);

  eprsim::ReportDocument doc;
  doc.command = "telephone";
  doc.tool_version = eprsim::kToolVersion;
  doc.seed = seed;
  doc.input = {{"shots", shots},
               {"encoding",
                {{"0", {{"type", "pbs"}, {"omega_deg", 0.0}}},
                 {"1", {{"type", "pbs"}, {"omega_deg", 45.0}}}}},
               {"bob_device",
                {{"type", "ideal_michalski"}, {"omega_deg", 45.0}}}};
  if (!transcript_path.empty()) doc.input["transcript"] = transcript_path;
  doc.result = audit_report_to_json(report);
  print_report(doc, format);
  return report.verdict ? kExitPass : kExitPhysicsFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EPR-pair polarization devices and no-signaling audits"};
  app.set_version_flag("--version", eprsim::kToolVersion);
  app.require_subcommand(1);

  std::string format = "structured";
  app.add_option("--format", format, "Output format (default: structured)")
      ->check(CLI::IsMember({"structured", "tabular"}));

  auto* reduce = app.add_subcommand(
      "reduce", "Reduced one-photon state of the shared pair");
  std::string traced_out = "bob";
  reduce->add_option("--traced-out", traced_out, "Subsystem to trace out")
      ->check(CLI::IsMember({"alice", "bob"}));

  auto* device_run = app.add_subcommand(
      "device-run", "Apply a device to an input polarization");
  std::string device_path;
  double alpha_deg = 0.0;
  device_run->add_option("--device", device_path, "Device spec file")
      ->required();
  device_run->add_option("--alpha-deg", alpha_deg,
                         "Input linear polarization in degrees")
      ->required();

  auto* device_compare = app.add_subcommand(
      "device-compare", "Branch-by-branch distance between two devices");
  std::string path_a, path_b;
  std::vector<std::string> pair_flags;
  double expect_max = 0.0;
  device_compare->add_option("device_a", path_a, "First device spec file")
      ->required();
  device_compare->add_option("device_b", path_b, "Second device spec file")
      ->required();
  device_compare->add_option("--pair", pair_flags,
                             "Branch pairing LABEL_A=LABEL_B (repeatable; "
                             "default pairs identical labels)");
  auto* expect_opt = device_compare->add_option(
      "--expect-max", expect_max, "Fail (exit 1) if the distance exceeds this");

  auto* cascade = app.add_subcommand(
      "cascade-converge", "Leak probability of the finite cascade over n");
  double cascade_omega_deg = 45.0;
  double cascade_alpha_deg = 135.0;
  std::vector<int> n_values;
  cascade->add_option("--omega-deg", cascade_omega_deg, "Device orientation");
  cascade->add_option("--alpha-deg", cascade_alpha_deg, "Input polarization");
  cascade->add_option("--n", n_values, "Comma-separated beamsplitter counts")
      ->required()
      ->delimiter(',');

  auto* audit = app.add_subcommand(
      "audit", "Marginal-invariance audit plus analytic mutual information");
  double audit_omega_deg = 45.0;
  audit->add_option("--omega-deg", audit_omega_deg,
                    "Bob's device orientation (ideal multiport)");

  auto* telephone = app.add_subcommand(
      "telephone", "Seeded Monte-Carlo run of the bit-sending attempt");
  std::uint64_t shots = 1'000'000;
  std::uint64_t seed = 42;
  std::string transcript_path;
  telephone->add_option("--shots", shots, "Number of EPR pairs to consume");
  telephone->add_option("--seed", seed, "RNG seed (xoshiro256**)");
  telephone->add_option("--transcript", transcript_path,
                        "Write per-shot CSV transcript to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (reduce->parsed()) return run_reduce(traced_out, format);
    if (device_run->parsed())
      return run_device_run(device_path, alpha_deg, format);
    if (device_compare->parsed())
      return run_device_compare(path_a, path_b, pair_flags, expect_max,
                                expect_opt->count() > 0, format);
    if (cascade->parsed())
      return run_cascade_converge(cascade_omega_deg, cascade_alpha_deg,
                                  n_values, format);
    if (audit->parsed()) return run_audit(audit_omega_deg, format);
    if (telephone->parsed())
      return run_telephone_command(shots, seed, transcript_path, format);
  } catch (const eprsim::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const eprsim::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
