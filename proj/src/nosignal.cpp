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

#include "eprsim/nosignal.hpp"

#include <cmath>
#include <ostream>
#include <set>
#include <string>

#include "eprsim/rng.hpp"

namespace eprsim {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Flattened joint table for sampling: entry order is the deterministic
// (Alice label, Bob label) order of the underlying map.
struct SamplingTable {
  std::vector<std::pair<std::string, std::string>> outcomes;
  std::vector<double> cumulative;
};

SamplingTable make_sampling_table(const JointDistribution& joint) {
  SamplingTable table;
  double cum = 0.0;
  for (const auto& [key, p] : joint.table()) {
    cum += p;
    table.outcomes.push_back(key);
    table.cumulative.push_back(cum);
  }
  if (!table.cumulative.empty()) table.cumulative.back() = 1.0;
  return table;
}

std::size_t sample_index(const SamplingTable& table, double u) {
  for (std::size_t i = 0; i + 1 < table.cumulative.size(); ++i) {
    if (u < table.cumulative[i]) return i;
  }
  return table.cumulative.size() - 1;
}

double plug_in_mi_bits(const JointDistribution::Table& table) {
  return mutual_information(JointDistribution(table));
}

}  // namespace

double total_variation(const OutcomeDistribution& p,
                       const OutcomeDistribution& q) {
  std::set<std::string> keys;
  for (const auto& [label, value] : p) keys.insert(label);
  for (const auto& [label, value] : q) keys.insert(label);
  double l1 = 0.0;
  for (const std::string& label : keys) {
    const auto pit = p.find(label);
    const auto qit = q.find(label);
    const double pv = pit == p.end() ? 0.0 : pit->second;
    const double qv = qit == q.end() ? 0.0 : qit->second;
    l1 += std::abs(pv - qv);
  }
  return 0.5 * l1;
}

double marginal_invariance_audit(
    const BipartiteState& state,
    const std::vector<QuantumInstrument>& alice_settings,
    const QuantumInstrument& bob) {
  if (alice_settings.empty()) {
    throw ValidationError("marginal_invariance_audit: no Alice settings");
  }
  bob.validate();
  std::vector<OutcomeDistribution> bob_marginals;
  bob_marginals.reserve(alice_settings.size());
  for (const QuantumInstrument& alice : alice_settings) {
    alice.validate();
    bob_marginals.push_back(
        joint_statistics(state, alice, bob).bob_marginal());
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < bob_marginals.size(); ++i)
    for (std::size_t j = i + 1; j < bob_marginals.size(); ++j)
      worst = std::max(worst, total_variation(bob_marginals[i],
                                              bob_marginals[j]));
  return worst;
}

double mutual_information(const JointDistribution& joint) {
  const double total = joint.total();
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidationError("mutual_information: distribution is unnormalized, "
                          "total = " + std::to_string(total));
  }
  const OutcomeDistribution pa = joint.alice_marginal();
  const OutcomeDistribution pb = joint.bob_marginal();
  double mi = 0.0;
  for (const auto& [key, p] : joint.table()) {
    if (p <= 0.0) continue;  // 0 log 0 := 0
    mi += p * std::log2(p / (pa.at(key.first) * pb.at(key.second)));
  }
  if (mi < 0.0 && mi >= -1e-12) mi = 0.0;
  return mi;
}

SignalingProtocol SignalingProtocol::defaults() {
  return SignalingProtocol{
      pbs_instrument(PolarizationAngle(0.0)),
      pbs_instrument(PolarizationAngle(kPi / 4.0)),
      ideal_michalski(PolarizationAngle(kPi / 4.0)),
      1'000'000,
      0,
  };
}

double ber_deviation_bound(std::uint64_t shots) {
  return 2.0 / std::sqrt(static_cast<double>(shots));
}

double empirical_mi_bound(std::uint64_t shots) {
  return 100.0 / static_cast<double>(shots);
}

JointDistribution telephone_joint(const BipartiteState& state,
                                  const QuantumInstrument& encode_zero,
                                  const QuantumInstrument& encode_one,
                                  const QuantumInstrument& bob) {
  const OutcomeDistribution bob_zero =
      joint_statistics(state, encode_zero, bob).bob_marginal();
  const OutcomeDistribution bob_one =
      joint_statistics(state, encode_one, bob).bob_marginal();
  JointDistribution::Table table;
  for (const auto& [label, p] : bob_zero) table[{"0", label}] = 0.5 * p;
  for (const auto& [label, p] : bob_one) table[{"1", label}] = 0.5 * p;
  return JointDistribution(std::move(table));
}

AuditReport run_telephone(const SignalingProtocol& protocol,
                          std::ostream* transcript) {
  if (protocol.shots < 1) {
    throw ValidationError("run_telephone: shots must be >= 1");
  }
  protocol.encode_zero.validate();
  protocol.encode_one.validate();
  protocol.bob_device.validate();

  const BipartiteState pair = phi_plus();
  const JointDistribution joint_zero =
      joint_statistics(pair, protocol.encode_zero, protocol.bob_device);
  const JointDistribution joint_one =
      joint_statistics(pair, protocol.encode_one, protocol.bob_device);

  AuditReport report;
  report.shots = protocol.shots;
  report.seed = protocol.seed;
  report.refuted_claim_probability = 1.0;
  report.ber_deviation_bound = ber_deviation_bound(protocol.shots);
  report.empirical_mi_bound = empirical_mi_bound(protocol.shots);

  // Analytic side: Bob's marginals across the two encodings and the mutual
  // information of the (uniform bit, Bob outcome) joint.
  report.max_marginal_tv =
      total_variation(joint_zero.bob_marginal(), joint_one.bob_marginal());
  report.analytic_mi_bits =
      mutual_information(telephone_joint(pair, protocol.encode_zero,
                                         protocol.encode_one,
                                         protocol.bob_device));

  // Empirical side: seeded sampling from the exact joint tables. Per shot,
  // draw order is pinned: one uint64 whose top bit is the sent bit, then one
  // double for the joint outcome.
  const SamplingTable table_zero = make_sampling_table(joint_zero);
  const SamplingTable table_one = make_sampling_table(joint_one);

  Xoshiro256StarStar rng(protocol.seed);
  JointDistribution::Table counts;
  std::uint64_t errors = 0;

  if (transcript != nullptr) {
    *transcript << "shot,sent_bit,alice_outcome,bob_outcome\n";
  }

  for (std::uint64_t shot = 0; shot < protocol.shots; ++shot) {
    const int bit = rng.next_bit();
    const SamplingTable& table = bit == 0 ? table_zero : table_one;
    const std::size_t index = sample_index(table, rng.next_double());
    const auto& [alice_outcome, bob_outcome] = table.outcomes[index];

    const int decoded = bob_outcome == labels::kFirstPlus ? 0 : 1;
    if (decoded != bit) ++errors;
    counts[{bit == 0 ? "0" : "1", bob_outcome}] += 1.0;

    if (transcript != nullptr) {
      *transcript << shot << ',' << bit << ',' << alice_outcome << ','
                  << bob_outcome << '\n';
    }
  }

  report.bit_error_rate =
      static_cast<double>(errors) / static_cast<double>(protocol.shots);
  for (auto& [key, count] : counts) count /= static_cast<double>(protocol.shots);
  report.empirical_mi_bits = plug_in_mi_bits(counts);

  report.verdict =
      report.max_marginal_tv <= kTol && report.analytic_mi_bits <= kTol &&
      std::abs(report.bit_error_rate - 0.5) <= report.ber_deviation_bound &&
      report.empirical_mi_bits <= report.empirical_mi_bound;
  return report;
}

}  // namespace eprsim
