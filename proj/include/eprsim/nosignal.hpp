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

#ifndef EPRSIM_NOSIGNAL_HPP_
#define EPRSIM_NOSIGNAL_HPP_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "eprsim/epr.hpp"
#include "eprsim/instruments.hpp"

namespace eprsim {

// Half the L1 distance between two labeled distributions; missing labels
// count as zero.
double total_variation(const OutcomeDistribution& p,
                       const OutcomeDistribution& q);

// Max over pairs of Alice settings of the total-variation distance between
// Bob's outcome distributions. Every instrument is validated on entry, so a
// non-trace-preserving "device" is rejected rather than silently audited.
// For any valid quantum model the result is zero within tolerance.
double marginal_invariance_audit(
    const BipartiteState& state,
    const std::vector<QuantumInstrument>& alice_settings,
    const QuantumInstrument& bob);

// Mutual information in bits, I = sum p(a,b) log2[p(a,b) / (p(a) p(b))],
// with 0 log 0 = 0. Throws if the table is unnormalized beyond 1e-9. Results
// in [-1e-12, 0) are clamped to 0.
double mutual_information(const JointDistribution& joint);

// One attempted superluminal transmission: Alice encodes a bit by her
// choice of measurement, Bob decodes from his detector. The defaults are
// the strongest natural steering attempt.
struct SignalingProtocol {
  QuantumInstrument encode_zero;  // Alice's device for bit 0
  QuantumInstrument encode_one;   // Alice's device for bit 1
  QuantumInstrument bob_device;
  std::uint64_t shots = 1'000'000;
  std::uint64_t seed = 0;

  // bit 0 -> pbs(0), bit 1 -> pbs(pi/4), Bob -> ideal_michalski(pi/4).
  static SignalingProtocol defaults();
};

// No-signaling verdict. refuted_claim_probability records the 1 - epsilon
// detection probability the telephone scheme promises; it is narrative
// baseline only and plays no role in any computation.
struct AuditReport {
  double max_marginal_tv = 0.0;
  double analytic_mi_bits = 0.0;
  double empirical_mi_bits = 0.0;
  double bit_error_rate = 0.0;
  double refuted_claim_probability = 1.0;
  bool verdict = false;

  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  // Bounds the verdict used: 4-sigma binomial deviation for the bit-error
  // rate and a generous ceiling for the plug-in mutual-information bias.
  double ber_deviation_bound = 0.0;
  double empirical_mi_bound = 0.0;
};

// Verdict bounds as functions of the shot count. At 10^6 shots these are
// 0.002 (= 4 * 0.5/sqrt(N)) and 1e-4 bits.
double ber_deviation_bound(std::uint64_t shots);
double empirical_mi_bound(std::uint64_t shots);

// Joint distribution of (uniform sent bit, Bob outcome) for the analytic
// telephone: P(bit, b) = 0.5 * P(b | Alice's encoding of that bit). Alice
// labels are "0" and "1".
JointDistribution telephone_joint(const BipartiteState& state,
                                  const QuantumInstrument& encode_zero,
                                  const QuantumInstrument& encode_one,
                                  const QuantumInstrument& bob);

// Runs the telephone: `shots` uniformly random bits, outcomes sampled from
// the exact joint distributions (seeded xoshiro256**, reproducible), Bob
// decoding FIRST_PLUS -> 0 and anything else -> 1. When `transcript` is
// non-null, writes CSV rows "shot,sent_bit,alice_outcome,bob_outcome" with
// a header line. Single-threaded; this path is the normative reference for
// any sharded variant.
AuditReport run_telephone(const SignalingProtocol& protocol,
                          std::ostream* transcript = nullptr);

}  // namespace eprsim

#endif  // EPRSIM_NOSIGNAL_HPP_
