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

#ifndef EPRSIM_INSTRUMENTS_HPP_
#define EPRSIM_INSTRUMENTS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eprsim/linalg.hpp"
#include "eprsim/polarization.hpp"

namespace eprsim {

// Outcome labels are plain text tags, unique within one instrument.
namespace labels {
inline const std::string kFirstPlus = "FIRST_PLUS";
inline const std::string kLastPlus = "LAST_PLUS";
inline const std::string kPbsPlus = "PBS_PLUS";
inline const std::string kPbsMinus = "PBS_MINUS";
inline const std::string kPresent = "PRESENT";
std::string leak(int k);  // "LEAK_1", "LEAK_2", ...
}  // namespace labels

// One classical outcome of an instrument. Ordinary branches carry a single
// Kraus operator; a coarse-grained branch retains the merged operators as a
// multi-Kraus set so its channel action stays exact.
struct InstrumentBranch {
  std::string label;
  std::vector<Matrix> kraus;
};

// Measurement device with classical readout and quantum output: an ordered
// set of labeled Kraus branches satisfying completeness sum K†K = I. All
// modeled devices are lossless; leak ports are explicit outcomes, not losses.
class QuantumInstrument {
 public:
  // Single-Kraus branches, validated. Rejects duplicate labels and
  // completeness defects beyond `tol`.
  static QuantumInstrument build(
      const std::vector<std::pair<std::string, Matrix>>& branches,
      double tol = 1e-9);

  // Multi-Kraus branches, validated.
  static QuantumInstrument build_multi(std::vector<InstrumentBranch> branches,
                                       double tol = 1e-9);

  // Skips validation. Exists so tests and audits can probe how downstream
  // checks treat non-physical devices; audits re-validate on entry.
  static QuantumInstrument unchecked(std::vector<InstrumentBranch> branches);

  const std::vector<InstrumentBranch>& branches() const { return branches_; }
  std::size_t dim() const;
  bool has_label(const std::string& label) const;

  // Operator norm of (sum K†K - I).
  double completeness_defect() const;
  // Throws ValidationError on duplicate labels or completeness defect > tol.
  void validate(double tol = 1e-9) const;

 private:
  explicit QuantumInstrument(std::vector<InstrumentBranch> branches)
      : branches_(std::move(branches)) {}

  std::vector<InstrumentBranch> branches_;
};

// Outcome probability below which no post-state is attached (avoids dividing
// by a vanishing norm).
inline constexpr double kProbabilityFloor = 1e-14;

struct OutcomeRecord {
  std::string label;
  double probability = 0.0;
  std::optional<DensityOperator> post_state;
};

// Born-rule application: per branch, probability tr(K rho K†) (summed over
// the branch's Kraus set) and the normalized post-state. Probabilities sum
// to 1 by completeness.
std::vector<OutcomeRecord> apply_instrument(const QuantumInstrument& instr,
                                            const DensityOperator& rho);

struct CascadeParams {
  int n = 2;  // number of beamsplitters, >= 2
  PolarizationAngle omega;
};

// Polarizing beamsplitter at omega: projective branches
// (PBS_PLUS, |omega><omega|) and (PBS_MINUS, |omega+pi/2><omega+pi/2|).
QuantumInstrument pbs_instrument(PolarizationAngle omega);

// The "no measurement" device: a single PRESENT branch with the identity.
QuantumInstrument identity_instrument();

// The multiport device in its infinite-stage limit: every photon exits by
// the + port of the first or the last beamsplitter, always in the common
// exit state Psi+ = |omega>. Branches (FIRST_PLUS, |Psi+><omega|) and
// (LAST_PLUS, |Psi+><omega+pi/2|).
QuantumInstrument ideal_michalski(PolarizationAngle omega);

// Finite-stage cascade converging to ideal_michalski as n grows. The - beam
// of the first beamsplitter crosses m = n-1 analyzer stages, each tilted by
// delta = (pi/2)/m toward omega; the aligned component continues and the
// orthogonal component exits as LEAK_k with amplitude cos^(k-1)(delta) *
// sin(delta). Completeness is exact by the geometric identity
// sum cos^{2(k-1)} sin^2 + cos^{2m} = 1.
QuantumInstrument zeno_cascade(const CascadeParams& params);

// Single polarizing beamsplitter at omega with a half-wave plate at
// omega + pi/4 behind its - port. Both branches emit the Psi+ ray; the
// device equals ideal_michalski(omega) branch by branch.
QuantumInstrument simplified_analyzer(PolarizationAngle omega);

// Merges all outcomes into one PRESENT branch whose channel action is
// rho -> sum K rho K† (the Kraus operators are retained, so the action is
// exact). This is the mistaken reading of the device: it then only records
// that a photon arrived.
QuantumInstrument coarse_grain(const QuantumInstrument& instr);

// Pairing of branch labels of instrument `a` with labels of instrument `b`.
// May be partial; unpaired branches on either side are compared against the
// zero operator.
using LabelPairing = std::vector<std::pair<std::string, std::string>>;

// Max over branches of the phase-minimized operator-norm difference
// min_phi ||K_a - e^{i phi} K_b||. Zero means the instruments are identical
// up to per-branch global phases. Throws on labels missing from a pairing.
double instrument_distance(const QuantumInstrument& a,
                           const QuantumInstrument& b,
                           const LabelPairing& pairing);

}  // namespace eprsim

#endif  // EPRSIM_INSTRUMENTS_HPP_
