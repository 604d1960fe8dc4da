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

#include "eprsim/epr.hpp"

#include <cmath>

namespace eprsim {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

BipartiteState phi_plus() {
  const StateVector amplitudes({Complex(kInvSqrt2, 0.0), Complex(0.0, 0.0),
                                Complex(0.0, 0.0), Complex(kInvSqrt2, 0.0)});
  return BipartiteState{DensityOperator::from_pure(amplitudes)};
}

JointDistribution::JointDistribution(Table table) : table_(std::move(table)) {
  for (const auto& [key, p] : table_) {
    if (!std::isfinite(p)) {
      throw ValidationError("JointDistribution: probabilities must be finite");
    }
    if (p < -1e-14) {
      throw ValidationError("JointDistribution: negative probability for (" +
                            key.first + ", " + key.second + ")");
    }
  }
}

double JointDistribution::probability(const std::string& alice,
                                      const std::string& bob) const {
  const auto it = table_.find({alice, bob});
  return it == table_.end() ? 0.0 : it->second;
}

double JointDistribution::total() const {
  double t = 0.0;
  for (const auto& [key, p] : table_) t += p;
  return t;
}

OutcomeDistribution JointDistribution::alice_marginal() const {
  OutcomeDistribution marginal;
  for (const auto& [key, p] : table_) marginal[key.first] += p;
  return marginal;
}

OutcomeDistribution JointDistribution::bob_marginal() const {
  OutcomeDistribution marginal;
  for (const auto& [key, p] : table_) marginal[key.second] += p;
  return marginal;
}

JointDistribution joint_statistics(const BipartiteState& state,
                                   const QuantumInstrument& alice,
                                   const QuantumInstrument& bob) {
  if (state.rho.dim() != 4) {
    throw ValidationError("joint_statistics: state must have dimension 4");
  }
  alice.validate();
  bob.validate();

  JointDistribution::Table table;
  for (const InstrumentBranch& a : alice.branches()) {
    for (const InstrumentBranch& b : bob.branches()) {
      double p = 0.0;
      for (const Matrix& ka : a.kraus) {
        for (const Matrix& lb : b.kraus) {
          const Matrix joint_op = tensor_product(ka, lb);
          p += (joint_op * state.rho.matrix() * joint_op.adjoint())
                   .trace()
                   .real();
        }
      }
      table[{a.label, b.label}] = p;
    }
  }
  return JointDistribution(std::move(table));
}

ConditionalState conditional_bob_state(const BipartiteState& state,
                                       const QuantumInstrument& alice,
                                       const std::string& outcome) {
  if (state.rho.dim() != 4) {
    throw ValidationError("conditional_bob_state: state must have dimension 4");
  }
  alice.validate();
  if (!alice.has_label(outcome)) {
    throw ValidationError("conditional_bob_state: unknown outcome '" + outcome +
                          "'");
  }

  const Matrix eye = Matrix::identity(2);
  Matrix unnormalized(4);
  for (const InstrumentBranch& branch : alice.branches()) {
    if (branch.label != outcome) continue;
    for (const Matrix& k : branch.kraus) {
      const Matrix lifted = tensor_product(k, eye);
      unnormalized += lifted * state.rho.matrix() * lifted.adjoint();
    }
  }
  const double p = unnormalized.trace().real();
  if (p < kProbabilityFloor) {
    throw ValidationError("conditional_bob_state: outcome '" + outcome +
                          "' has vanishing probability; conditional state "
                          "undefined");
  }
  const DensityOperator joint_post(Complex(1.0 / p, 0.0) * unnormalized);
  return ConditionalState{p, partial_trace(joint_post, Party::kAlice)};
}

}  // namespace eprsim
