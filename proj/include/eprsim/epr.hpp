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

#ifndef EPRSIM_EPR_HPP_
#define EPRSIM_EPR_HPP_

#include <map>
#include <string>
#include <utility>

#include "eprsim/instruments.hpp"
#include "eprsim/linalg.hpp"

namespace eprsim {

// Labeled probability vector over instrument outcomes.
using OutcomeDistribution = std::map<std::string, double>;

// Two-qubit state shared by Alice (first slot) and Bob (second slot).
struct BipartiteState {
  DensityOperator rho;
};

// The shared pair (|HH> + |VV>)/sqrt(2).
BipartiteState phi_plus();

// Joint outcome table P(a, b) over Alice and Bob labels. Entries sum to 1
// for tables produced by joint_statistics; hand-built tables are checked for
// negativity and finiteness only, and normalization is re-checked where an
// operation requires it.
class JointDistribution {
 public:
  using Table = std::map<std::pair<std::string, std::string>, double>;

  explicit JointDistribution(Table table);

  const Table& table() const { return table_; }
  double probability(const std::string& alice, const std::string& bob) const;
  double total() const;

  OutcomeDistribution alice_marginal() const;
  OutcomeDistribution bob_marginal() const;

 private:
  Table table_;
};

// P(a, b) = tr[(K_a ⊗ L_b) rho (K_a ⊗ L_b)†], Alice operators on the first
// slot, Bob on the second.
JointDistribution joint_statistics(const BipartiteState& state,
                                   const QuantumInstrument& alice,
                                   const QuantumInstrument& bob);

struct ConditionalState {
  double probability = 0.0;
  DensityOperator state;
};

// Bob's normalized state conditioned on Alice observing `outcome`:
// Tr_A[(K_a ⊗ I) rho (K_a ⊗ I)†] / p(a). Throws when the outcome
// probability sits below the probability floor.
ConditionalState conditional_bob_state(const BipartiteState& state,
                                       const QuantumInstrument& alice,
                                       const std::string& outcome);

}  // namespace eprsim

#endif  // EPRSIM_EPR_HPP_
