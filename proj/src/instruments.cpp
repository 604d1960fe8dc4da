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

#include "eprsim/instruments.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace eprsim {
namespace {

constexpr double kPi = 3.14159265358979323846;

Matrix channel_action(const std::vector<Matrix>& kraus_ops,
                      const DensityOperator& rho) {
  Matrix out(rho.dim());
  for (const Matrix& k : kraus_ops) out += k * rho.matrix() * k.adjoint();
  return out;
}

}  // namespace

namespace labels {

std::string leak(int k) {
  if (k < 1) throw ValidationError("leak label index must be >= 1");
  return "LEAK_" + std::to_string(k);
}

}  // namespace labels

QuantumInstrument QuantumInstrument::build(
    const std::vector<std::pair<std::string, Matrix>>& branches, double tol) {
  std::vector<InstrumentBranch> multi;
  multi.reserve(branches.size());
  for (const auto& [label, kraus] : branches) {
    multi.push_back({label, {kraus}});
  }
  return build_multi(std::move(multi), tol);
}

QuantumInstrument QuantumInstrument::build_multi(
    std::vector<InstrumentBranch> branches, double tol) {
  QuantumInstrument instr(std::move(branches));
  instr.validate(tol);
  return instr;
}

QuantumInstrument QuantumInstrument::unchecked(
    std::vector<InstrumentBranch> branches) {
  return QuantumInstrument(std::move(branches));
}

std::size_t QuantumInstrument::dim() const {
  for (const InstrumentBranch& b : branches_) {
    if (!b.kraus.empty()) return b.kraus.front().dim();
  }
  return 0;
}

bool QuantumInstrument::has_label(const std::string& label) const {
  return std::any_of(branches_.begin(), branches_.end(),
                     [&](const InstrumentBranch& b) { return b.label == label; });
}

double QuantumInstrument::completeness_defect() const {
  const std::size_t d = dim();
  if (d == 0) return 1.0;
  Matrix sum(d);
  for (const InstrumentBranch& b : branches_)
    for (const Matrix& k : b.kraus) sum += k.adjoint() * k;
  return operator_norm(sum - Matrix::identity(d));
}

void QuantumInstrument::validate(double tol) const {
  if (branches_.empty()) {
    throw ValidationError("QuantumInstrument: no branches");
  }
  std::set<std::string> seen;
  for (const InstrumentBranch& b : branches_) {
    if (!seen.insert(b.label).second) {
      throw ValidationError("QuantumInstrument: duplicate label '" + b.label +
                            "'");
    }
    if (b.kraus.empty()) {
      throw ValidationError("QuantumInstrument: branch '" + b.label +
                            "' has no Kraus operators");
    }
    for (const Matrix& k : b.kraus) {
      if (k.dim() != dim()) {
        throw ValidationError("QuantumInstrument: mixed Kraus dimensions");
      }
    }
  }
  const double defect = completeness_defect();
  if (defect > tol) {
    throw ValidationError(
        "QuantumInstrument: completeness violation, ||sum K†K - I|| = " +
        std::to_string(defect));
  }
}

std::vector<OutcomeRecord> apply_instrument(const QuantumInstrument& instr,
                                            const DensityOperator& rho) {
  if (instr.dim() != rho.dim()) {
    throw ValidationError("apply_instrument: dimension mismatch");
  }
  std::vector<OutcomeRecord> records;
  records.reserve(instr.branches().size());
  for (const InstrumentBranch& b : instr.branches()) {
    Matrix unnormalized = channel_action(b.kraus, rho);
    const double p = unnormalized.trace().real();
    OutcomeRecord record;
    record.label = b.label;
    record.probability = p;
    if (p >= kProbabilityFloor) {
      record.post_state =
          DensityOperator(Complex(1.0 / p, 0.0) * unnormalized);
    }
    records.push_back(std::move(record));
  }
  return records;
}

QuantumInstrument pbs_instrument(PolarizationAngle omega) {
  const JonesVector aligned = linear_state(omega);
  const JonesVector orthogonal = linear_state(omega.orthogonal());
  return QuantumInstrument::build(
      {{labels::kPbsPlus, outer_product(aligned, aligned)},
       {labels::kPbsMinus, outer_product(orthogonal, orthogonal)}});
}

QuantumInstrument identity_instrument() {
  return QuantumInstrument::build({{labels::kPresent, Matrix::identity(2)}});
}

QuantumInstrument ideal_michalski(PolarizationAngle omega) {
  const JonesVector exit_state = linear_state(omega);  // Psi+
  const JonesVector aligned = linear_state(omega);
  const JonesVector orthogonal = linear_state(omega.orthogonal());
  return QuantumInstrument::build(
      {{labels::kFirstPlus, outer_product(exit_state, aligned)},
       {labels::kLastPlus, outer_product(exit_state, orthogonal)}});
}

QuantumInstrument zeno_cascade(const CascadeParams& params) {
  if (params.n < 2) {
    throw ValidationError("zeno_cascade: n must be >= 2");
  }
  const int m = params.n - 1;
  const double delta = (kPi / 2.0) / static_cast<double>(m);
  const double cos_delta = std::cos(delta);
  const double sin_delta = std::sin(delta);

  const JonesVector exit_state = linear_state(params.omega);  // Psi+
  const JonesVector aligned = linear_state(params.omega);
  const JonesVector orthogonal = linear_state(params.omega.orthogonal());
  const Matrix leak_template = outer_product(exit_state, orthogonal);

  std::vector<InstrumentBranch> branches;
  branches.reserve(static_cast<std::size_t>(m) + 2);
  branches.push_back(
      {labels::kFirstPlus, {outer_product(exit_state, aligned)}});
  for (int k = 1; k <= m; ++k) {
    const double amp = std::pow(cos_delta, k - 1) * sin_delta;
    branches.push_back(
        {labels::leak(k), {Complex(amp, 0.0) * leak_template}});
  }
  branches.push_back(
      {labels::kLastPlus,
       {Complex(std::pow(cos_delta, m), 0.0) * leak_template}});
  return QuantumInstrument::build_multi(std::move(branches));
}

QuantumInstrument simplified_analyzer(PolarizationAngle omega) {
  const JonesVector aligned = linear_state(omega);
  const JonesVector orthogonal = linear_state(omega.orthogonal());
  const Matrix plate = half_wave_plate(omega.offset(kPi / 4.0));
  return QuantumInstrument::build(
      {{labels::kFirstPlus, outer_product(aligned, aligned)},
       {labels::kLastPlus, plate * outer_product(orthogonal, orthogonal)}});
}

QuantumInstrument coarse_grain(const QuantumInstrument& instr) {
  instr.validate();
  std::vector<Matrix> merged;
  for (const InstrumentBranch& b : instr.branches())
    for (const Matrix& k : b.kraus) merged.push_back(k);
  return QuantumInstrument::build_multi(
      {{labels::kPresent, std::move(merged)}});
}

namespace {

// min over phases of ||A - e^{i phi} B||_op. The Frobenius-optimal phase
// -arg tr(A†B) is exact whenever A equals e^{i phi}B; a coarse grid plus
// golden-section refinement covers the rest.
double min_phase_opnorm_difference(const Matrix& a, const Matrix& b) {
  Complex overlap = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      overlap += std::conj(a(r, c)) * b(r, c);

  const auto value = [&](double phi) {
    return operator_norm(a - Complex(std::polar(1.0, phi)) * b);
  };

  if (std::abs(overlap) < 1e-300) return value(0.0);

  double best_phi = -std::arg(overlap);
  double best = value(best_phi);
  constexpr int kGrid = 256;
  for (int i = 0; i < kGrid; ++i) {
    const double phi = 2.0 * kPi * i / kGrid;
    const double v = value(phi);
    if (v < best) {
      best = v;
      best_phi = phi;
    }
  }

  // Golden-section refinement around the best bracket.
  constexpr double kGolden = 0.6180339887498949;
  double lo = best_phi - 2.0 * kPi / kGrid;
  double hi = best_phi + 2.0 * kPi / kGrid;
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = value(x1), f2 = value(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = value(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = value(x2);
    }
  }
  return std::min({best, f1, f2});
}

const InstrumentBranch* find_branch(const QuantumInstrument& instr,
                                    const std::string& label) {
  for (const InstrumentBranch& b : instr.branches()) {
    if (b.label == label) return &b;
  }
  return nullptr;
}

// Branch-level distance with position-wise Kraus comparison; surplus
// operators on either side count against the zero operator.
double branch_distance(const std::vector<Matrix>& a,
                       const std::vector<Matrix>& b, std::size_t dim) {
  const Matrix zero(dim);
  double worst = 0.0;
  const std::size_t count = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < count; ++i) {
    const Matrix& ka = i < a.size() ? a[i] : zero;
    const Matrix& kb = i < b.size() ? b[i] : zero;
    worst = std::max(worst, min_phase_opnorm_difference(ka, kb));
  }
  return worst;
}

}  // namespace

double instrument_distance(const QuantumInstrument& a,
                           const QuantumInstrument& b,
                           const LabelPairing& pairing) {
  const std::size_t dim = a.dim();
  if (dim == 0 || dim != b.dim()) {
    throw ValidationError("instrument_distance: dimension mismatch");
  }
  std::set<std::string> paired_a;
  std::set<std::string> paired_b;
  double worst = 0.0;
  for (const auto& [label_a, label_b] : pairing) {
    const InstrumentBranch* branch_a = find_branch(a, label_a);
    const InstrumentBranch* branch_b = find_branch(b, label_b);
    if (branch_a == nullptr || branch_b == nullptr) {
      throw ValidationError("instrument_distance: pairing references unknown "
                            "label '" +
                            (branch_a == nullptr ? label_a : label_b) + "'");
    }
    if (!paired_a.insert(label_a).second) {
      throw ValidationError(
          "instrument_distance: label '" + label_a +
          "' appears more than once on the left of the pairing");
    }
    paired_b.insert(label_b);
    worst = std::max(worst, branch_distance(branch_a->kraus, branch_b->kraus,
                                            dim));
  }
  const std::vector<Matrix> empty;
  for (const InstrumentBranch& branch : a.branches()) {
    if (paired_a.count(branch.label) == 0) {
      worst = std::max(worst, branch_distance(branch.kraus, empty, dim));
    }
  }
  for (const InstrumentBranch& branch : b.branches()) {
    if (paired_b.count(branch.label) == 0) {
      worst = std::max(worst, branch_distance(empty, branch.kraus, dim));
    }
  }
  return worst;
}

}  // namespace eprsim
