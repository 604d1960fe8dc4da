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

#ifndef EPRSIM_POLARIZATION_HPP_
#define EPRSIM_POLARIZATION_HPP_

#include "eprsim/linalg.hpp"

namespace eprsim {

// Linear-polarization direction in radians, canonicalized into [0, pi).
// Angles differing by pi denote the same polarization ray, so the canonical
// representative is unique. Radians internally; degrees only at the CLI
// boundary.
class PolarizationAngle {
 public:
  PolarizationAngle() = default;
  explicit PolarizationAngle(double radians);
  static PolarizationAngle from_degrees(double degrees);

  double radians() const { return theta_; }
  double degrees() const;

  // The orthogonal ray, theta + pi/2.
  PolarizationAngle orthogonal() const;
  PolarizationAngle offset(double delta_radians) const;

 private:
  double theta_ = 0.0;
};

// Jones vector of a linear polarization: cos(theta)|H> + sin(theta)|V>.
// {H, V} basis order is H first throughout.
using JonesVector = StateVector;

JonesVector linear_state(PolarizationAngle theta);

// Real rotation [[cos d, -sin d], [sin d, cos d]]; maps linear_state(t) to
// linear_state(t + d).
Matrix rotation_operator(double delta_radians);

// Half-wave plate with optical axis at `axis`: the reflection
// [[cos 2t, sin 2t], [sin 2t, -cos 2t]]. Maps linear_state(phi) onto the
// linear_state(2*axis - phi) ray; unitary with determinant -1, so branch
// comparisons downstream are made up to a per-operator global phase.
Matrix half_wave_plate(PolarizationAngle axis);

}  // namespace eprsim

#endif  // EPRSIM_POLARIZATION_HPP_
