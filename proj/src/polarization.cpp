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

#include "eprsim/polarization.hpp"

#include <cmath>

namespace eprsim {
namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

PolarizationAngle::PolarizationAngle(double radians) {
  if (!std::isfinite(radians)) {
    throw ValidationError("PolarizationAngle: angle must be finite");
  }
  double t = std::fmod(radians, kPi);
  if (t < 0.0) t += kPi;
  if (t >= kPi) t = 0.0;  // fmod rounding at the boundary
  theta_ = t;
}

PolarizationAngle PolarizationAngle::from_degrees(double degrees) {
  return PolarizationAngle(degrees * kPi / 180.0);
}

double PolarizationAngle::degrees() const { return theta_ * 180.0 / kPi; }

PolarizationAngle PolarizationAngle::orthogonal() const {
  return PolarizationAngle(theta_ + kPi / 2.0);
}

PolarizationAngle PolarizationAngle::offset(double delta_radians) const {
  return PolarizationAngle(theta_ + delta_radians);
}

JonesVector linear_state(PolarizationAngle theta) {
  return StateVector({Complex(std::cos(theta.radians()), 0.0),
                      Complex(std::sin(theta.radians()), 0.0)});
}

Matrix rotation_operator(double delta_radians) {
  if (!std::isfinite(delta_radians)) {
    throw ValidationError("rotation_operator: angle must be finite");
  }
  const double c = std::cos(delta_radians);
  const double s = std::sin(delta_radians);
  return Matrix(2, {Complex(c, 0.0), Complex(-s, 0.0),  //
                    Complex(s, 0.0), Complex(c, 0.0)});
}

Matrix half_wave_plate(PolarizationAngle axis) {
  const double c = std::cos(2.0 * axis.radians());
  const double s = std::sin(2.0 * axis.radians());
  return Matrix(2, {Complex(c, 0.0), Complex(s, 0.0),  //
                    Complex(s, 0.0), Complex(-c, 0.0)});
}

}  // namespace eprsim
