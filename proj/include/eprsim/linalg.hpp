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

#ifndef EPRSIM_LINALG_HPP_
#define EPRSIM_LINALG_HPP_

#include <complex>
#include <cstddef>
#include <vector>

#include "eprsim/errors.hpp"

namespace eprsim {

using Complex = std::complex<double>;

// Default tolerance for exact-algebra assertions. Everything in this library
// is O(10) flops on unit-scale numbers, so 1e-12 leaves orders of magnitude
// of headroom above machine epsilon.
inline constexpr double kTol = 1e-12;

// Square complex matrix, row-major. The physics in this library lives in
// dimensions 2 (one polarization qubit) and 4 (the Alice-Bob pair); larger
// dimensions appear only transiently in tensor-product identities.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim);  // zero matrix
  Matrix(std::size_t dim, std::vector<Complex> entries);

  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return a_[r * dim_ + c];
  }

  Matrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  // Largest absolute entry of A - A†.
  double hermiticity_defect() const;
  bool is_finite() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Complex s, Matrix a);
  friend Matrix operator*(Matrix a, Complex s) { return s * a; }

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> a_;
};

// Complex amplitude vector. Stores amplitudes as given; normalization is an
// explicit step so that bilinearity of the tensor product stays testable.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<Complex> amplitudes);

  std::size_t dim() const { return amps_.size(); }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  const std::vector<Complex>& amplitudes() const { return amps_; }

  double norm() const;
  bool is_normalized(double tol = kTol) const;
  StateVector normalized() const;

 private:
  std::vector<Complex> amps_;
};

// ⟨a|b⟩ with the conjugate on the left argument.
Complex inner_product(const StateVector& a, const StateVector& b);

// |⟨a|b⟩| for unit vectors: 1 means the same ray (states equal up to a
// global phase).
double overlap_magnitude(const StateVector& a, const StateVector& b);

// |a⟩⟨b|.
Matrix outer_product(const StateVector& a, const StateVector& b);

// Kronecker products in (Alice ⊗ Bob) slot order; the two-qubit basis reads
// HH, HV, VH, VV. Mixing vector and operator arguments is a compile error.
StateVector tensor_product(const StateVector& a, const StateVector& b);
Matrix tensor_product(const Matrix& a, const Matrix& b);

struct DensityValidity {
  double hermiticity_defect = 0.0;
  double min_eigenvalue = 0.0;
  double trace_defect = 0.0;
  bool pass = false;
};

// Reports how far `op` is from being a density operator: Hermiticity defect,
// minimum eigenvalue (of the Hermitian part), and |tr - 1|. Never throws.
DensityValidity validate_density(const Matrix& op, double tol = kTol);

// Hermitian, positive semidefinite, trace-one matrix of dimension 2 or 4.
class DensityOperator {
 public:
  // Validates `op` against the density invariants; throws ValidationError on
  // failure.
  explicit DensityOperator(Matrix op, double tol = kTol);

  // Normalized projector |psi⟩⟨psi| / ⟨psi|psi⟩.
  static DensityOperator from_pure(const StateVector& psi);
  static DensityOperator maximally_mixed(std::size_t dim);

  std::size_t dim() const { return op_.dim(); }
  const Matrix& matrix() const { return op_; }

 private:
  Matrix op_;
};

enum class Party { kAlice, kBob };

// Traces `party` out of a two-qubit state and returns the remaining qubit's
// reduced state. Slot order is Alice-major.
DensityOperator partial_trace(const DensityOperator& rho, Party traced_out);

// (1/2) Σ |eigenvalues of rho - sigma|; 0 on identical states, 1 on
// orthogonal pure states.
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);

// Eigenvalues of the Hermitian part (A + A†)/2, ascending. Closed form for
// dim 2, cyclic complex Jacobi sweeps otherwise.
std::vector<double> hermitian_eigenvalues(const Matrix& a);

// Largest singular value.
double operator_norm(const Matrix& a);

}  // namespace eprsim

#endif  // EPRSIM_LINALG_HPP_
