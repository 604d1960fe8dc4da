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

#include "eprsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace eprsim {
namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw ValidationError(message);
}

bool all_finite(const std::vector<Complex>& values) {
  for (const Complex& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

}  // namespace

Matrix::Matrix(std::size_t dim) : dim_(dim), a_(dim * dim, Complex(0.0, 0.0)) {
  require(dim >= 1, "Matrix: dimension must be >= 1");
}

Matrix::Matrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), a_(std::move(entries)) {
  require(dim >= 1, "Matrix: dimension must be >= 1");
  require(a_.size() == dim * dim,
          "Matrix: entry count does not match dimension " +
              std::to_string(dim));
  require(all_finite(a_), "Matrix: entries must be finite");
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double Matrix::hermiticity_defect() const {
  double d = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      d = std::max(d, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return d;
}

bool Matrix::is_finite() const { return all_finite(a_); }

Matrix& Matrix::operator+=(const Matrix& other) {
  require(dim_ == other.dim_, "Matrix: dimension mismatch in addition");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require(dim_ == other.dim_, "Matrix: dimension mismatch in subtraction");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.dim_ == b.dim_, "Matrix: dimension mismatch in product");
  Matrix m(a.dim_);
  for (std::size_t r = 0; r < a.dim_; ++r)
    for (std::size_t k = 0; k < a.dim_; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < a.dim_; ++c) m(r, c) += ark * b(k, c);
    }
  return m;
}

Matrix operator*(Complex s, Matrix a) {
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) a(r, c) *= s;
  return a;
}

StateVector::StateVector(std::vector<Complex> amplitudes)
    : amps_(std::move(amplitudes)) {
  require(!amps_.empty(), "StateVector: amplitude list must be nonempty");
  require(all_finite(amps_), "StateVector: amplitudes must be finite");
}

double StateVector::norm() const {
  double s = 0.0;
  for (const Complex& v : amps_) s += std::norm(v);
  return std::sqrt(s);
}

bool StateVector::is_normalized(double tol) const {
  return std::abs(norm() * norm() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
  const double n = norm();
  require(n > 0.0, "StateVector: cannot normalize the zero vector");
  std::vector<Complex> out(amps_);
  for (Complex& v : out) v /= n;
  return StateVector(std::move(out));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  require(a.dim() == b.dim(), "inner_product: dimension mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double overlap_magnitude(const StateVector& a, const StateVector& b) {
  return std::abs(inner_product(a, b));
}

Matrix outer_product(const StateVector& a, const StateVector& b) {
  require(a.dim() == b.dim(), "outer_product: dimension mismatch");
  Matrix m(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < b.dim(); ++c) m(r, c) = a[r] * std::conj(b[c]);
  return m;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  std::vector<Complex> out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return StateVector(std::move(out));
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  Matrix m(da * db);
  for (std::size_t r1 = 0; r1 < da; ++r1)
    for (std::size_t c1 = 0; c1 < da; ++c1)
      for (std::size_t r2 = 0; r2 < db; ++r2)
        for (std::size_t c2 = 0; c2 < db; ++c2)
          m(r1 * db + r2, c1 * db + c2) = a(r1, c1) * b(r2, c2);
  return m;
}

namespace {

std::vector<double> eigenvalues_2x2_hermitian(const Matrix& h) {
  const double a = h(0, 0).real();
  const double c = h(1, 1).real();
  const Complex b = h(0, 1);
  const double mid = 0.5 * (a + c);
  const double rad = std::sqrt(0.25 * (a - c) * (a - c) + std::norm(b));
  return {mid - rad, mid + rad};
}

// One cyclic sweep of two-sided complex Jacobi rotations. Each rotation
// U = diag(e^{iφ}, 1) · [[c, -s], [s, c]] zeroes the (p, q) entry of the
// Hermitian working matrix.
void jacobi_sweep(Matrix& h) {
  const std::size_t n = h.dim();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const Complex hpq = h(p, q);
      const double beta = std::abs(hpq);
      if (beta < 1e-300) continue;
      const double phi = std::arg(hpq);
      const Complex eip = std::polar(1.0, phi);
      const double theta =
          0.5 * std::atan2(2.0 * beta, h(p, p).real() - h(q, q).real());
      const double c = std::cos(theta);
      const double s = std::sin(theta);

      // Rows: (p, q) <- U† applied from the left.
      for (std::size_t j = 0; j < n; ++j) {
        const Complex hp = h(p, j), hq = h(q, j);
        h(p, j) = std::conj(eip) * c * hp + s * hq;
        h(q, j) = -std::conj(eip) * s * hp + c * hq;
      }
      // Columns: (p, q) <- U applied from the right.
      for (std::size_t i = 0; i < n; ++i) {
        const Complex hp = h(i, p), hq = h(i, q);
        h(i, p) = eip * c * hp + s * hq;
        h(i, q) = -eip * s * hp + c * hq;
      }
    }
  }
}

double offdiagonal_norm(const Matrix& h) {
  double s = 0.0;
  for (std::size_t r = 0; r < h.dim(); ++r)
    for (std::size_t c = 0; c < h.dim(); ++c)
      if (r != c) s += std::norm(h(r, c));
  return std::sqrt(s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const Matrix& a) {
  // Work on the Hermitian part; callers with non-Hermitian inputs
  // (validate_density) report the defect separately.
  Matrix h(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      h(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));

  if (a.dim() == 2) {
    return eigenvalues_2x2_hermitian(h);
  }

  const double scale = std::max(1.0, h.frobenius_norm());
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (offdiagonal_norm(h) <= 1e-15 * scale) break;
    jacobi_sweep(h);
  }

  std::vector<double> eigs(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) eigs[i] = h(i, i).real();
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

double operator_norm(const Matrix& a) {
  const Matrix gram = a.adjoint() * a;
  const std::vector<double> eigs = hermitian_eigenvalues(gram);
  return std::sqrt(std::max(0.0, eigs.back()));
}

DensityValidity validate_density(const Matrix& op, double tol) {
  DensityValidity report;
  report.hermiticity_defect = op.hermiticity_defect();
  report.trace_defect = std::abs(op.trace() - Complex(1.0, 0.0));
  report.min_eigenvalue = hermitian_eigenvalues(op).front();
  report.pass = op.is_finite() && report.hermiticity_defect <= tol &&
                report.trace_defect <= tol && report.min_eigenvalue >= -tol;
  return report;
}

DensityOperator::DensityOperator(Matrix op, double tol) : op_(std::move(op)) {
  require(op_.dim() == 2 || op_.dim() == 4,
          "DensityOperator: dimension must be 2 or 4");
  const DensityValidity v = validate_density(op_, tol);
  if (!v.pass) {
    throw ValidationError(
        "DensityOperator: validation failed (hermiticity defect " +
        std::to_string(v.hermiticity_defect) + ", min eigenvalue " +
        std::to_string(v.min_eigenvalue) + ", trace defect " +
        std::to_string(v.trace_defect) + ")");
  }
}

DensityOperator DensityOperator::from_pure(const StateVector& psi) {
  const StateVector unit = psi.normalized();
  return DensityOperator(outer_product(unit, unit));
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  Matrix m = Matrix::identity(dim);
  return DensityOperator(Complex(1.0 / static_cast<double>(dim), 0.0) * m);
}

DensityOperator partial_trace(const DensityOperator& rho, Party traced_out) {
  require(rho.dim() == 4, "partial_trace: state must have dimension 4");
  const Matrix& m = rho.matrix();
  Matrix out(2);
  if (traced_out == Party::kBob) {
    // sigma_A[a1, a2] = sum_b rho[(a1 b), (a2 b)]
    for (std::size_t a1 = 0; a1 < 2; ++a1)
      for (std::size_t a2 = 0; a2 < 2; ++a2)
        for (std::size_t b = 0; b < 2; ++b)
          out(a1, a2) += m(2 * a1 + b, 2 * a2 + b);
  } else {
    // sigma_B[b1, b2] = sum_a rho[(a b1), (a b2)]
    for (std::size_t b1 = 0; b1 < 2; ++b1)
      for (std::size_t b2 = 0; b2 < 2; ++b2)
        for (std::size_t a = 0; a < 2; ++a)
          out(b1, b2) += m(2 * a + b1, 2 * a + b2);
  }
  return DensityOperator(std::move(out));
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  require(rho.dim() == sigma.dim(), "trace_distance: dimension mismatch");
  const std::vector<double> eigs =
      hermitian_eigenvalues(rho.matrix() - sigma.matrix());
  double s = 0.0;
  for (double e : eigs) s += std::abs(e);
  return 0.5 * s;
}

}  // namespace eprsim
