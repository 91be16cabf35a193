// Copyright 2026 The ncnsynth Authors
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

/**
 * @file
 * Dense complex matrices and state vectors, plus the metrics the rest of the
 * library verifies against.
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <sstream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ncn/errors.hpp"

namespace ncn {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Construction-time unitarity tolerance (gate payloads, factor cores).
inline constexpr double kUnitarityTol = 1e-12;
/// Tolerance for pipeline-level verification.
inline constexpr double kVerifyTol = 1e-9;

/// Tolerances that callers may override.
struct Tolerances {
  double construction = kUnitarityTol;
  double verification = kVerifyTol;
};

namespace detail {
inline std::atomic<std::size_t> &max_dim_storage() {
  static std::atomic<std::size_t> value{std::size_t{1} << 12};
  return value;
}
}  // namespace detail

/// Largest matrix dimension accepted at construction (default 4096).
inline std::size_t max_matrix_dim() { return detail::max_dim_storage().load(); }
inline void set_max_matrix_dim(std::size_t dim) {
  detail::max_dim_storage().store(dim);
}

/**
 * Square dense matrix of complex entries in row-major order.
 *
 * Values are immutable once built; every operation below returns a fresh
 * matrix.
 */
class ComplexMatrix {
 public:
  ComplexMatrix() : dim_(1), entries_{Complex{1.0, 0.0}} {}

  ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
      : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0) throw DimensionError("matrix dimension must be positive");
    if (dim_ > max_matrix_dim()) {
      throw DimensionError("matrix dimension " + std::to_string(dim_) +
                           " exceeds configured maximum " +
                           std::to_string(max_matrix_dim()));
    }
    if (entries_.size() != dim_ * dim_) {
      throw DimensionError("expected " + std::to_string(dim_ * dim_) +
                           " entries, got " + std::to_string(entries_.size()));
    }
    for (const auto &z : entries_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error("non-finite matrix entry");
      }
    }
  }

  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
      : ComplexMatrix(rows.size(), flatten(rows)) {}

  static ComplexMatrix identity(std::size_t dim) {
    std::vector<Complex> e(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
    return {dim, std::move(e)};
  }

  static ComplexMatrix zeros(std::size_t dim) {
    return {dim, std::vector<Complex>(dim * dim)};
  }

  std::size_t dim() const noexcept { return dim_; }
  const Complex &operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  std::span<const Complex> entries() const noexcept { return entries_; }

  friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

 private:
  static std::vector<Complex> flatten(
      std::initializer_list<std::initializer_list<Complex>> rows) {
    std::vector<Complex> out;
    out.reserve(rows.size() * rows.size());
    for (const auto &r : rows) {
      if (r.size() != rows.size()) throw DimensionError("matrix must be square");
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }

  std::size_t dim_;
  std::vector<Complex> entries_;
};

inline void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b,
                             const char *op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" +
                         std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()) + ")");
  }
}

inline ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
  require_same_dim(a, b, "matmul");
  const std::size_t n = a.dim();
  std::vector<Complex> out(n * n);
  const auto be = b.entries();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const Complex ail = a(i, l);
      // Gate embeddings are mostly zeros.
      if (ail == Complex{}) continue;
      const Complex *brow = be.data() + l * n;
      Complex *orow = out.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) orow[j] += ail * brow[j];
    }
  }
  return {n, std::move(out)};
}

inline ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
  return matmul(a, b);
}

inline ComplexMatrix scale(Complex s, const ComplexMatrix &a) {
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  for (auto &z : out) z *= s;
  return {a.dim(), std::move(out)};
}

inline ComplexMatrix add(const ComplexMatrix &a, const ComplexMatrix &b) {
  require_same_dim(a, b, "add");
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.entries()[i];
  return {a.dim(), std::move(out)};
}

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<Complex> out(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          out[(i * nb + k) * n + (j * nb + l)] = a(i, j) * b(k, l);
  return {n, std::move(out)};
}

inline ComplexMatrix adjoint(const ComplexMatrix &a) {
  const std::size_t n = a.dim();
  std::vector<Complex> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j * n + i] = std::conj(a(i, j));
  return {n, std::move(out)};
}

inline Complex trace(const ComplexMatrix &a) {
  Complex t{};
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

/// max_{ij} |a_ij - b_ij|
inline double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

/// ||M^dagger M - I||_max
inline double unitarity_deviation(const ComplexMatrix &m) {
  const std::size_t n = m.dim();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += std::conj(m(k, i)) * m(k, j);
      if (i == j) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

inline bool is_unitary(const ComplexMatrix &m, double tol = kUnitarityTol) {
  return unitarity_deviation(m) <= tol;
}

/// Throws NonUnitaryError carrying the measured deviation.
inline void require_unitary(const ComplexMatrix &m, double tol,
                            const char *what) {
  const double dev = unitarity_deviation(m);
  if (!(dev <= tol)) {
    std::ostringstream os;
    os << what << ": matrix is not unitary (max deviation " << dev << ")";
    throw NonUnitaryError(os.str(), dev);
  }
}

/**
 * Distance between two unitaries modulo a global phase.
 *
 * Equals sqrt(2*dim - 2*|tr(a^dagger b)|). It is evaluated as the Frobenius
 * norm of a - e^{i phi*} b with phi* = arg tr(b^dagger a), which is the same
 * quantity for unitary inputs but does not lose half the significant digits
 * to cancellation near zero.
 */
inline double phase_invariant_distance(const ComplexMatrix &a,
                                       const ComplexMatrix &b) {
  require_same_dim(a, b, "phase_invariant_distance");
  Complex overlap{};
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    overlap += std::conj(b.entries()[i]) * a.entries()[i];
  const Complex phase =
      std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  double sq = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    sq += std::norm(a.entries()[i] - phase * b.entries()[i]);
  return std::sqrt(sq);
}

/// The global phase e^{i phi*} that best aligns b onto a.
inline Complex best_phase(const ComplexMatrix &a, const ComplexMatrix &b) {
  require_same_dim(a, b, "best_phase");
  Complex overlap{};
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    overlap += std::conj(b.entries()[i]) * a.entries()[i];
  return std::abs(overlap) > 0.0 ? overlap / std::abs(overlap)
                                 : Complex{1.0, 0.0};
}

/// True iff every row and column sum equals 1 within tol (the XU group).
inline bool is_xu(const ComplexMatrix &m, double tol = kVerifyTol) {
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Complex row{}, col{};
    for (std::size_t j = 0; j < n; ++j) {
      row += m(i, j);
      col += m(j, i);
    }
    if (std::abs(row - 1.0) > tol || std::abs(col - 1.0) > tol) return false;
  }
  return true;
}

/// Pure state over dim basis states, qubit 0 the most significant bit.
class StateVector {
 public:
  StateVector() : amps_{Complex{1.0, 0.0}} {}

  explicit StateVector(std::vector<Complex> amplitudes)
      : amps_(std::move(amplitudes)) {
    if (amps_.empty()) throw DimensionError("state vector must be non-empty");
  }

  static StateVector basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw DimensionError("basis index out of range");
    std::vector<Complex> a(dim);
    a[index] = 1.0;
    return StateVector(std::move(a));
  }

  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  const Complex &operator[](std::size_t i) const { return amps_[i]; }

  double norm() const {
    double s = 0.0;
    for (const auto &z : amps_) s += std::norm(z);
    return std::sqrt(s);
  }

  bool is_normalized(double tol = 1e-10) const {
    return std::abs(norm() - 1.0) <= tol;
  }

  StateVector normalized() const {
    const double n = norm();
    if (n == 0.0) throw Error("cannot normalize the zero vector");
    std::vector<Complex> a(amps_);
    for (auto &z : a) z /= n;
    return StateVector(std::move(a));
  }

 private:
  std::vector<Complex> amps_;
};

/// <a|b>
inline Complex inner(const StateVector &a, const StateVector &b) {
  if (a.dim() != b.dim()) throw DimensionError("inner: dimension mismatch");
  Complex s{};
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline StateVector matvec(const ComplexMatrix &m, const StateVector &s) {
  if (m.dim() != s.dim()) throw DimensionError("matvec: dimension mismatch");
  std::vector<Complex> out(s.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out[i] += m(i, j) * s[j];
  return StateVector(std::move(out));
}

/// 1 - |<a|b>|, the figure of merit used throughout verification.
inline double fidelity_deficit(const StateVector &a, const StateVector &b) {
  return 1.0 - std::abs(inner(a, b));
}

/// Smallest k with 2^k == dim, or throws if dim is not a power of two.
inline std::size_t qubit_count_for_dim(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw DimensionError("dimension " + std::to_string(dim) +
                         " is not a power of two");
  }
  std::size_t k = 0;
  while ((std::size_t{1} << k) < dim) ++k;
  return k;
}

}  // namespace ncn
