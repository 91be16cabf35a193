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
 * Gate and circuit representation shared by synthesis, rewriting, simulation
 * and I/O.
 *
 * Basis ordering: qubit 0 is the most significant bit of a basis-state index.
 * Controlled kinds list the control(s) first and the target last.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncn/errors.hpp"
#include "ncn/linalg.hpp"
#include "ncn/matrices.hpp"

namespace ncn {

using Qubit = std::size_t;

enum class GateKind : std::uint8_t {
  kNegator,
  kCSqrtNot,
  kCSqrtNotDag,
  kCnot,
  kToffoli,
  kHadamard,
  kRy,
  kRz,
  kGeneric1q,
  kControlled1q,
  kCNegator,
};

inline constexpr std::array<GateKind, 11> kAllGateKinds = {
    GateKind::kNegator,   GateKind::kCSqrtNot,     GateKind::kCSqrtNotDag,
    GateKind::kCnot,      GateKind::kToffoli,      GateKind::kHadamard,
    GateKind::kRy,        GateKind::kRz,           GateKind::kGeneric1q,
    GateKind::kControlled1q, GateKind::kCNegator};

constexpr std::size_t arity_of(GateKind k) {
  switch (k) {
    case GateKind::kNegator:
    case GateKind::kHadamard:
    case GateKind::kRy:
    case GateKind::kRz:
    case GateKind::kGeneric1q:
      return 1;
    case GateKind::kToffoli:
      return 3;
    default:
      return 2;
  }
}

constexpr bool has_angle(GateKind k) {
  return k == GateKind::kNegator || k == GateKind::kRy || k == GateKind::kRz ||
         k == GateKind::kCNegator;
}

constexpr bool has_payload(GateKind k) {
  return k == GateKind::kGeneric1q || k == GateKind::kControlled1q;
}

/// Mnemonic used by the ncnv1 text format.
constexpr std::string_view mnemonic(GateKind k) {
  switch (k) {
    case GateKind::kNegator: return "NEG";
    case GateKind::kCSqrtNot: return "CSQN";
    case GateKind::kCSqrtNotDag: return "CSQND";
    case GateKind::kCnot: return "CNOT";
    case GateKind::kToffoli: return "TOF";
    case GateKind::kHadamard: return "H";
    case GateKind::kRy: return "RY";
    case GateKind::kRz: return "RZ";
    case GateKind::kGeneric1q: return "U1Q";
    case GateKind::kControlled1q: return "CU1Q";
    case GateKind::kCNegator: return "CNEG";
  }
  return "?";
}

inline std::optional<GateKind> kind_from_mnemonic(std::string_view s) {
  for (GateKind k : kAllGateKinds)
    if (mnemonic(k) == s) return k;
  return std::nullopt;
}

/// A circuit element: its kind and wires, plus an angle or 2x2 payload.
class Gate {
 public:
  using Payload = std::array<Complex, 4>;

  static Gate negator(Qubit q, double theta) {
    return Gate(GateKind::kNegator, {q}, theta);
  }
  static Gate c_sqrt_not(Qubit c, Qubit t) {
    return Gate(GateKind::kCSqrtNot, {c, t});
  }
  static Gate c_sqrt_not_dag(Qubit c, Qubit t) {
    return Gate(GateKind::kCSqrtNotDag, {c, t});
  }
  static Gate cnot(Qubit c, Qubit t) { return Gate(GateKind::kCnot, {c, t}); }
  static Gate toffoli(Qubit c1, Qubit c2, Qubit t) {
    return Gate(GateKind::kToffoli, {c1, c2, t});
  }
  static Gate hadamard(Qubit q) { return Gate(GateKind::kHadamard, {q}); }
  static Gate ry(Qubit q, double theta) {
    return Gate(GateKind::kRy, {q}, theta);
  }
  static Gate rz(Qubit q, double theta) {
    return Gate(GateKind::kRz, {q}, theta);
  }
  static Gate c_negator(Qubit c, Qubit t, double theta) {
    return Gate(GateKind::kCNegator, {c, t}, theta);
  }
  static Gate generic_1q(Qubit q, const ComplexMatrix &u,
                         double tol = kUnitarityTol) {
    return Gate(GateKind::kGeneric1q, {q}, 0.0, checked_payload(u, tol));
  }
  static Gate controlled_1q(Qubit c, Qubit t, const ComplexMatrix &u,
                            double tol = kUnitarityTol) {
    return Gate(GateKind::kControlled1q, {c, t}, 0.0, checked_payload(u, tol));
  }

  /// Generic constructor used by the parser; validates everything.
  static Gate make(GateKind kind, std::span<const Qubit> qubits,
                   double angle = 0.0, const Payload &payload = {}) {
    if (qubits.size() != arity_of(kind)) {
      throw ArityError(std::string(mnemonic(kind)) + " expects " +
                       std::to_string(arity_of(kind)) + " qubit(s), got " +
                       std::to_string(qubits.size()));
    }
    std::array<Qubit, 3> q{};
    std::copy(qubits.begin(), qubits.end(), q.begin());
    if (has_payload(kind)) {
      return Gate(kind, q, arity_of(kind), 0.0,
                  checked_payload(ComplexMatrix(2, {payload.begin(), payload.end()}),
                                  kUnitarityTol));
    }
    return Gate(kind, q, arity_of(kind), angle, {});
  }

  GateKind kind() const noexcept { return kind_; }
  std::span<const Qubit> qubits() const noexcept {
    return {qubits_.data(), arity_};
  }
  Qubit qubit(std::size_t i) const { return qubits_.at(i); }
  /// The target wire (last listed qubit).
  Qubit target() const noexcept { return qubits_[arity_ - 1]; }
  /// Normalized to [0, 2pi); zero for kinds without an angle.
  double angle() const noexcept { return angle_; }
  const Payload &payload() const noexcept { return payload_; }
  ComplexMatrix payload_matrix() const {
    return {2, {payload_.begin(), payload_.end()}};
  }

  /// The 2x2 matrix applied to the target (when all controls are |1>).
  ComplexMatrix target_matrix() const {
    switch (kind_) {
      case GateKind::kNegator:
      case GateKind::kCNegator: return mat::negator(angle_);
      case GateKind::kCSqrtNot: return mat::sqrt_not();
      case GateKind::kCSqrtNotDag: return adjoint(mat::sqrt_not());
      case GateKind::kCnot:
      case GateKind::kToffoli: return mat::pauli_x();
      case GateKind::kHadamard: return mat::hadamard();
      case GateKind::kRy: return mat::ry(angle_);
      case GateKind::kRz: return mat::rz(angle_);
      case GateKind::kGeneric1q:
      case GateKind::kControlled1q: return payload_matrix();
    }
    return ComplexMatrix::identity(2);
  }

  /// Same gate on relabelled wires.
  Gate remapped(std::span<const Qubit> mapping) const {
    Gate g = *this;
    for (std::size_t i = 0; i < arity_; ++i) g.qubits_[i] = mapping[qubits_[i]];
    return g;
  }

  Gate shifted(Qubit offset) const {
    Gate g = *this;
    for (std::size_t i = 0; i < arity_; ++i) g.qubits_[i] += offset;
    return g;
  }

  friend bool operator==(const Gate &, const Gate &) = default;

 private:
  Gate(GateKind kind, std::initializer_list<Qubit> qubits, double angle = 0.0,
       const Payload &payload = {})
      : Gate(kind, to_array(qubits), qubits.size(), angle, payload) {}

  Gate(GateKind kind, const std::array<Qubit, 3> &qubits, std::size_t arity,
       double angle, const Payload &payload)
      : kind_(kind),
        arity_(static_cast<std::uint8_t>(arity)),
        qubits_(qubits),
        angle_(has_angle(kind) ? normalize_angle(angle) : 0.0),
        payload_(payload) {
    if (!std::isfinite(angle)) throw Error("gate angle must be finite");
    for (std::size_t i = 0; i < arity_; ++i)
      for (std::size_t j = i + 1; j < arity_; ++j)
        if (qubits_[i] == qubits_[j]) {
          throw ArityError(std::string(mnemonic(kind)) +
                           ": qubit " + std::to_string(qubits_[i]) +
                           " listed twice");
        }
  }

  static std::array<Qubit, 3> to_array(std::initializer_list<Qubit> qs) {
    std::array<Qubit, 3> a{};
    std::copy(qs.begin(), qs.end(), a.begin());
    return a;
  }

  static Payload checked_payload(const ComplexMatrix &u, double tol) {
    if (u.dim() != 2) throw DimensionError("1q payload must be 2x2");
    require_unitary(u, tol, "gate payload");
    return {u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
  }

  GateKind kind_;
  std::uint8_t arity_;
  std::array<Qubit, 3> qubits_;
  double angle_;
  Payload payload_;
};

/// Gate-for-gate equality with angle and payload slack.
inline bool approx_equal(const Gate &a, const Gate &b, double tol = 1e-15) {
  if (a.kind() != b.kind()) return false;
  if (!std::ranges::equal(a.qubits(), b.qubits())) return false;
  if (circular_distance(a.angle(), b.angle()) > tol) return false;
  for (std::size_t i = 0; i < 4; ++i)
    if (std::abs(a.payload()[i] - b.payload()[i]) > tol) return false;
  return true;
}

enum class Dialect : std::uint8_t { kGeneral, kNcn };

constexpr std::string_view dialect_name(Dialect d) {
  return d == Dialect::kNcn ? "NCN" : "GENERAL";
}

constexpr bool is_ncn_kind(GateKind k) {
  return k == GateKind::kNegator || k == GateKind::kCSqrtNot;
}

/// Ordered gate list over a fixed register.
class Circuit {
 public:
  explicit Circuit(std::size_t width, Dialect dialect = Dialect::kGeneral,
                   std::optional<Qubit> ancilla = std::nullopt)
      : width_(width), dialect_(dialect), ancilla_(ancilla) {
    if (ancilla_ && *ancilla_ >= width_) {
      throw ArityError("ancilla index " + std::to_string(*ancilla_) +
                       " outside register of width " + std::to_string(width_));
    }
  }

  Circuit(std::size_t width, Dialect dialect, std::optional<Qubit> ancilla,
          std::span<const Gate> gates)
      : Circuit(width, dialect, ancilla) {
    gates_.reserve(gates.size());
    for (const auto &g : gates) append(g);
  }

  std::size_t width() const noexcept { return width_; }
  Dialect dialect() const noexcept { return dialect_; }
  std::optional<Qubit> ancilla() const noexcept { return ancilla_; }
  std::span<const Gate> gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  /// Appends after checking wire range and dialect membership.
  void append(const Gate &g) {
    for (Qubit q : g.qubits()) {
      if (q >= width_) {
        throw ArityError(std::string(mnemonic(g.kind())) + ": qubit " +
                         std::to_string(q) + " outside register of width " +
                         std::to_string(width_));
      }
    }
    if (dialect_ == Dialect::kNcn && !is_ncn_kind(g.kind())) {
      throw DialectError(std::string(mnemonic(g.kind())) +
                         " is not allowed in an NCN circuit");
    }
    gates_.push_back(g);
  }

  void append(std::span<const Gate> gs) {
    for (const auto &g : gs) append(g);
  }

  void reserve(std::size_t n) { gates_.reserve(n); }

  friend bool operator==(const Circuit &, const Circuit &) = default;

 private:
  std::size_t width_;
  Dialect dialect_;
  std::optional<Qubit> ancilla_;
  std::vector<Gate> gates_;
};

/// Concatenation: c1's gates run first.
inline Circuit concat(const Circuit &c1, const Circuit &c2) {
  if (c1.width() != c2.width()) throw DimensionError("concat: width mismatch");
  const Dialect d = (c1.dialect() == Dialect::kNcn && c2.dialect() == Dialect::kNcn)
                        ? Dialect::kNcn
                        : Dialect::kGeneral;
  Circuit out(c1.width(), d, c1.ancilla() ? c1.ancilla() : c2.ancilla());
  out.reserve(c1.size() + c2.size());
  out.append(c1.gates());
  out.append(c2.gates());
  return out;
}

/// Throws DialectError unless every gate kind is NEGATOR or C_SQRT_NOT.
inline void require_ncn(std::span<const Gate> gates) {
  for (const auto &g : gates) {
    if (!is_ncn_kind(g.kind())) {
      throw DialectError(std::string(mnemonic(g.kind())) +
                         " is not an NCN gate");
    }
  }
}

namespace detail {

/// Kronecker product over the register with the given per-wire factors
/// (identity elsewhere).
inline ComplexMatrix kron_chain(std::size_t width,
                                const std::map<Qubit, ComplexMatrix> &factors) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (Qubit q = 0; q < width; ++q) {
    auto it = factors.find(q);
    out = kron(out, it == factors.end() ? ComplexMatrix::identity(2) : it->second);
  }
  return out;
}

inline ComplexMatrix proj0() { return {{1.0, 0.0}, {0.0, 0.0}}; }
inline ComplexMatrix proj1() { return {{0.0, 0.0}, {0.0, 1.0}}; }

}  // namespace detail

/// The 2^width x 2^width unitary of g on its wires.
inline ComplexMatrix gate_matrix(const Gate &g, std::size_t width) {
  for (Qubit q : g.qubits()) {
    if (q >= width) {
      throw ArityError("gate_matrix: qubit " + std::to_string(q) +
                       " out of range for width " + std::to_string(width));
    }
  }
  using detail::kron_chain;
  const ComplexMatrix u = g.target_matrix();
  switch (arity_of(g.kind())) {
    case 1:
      return kron_chain(width, {{g.qubit(0), u}});
    case 2:
      return add(kron_chain(width, {{g.qubit(0), detail::proj0()}}),
                 kron_chain(width, {{g.qubit(0), detail::proj1()}, {g.qubit(1), u}}));
    default: {
      const std::map<Qubit, ComplexMatrix> both{{g.qubit(0), detail::proj1()},
                                                {g.qubit(1), detail::proj1()}};
      auto with_u = both;
      with_u.emplace(g.qubit(2), u);
      return add(add(ComplexMatrix::identity(std::size_t{1} << width),
                     scale(-1.0, kron_chain(width, both))),
                 kron_chain(width, with_u));
    }
  }
}

/// Product gate_m ... gate_1 of a plain gate list.
inline ComplexMatrix sequence_matrix(std::span<const Gate> gates,
                                     std::size_t width) {
  ComplexMatrix m = ComplexMatrix::identity(std::size_t{1} << width);
  for (const auto &g : gates) m = matmul(gate_matrix(g, width), m);
  return m;
}

/// Dense unitary of the whole circuit; the last gate is the leftmost factor.
inline ComplexMatrix circuit_matrix(const Circuit &c) {
  return sequence_matrix(c.gates(), c.width());
}

/// Number of gates of the given kind.
inline std::size_t count_kind(std::span<const Gate> gates, GateKind kind) {
  return static_cast<std::size_t>(std::ranges::count_if(
      gates, [kind](const Gate &g) { return g.kind() == kind; }));
}

}  // namespace ncn
