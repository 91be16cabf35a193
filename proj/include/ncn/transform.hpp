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
 * Lifting a CNOT + single-qubit circuit onto a |-> ancilla and rewriting it
 * into negators and controlled-sqrt(NOT) gates.
 *
 * Every source gate U becomes the block H(anc) . controlled-U . H(anc).
 * Each block is then replaced by a fixed template, and helper gates (CNOT,
 * controlled-sqrt(NOT)^dagger, controlled-negator) are expanded until only
 * NEG and CSQN remain. Templates are trusted only after a numeric self-check
 * against the block they replace.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncn/circuit.hpp"
#include "ncn/errors.hpp"
#include "ncn/linalg.hpp"
#include "ncn/matrices.hpp"
#include "ncn/zyz.hpp"

namespace ncn {

/// A block pattern and the gate template that replaces it.
struct RewriteRule {
  std::string name;
  /// Number of wires; the template is written over wires 0..wires-1 and
  /// remapped onto the caller's wires.
  std::size_t wires = 2;
  bool parametric = false;
  /// Dense matrix of the pattern on wires 0..wires-1.
  std::function<ComplexMatrix(double)> pattern;
  /// Replacement over the given wires.
  std::function<std::vector<Gate>(double, std::span<const Qubit>)> replacement;
};

struct RuleCheck {
  std::string name;
  std::size_t samples = 0;
  double worst_distance = 0.0;
  bool passed = false;
};

inline constexpr double kRuleTol = 1e-10;
inline constexpr std::size_t kRuleSamples = 50;
inline constexpr std::uint64_t kRuleSeed = 0x6e636e2dULL;

namespace detail {

inline ComplexMatrix h_on_first(std::size_t wires) {
  return gate_matrix(Gate::hadamard(0), wires);
}

inline ComplexMatrix h_sandwich(const ComplexMatrix &m, std::size_t wires) {
  const ComplexMatrix h = h_on_first(wires);
  return matmul(h, matmul(m, h));
}

}  // namespace detail

/// The built-in templates. Wire 0 is the ancilla in every lifted rule.
inline std::vector<RewriteRule> builtin_rules() {
  using G = Gate;
  std::vector<RewriteRule> rules;

  // H . C-Rz(t) . H over (anc, tgt).
  rules.push_back(
      {"lifted-rz", 2, true,
       [](double t) { return detail::h_sandwich(mat::controlled(mat::rz(t)), 2); },
       [](double t, std::span<const Qubit> w) {
         const Qubit a = w[0], q = w[1];
         return std::vector<Gate>{G::c_negator(q, a, t / 2.0), G::negator(q, kPi),
                                  G::c_negator(q, a, -t / 2.0), G::negator(q, kPi)};
       }});

  // H . C-Ry(t) . H over (anc, tgt).
  rules.push_back(
      {"lifted-ry", 2, true,
       [](double t) { return detail::h_sandwich(mat::controlled(mat::ry(t)), 2); },
       [](double t, std::span<const Qubit> w) {
         const Qubit a = w[0], q = w[1];
         return std::vector<Gate>{G::cnot(a, q),           G::cnot(q, a),
                                  G::c_sqrt_not_dag(a, q), G::negator(a, t / 2.0),
                                  G::cnot(a, q),           G::negator(a, -t / 2.0),
                                  G::c_sqrt_not_dag(a, q), G::cnot(q, a),
                                  G::cnot(a, q)};
       }});

  // H . diag(1, e^{it}) . H on the ancilla is exactly N(t).
  rules.push_back(
      {"lifted-phase", 1, true,
       [](double t) {
         return detail::h_sandwich(ComplexMatrix{{1.0, 0.0}, {0.0, unit_phase(t)}}, 1);
       },
       [](double t, std::span<const Qubit> w) {
         return std::vector<Gate>{G::negator(w[0], t)};
       }});

  // H(anc) . TOF(anc, c, t) . H(anc) over (anc, c, t).
  rules.push_back(
      {"lifted-toffoli", 3, false,
       [](double) {
         return detail::h_sandwich(gate_matrix(G::toffoli(0, 1, 2), 3), 3);
       },
       [](double, std::span<const Qubit> w) {
         const Qubit a = w[0], c = w[1], t = w[2];
         std::vector<Gate> s{G::c_sqrt_not(c, t)};
         auto swing = [&] {
           s.push_back(G::negator(a, -kPi / 2.0));
           s.push_back(G::negator(c, -kPi / 2.0));
           s.push_back(G::cnot(a, c));
           s.push_back(G::negator(a, kPi / 2.0));
           s.push_back(G::cnot(a, c));
         };
         swing();
         s.push_back(G::c_sqrt_not_dag(c, t));
         swing();
         s.push_back(G::negator(a, -kPi / 4.0));
         s.push_back(G::negator(t, -kPi / 4.0));
         s.push_back(G::cnot(a, t));
         s.push_back(G::negator(a, -kPi / 4.0));
         s.push_back(G::cnot(a, t));
         s.push_back(G::negator(a, kPi / 2.0));
         s.push_back(G::negator(t, kPi / 2.0));
         return s;
       }});

  rules.push_back({"cnot", 2, false,
                   [](double) { return gate_matrix(G::cnot(0, 1), 2); },
                   [](double, std::span<const Qubit> w) {
                     return std::vector<Gate>{G::c_sqrt_not(w[0], w[1]),
                                              G::c_sqrt_not(w[0], w[1])};
                   }});

  rules.push_back({"csqn-dag", 2, false,
                   [](double) { return gate_matrix(G::c_sqrt_not_dag(0, 1), 2); },
                   [](double, std::span<const Qubit> w) {
                     return std::vector<Gate>(3, G::c_sqrt_not(w[0], w[1]));
                   }});

  rules.push_back(
      {"c-negator", 2, true,
       [](double t) { return gate_matrix(G::c_negator(0, 1, t), 2); },
       [](double t, std::span<const Qubit> w) {
         const Qubit c = w[0], q = w[1];
         const double q4 = kPi / 4.0;
         return std::vector<Gate>{
             G::negator(c, q4),        G::negator(q, t / 2.0), G::cnot(c, q),
             G::negator(c, -q4),       G::c_sqrt_not_dag(c, q), G::negator(c, t / 2.0),
             G::cnot(c, q),            G::negator(c, -t / 2.0), G::c_sqrt_not_dag(c, q),
             G::negator(c, q4),        G::cnot(c, q),           G::negator(c, -q4)};
       }});

  return rules;
}

/// Compares a rule's template against its pattern at `samples` random angles.
inline RuleCheck self_check(const RewriteRule &rule, std::size_t samples = kRuleSamples,
                            std::uint64_t seed = kRuleSeed, double tol = kRuleTol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::vector<Qubit> wires(rule.wires);
  for (std::size_t i = 0; i < wires.size(); ++i) wires[i] = i;
  RuleCheck out{rule.name, samples, 0.0, true};
  for (std::size_t s = 0; s < samples; ++s) {
    const double t = rule.parametric ? angle(rng) : 0.0;
    const auto gates = rule.replacement(t, wires);
    const double d =
        phase_invariant_distance(sequence_matrix(gates, rule.wires), rule.pattern(t));
    out.worst_distance = std::max(out.worst_distance, d);
  }
  out.passed = out.worst_distance <= tol;
  return out;
}

/// Checked, read-only rule set.
class RuleTable {
 public:
  explicit RuleTable(std::vector<RewriteRule> rules) : rules_(std::move(rules)) {
    for (const auto &r : rules_) {
      checks_.push_back(self_check(r));
      if (!checks_.back().passed) {
        throw RuleCheckError("rewrite rule '" + r.name +
                             "' failed its self-check: phase distance " +
                             std::to_string(checks_.back().worst_distance));
      }
    }
  }

  const RewriteRule &get(std::string_view name) const {
    for (const auto &r : rules_)
      if (r.name == name) return r;
    throw Error("unknown rewrite rule '" + std::string(name) + "'");
  }

  std::vector<Gate> apply(std::string_view name, double angle,
                          std::span<const Qubit> wires) const {
    const RewriteRule &r = get(name);
    if (wires.size() != r.wires) throw ArityError("rule '" + r.name + "': wrong wire count");
    return r.replacement(angle, wires);
  }

  std::span<const RewriteRule> rules() const noexcept { return rules_; }
  std::span<const RuleCheck> checks() const noexcept { return checks_; }

 private:
  std::vector<RewriteRule> rules_;
  std::vector<RuleCheck> checks_;
};

/// Built and self-checked on first use; throws RuleCheckError on failure.
inline const RuleTable &rule_table() {
  static const RuleTable table(builtin_rules());
  return table;
}

/// H(anc) . controlled-g . H(anc), with the ancilla as the extra control.
inline std::vector<Gate> g_lift(const Gate &g, Qubit ancilla) {
  std::vector<Gate> out{Gate::hadamard(ancilla)};
  switch (g.kind()) {
    case GateKind::kGeneric1q:
      out.push_back(Gate::controlled_1q(ancilla, g.qubit(0), g.payload_matrix()));
      break;
    case GateKind::kCnot:
      out.push_back(Gate::toffoli(ancilla, g.qubit(0), g.qubit(1)));
      break;
    default:
      throw DialectError("g_lift: unsupported gate " + std::string(mnemonic(g.kind())));
  }
  out.push_back(Gate::hadamard(ancilla));
  return out;
}

namespace detail {

inline void expand_into(const Gate &g, std::vector<Gate> &out) {
  const RuleTable &rules = rule_table();
  const std::array<Qubit, 2> w2{g.qubits().size() > 0 ? g.qubit(0) : 0,
                                g.qubits().size() > 1 ? g.qubit(1) : 0};
  switch (g.kind()) {
    case GateKind::kNegator:
      if (g.angle() != 0.0) out.push_back(g);
      return;
    case GateKind::kCSqrtNot:
      out.push_back(g);
      return;
    case GateKind::kCnot:
    case GateKind::kCSqrtNotDag:
    case GateKind::kCNegator: {
      const std::string_view name = g.kind() == GateKind::kCnot        ? "cnot"
                                    : g.kind() == GateKind::kCSqrtNotDag ? "csqn-dag"
                                                                        : "c-negator";
      for (const Gate &h : rules.apply(name, g.angle(), w2)) expand_into(h, out);
      return;
    }
    default:
      throw DialectError("expand_helpers: cannot expand " + std::string(mnemonic(g.kind())));
  }
}

}  // namespace detail

/// Rewrites CNOT, CSQND and CNEG helpers down to NEG + CSQN. Drops NEG(0).
inline std::vector<Gate> expand_helpers(std::span<const Gate> seq) {
  std::vector<Gate> out;
  out.reserve(seq.size() * 4);
  for (const Gate &g : seq) detail::expand_into(g, out);
  return out;
}

/**
 * NCN gates for H(anc) . controlled-u . H(anc).
 *
 * u is split as e^{i phi0} Rz(gamma) Ry(beta) Rz(alpha); each rotation goes
 * through its lifted rule and zero angles are skipped. The lifted phase is a
 * negator on the ancilla; with keep_phase = false it is omitted, which is
 * exact whenever the ancilla holds |-> (it then only contributes a global
 * phase).
 */
inline std::vector<Gate> rewrite_lifted_1q(const ComplexMatrix &u, Qubit ancilla,
                                           Qubit target, bool keep_phase = true) {
  const ZyzAngles z = zyz_decompose(u);
  const RuleTable &rules = rule_table();
  const std::array<Qubit, 2> w{ancilla, target};
  std::vector<Gate> helpers;
  auto add = [&](std::string_view rule, double angle) {
    if (angle == 0.0) return;
    auto part = rules.apply(rule, angle, w);
    helpers.insert(helpers.end(), part.begin(), part.end());
  };
  add("lifted-rz", z.alpha);
  add("lifted-ry", z.beta);
  add("lifted-rz", z.gamma);
  if (keep_phase && z.phi0 != 0.0) helpers.push_back(Gate::negator(ancilla, z.phi0));
  return expand_helpers(helpers);
}

/// NCN gates for H(anc) . TOF(anc, control, target) . H(anc).
inline std::vector<Gate> rewrite_lifted_toffoli(Qubit ancilla, Qubit control,
                                                Qubit target) {
  if (ancilla == control || ancilla == target || control == target) {
    throw ArityError("rewrite_lifted_toffoli: wires must be distinct");
  }
  const std::array<Qubit, 3> w{ancilla, control, target};
  return expand_helpers(rule_table().apply("lifted-toffoli", 0.0, w));
}

struct TransformOptions {
  /// Emit the ancilla negators that carry each gate's global phase. They only
  /// change the overall phase when the ancilla is |->, so the default drops
  /// them.
  bool keep_global_phase = false;
};

namespace detail {

inline bool is_identity_payload(const Gate &g, double tol = kUnitarityTol) {
  const auto &p = g.payload();
  return std::abs(p[0] - 1.0) <= tol && std::abs(p[1]) <= tol &&
         std::abs(p[2]) <= tol && std::abs(p[3] - 1.0) <= tol;
}

inline void require_transform_input(const Circuit &c) {
  for (const Gate &g : c.gates()) {
    if (g.kind() != GateKind::kCnot && g.kind() != GateKind::kGeneric1q) {
      throw DialectError("transform: input may only contain CNOT and U1Q, found " +
                         std::string(mnemonic(g.kind())));
    }
  }
}

/// Rewrites one lifted block (the controlled gate between the two H).
inline std::vector<Gate> rewrite_block(const Gate &controlled, const TransformOptions &opt) {
  if (controlled.kind() == GateKind::kToffoli) {
    return rewrite_lifted_toffoli(controlled.qubit(0), controlled.qubit(1),
                                  controlled.qubit(2));
  }
  return rewrite_lifted_1q(controlled.payload_matrix(), controlled.qubit(0),
                           controlled.qubit(1), opt.keep_global_phase);
}

}  // namespace detail

/**
 * Lifts every gate of a CNOT + U1Q circuit onto a new ancilla (wire 0; source
 * wire q moves to q + 1) as H . controlled-gate . H.
 */
inline Circuit lift_circuit(const Circuit &c) {
  detail::require_transform_input(c);
  Circuit out(c.width() + 1, Dialect::kGeneral, Qubit{0});
  out.reserve(3 * c.size());
  for (const Gate &g : c.gates()) out.append(g_lift(g.shifted(1), 0));
  return out;
}

/**
 * Removes lifted blocks whose controlled gate is the identity; the H pair
 * left behind cancels. The H gates bracketing real blocks stay, because each
 * rewrite rule consumes exactly one H on either side of its controlled gate.
 */
inline Circuit normalize_lifted(const Circuit &lifted) {
  Circuit out(lifted.width(), lifted.dialect(), lifted.ancilla());
  const auto gates = lifted.gates();
  if (gates.size() % 3 != 0) throw Error("normalize_lifted: expected H . C . H blocks");
  out.reserve(gates.size());
  for (std::size_t i = 0; i < gates.size(); i += 3) {
    const Gate &h0 = gates[i], &cg = gates[i + 1], &h1 = gates[i + 2];
    if (h0.kind() != GateKind::kHadamard || !(h0 == h1) ||
        (cg.kind() != GateKind::kControlled1q && cg.kind() != GateKind::kToffoli)) {
      throw Error("normalize_lifted: malformed block at gate " + std::to_string(i));
    }
    if (cg.kind() == GateKind::kControlled1q && detail::is_identity_payload(cg)) continue;
    out.append(h0);
    out.append(cg);
    out.append(h1);
  }
  return out;
}

/**
 * Streams the NCN gates of transform(c) to `sink` one block at a time, so
 * very large outputs can be counted without being stored.
 */
template <class Sink>
void transform_for_each(const Circuit &c, Sink &&sink, const TransformOptions &opt = {}) {
  detail::require_transform_input(c);
  for (const Gate &g : c.gates()) {
    if (g.kind() == GateKind::kGeneric1q && detail::is_identity_payload(g)) continue;
    const auto lifted = g_lift(g.shifted(1), 0);
    for (const Gate &out : detail::rewrite_block(lifted[1], opt)) sink(out);
  }
}

/// One intermediate state of the rewrite, for --trace output.
struct TraceStep {
  std::string label;
  Circuit circuit;
};

/**
 * Source circuit on k wires to an NCN circuit on k + 1 wires with the |->
 * ancilla on wire 0. If `trace` is non-null every stage is appended to it.
 */
inline Circuit transform(const Circuit &c, const TransformOptions &opt = {},
                         std::vector<TraceStep> *trace = nullptr) {
  detail::require_transform_input(c);
  Circuit out(c.width() + 1, Dialect::kNcn, Qubit{0});
  if (trace == nullptr) {
    transform_for_each(c, [&](const Gate &g) { out.append(g); }, opt);
    return out;
  }

  const Circuit lifted = lift_circuit(c);
  trace->push_back({"lifted", lifted});
  const Circuit norm = normalize_lifted(lifted);
  trace->push_back({"normalized", norm});
  const auto gates = norm.gates();
  for (std::size_t i = 0; i < gates.size();) {
    if (i + 2 >= gates.size() || gates[i].kind() != GateKind::kHadamard) {
      throw Error("transform: malformed lifted circuit at gate " + std::to_string(i));
    }
    for (const Gate &g : detail::rewrite_block(gates[i + 1], opt)) out.append(g);
    i += 3;
    Circuit snap(out.width(), Dialect::kGeneral, Qubit{0});
    snap.append(out.gates());
    snap.append(gates.subspan(i));
    trace->push_back({"block " + std::to_string(i / 3), std::move(snap)});
  }
  return out;
}

}  // namespace ncn
