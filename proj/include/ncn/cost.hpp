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
 * Gate accounting for the NCN rewrite and the ceilings it is measured
 * against: 17 c + 64 s controlled-sqrt(NOT), 11 c + 34 s negators, and
 * 145 c + 64 k once s <= 2 c + k.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "ncn/circuit.hpp"
#include "ncn/errors.hpp"
#include "ncn/random.hpp"
#include "ncn/synth.hpp"
#include "ncn/transform.hpp"

namespace ncn {

struct CostReport {
  std::size_t k = 0;  ///< source width
  std::size_t c_cnot = 0;
  std::size_t c_s = 0;
  std::size_t n_csqn = 0;
  std::size_t n_neg = 0;
  std::size_t bound_csqn = 0;
  std::size_t bound_neg = 0;
  std::size_t bound_csqn_total = 0;

  /// The source satisfies c_s <= 2 c_cnot + k, so the ceilings apply.
  bool source_condition() const { return c_s <= 2 * c_cnot + k; }
  bool csqn_within() const { return n_csqn <= bound_csqn; }
  bool neg_within() const { return n_neg <= bound_neg; }
  bool total_within() const { return n_csqn <= bound_csqn_total; }
  bool within_bounds() const {
    return !source_condition() || (csqn_within() && neg_within() && total_within());
  }

  friend bool operator==(const CostReport &, const CostReport &) = default;
};

namespace detail {

inline CostReport make_report(std::size_t k, std::size_t c_cnot, std::size_t c_s,
                              std::size_t n_csqn, std::size_t n_neg) {
  CostReport r;
  r.k = k;
  r.c_cnot = c_cnot;
  r.c_s = c_s;
  r.n_csqn = n_csqn;
  r.n_neg = n_neg;
  r.bound_csqn = 17 * c_cnot + 64 * c_s;
  r.bound_neg = 11 * c_cnot + 34 * c_s;
  r.bound_csqn_total = 145 * c_cnot + 64 * k;
  return r;
}

inline std::pair<std::size_t, std::size_t> source_counts(const Circuit &source) {
  if (source.dialect() != Dialect::kGeneral) {
    throw DialectError("count: source must be a GENERAL circuit");
  }
  std::size_t cnot = 0, single = 0;
  for (const Gate &g : source.gates()) {
    if (g.kind() == GateKind::kCnot) ++cnot;
    else if (arity_of(g.kind()) == 1) ++single;
  }
  return {cnot, single};
}

}  // namespace detail

/// Tallies a source circuit and its NCN rewrite.
inline CostReport count(const Circuit &source, const Circuit &output) {
  if (output.dialect() != Dialect::kNcn) throw DialectError("count: output must be NCN");
  const auto [cnot, single] = detail::source_counts(source);
  if (output.width() != source.width() + 1) {
    throw DimensionError("count: output width must be source width + 1");
  }
  return detail::make_report(source.width(), cnot, single,
                             count_kind(output.gates(), GateKind::kCSqrtNot),
                             count_kind(output.gates(), GateKind::kNegator));
}

/// Same report as count(source, transform(source)) without storing the output.
inline CostReport count_streaming(const Circuit &source, const TransformOptions &opt = {}) {
  const auto [cnot, single] = detail::source_counts(source);
  std::size_t csqn = 0, neg = 0;
  transform_for_each(
      source,
      [&](const Gate &g) { (g.kind() == GateKind::kCSqrtNot ? csqn : neg) += 1; }, opt);
  return detail::make_report(source.width(), cnot, single, csqn, neg);
}

/// Per-gate constants of this implementation, from one-gate probes.
struct MeasuredConstants {
  std::size_t csqn_per_cnot = 0;
  std::size_t neg_per_cnot = 0;
  std::size_t csqn_per_1q = 0;  ///< worst case: all three Euler angles non-zero
  std::size_t neg_per_1q = 0;
};

inline MeasuredConstants measure_constants() {
  MeasuredConstants m;
  Circuit cx(2);
  cx.append(Gate::cnot(0, 1));
  const CostReport rc = count_streaming(cx);
  m.csqn_per_cnot = rc.n_csqn;
  m.neg_per_cnot = rc.n_neg;
  Circuit one(1);
  one.append(Gate::generic_1q(0, matmul(mat::rz(0.7), matmul(mat::ry(1.1), mat::rz(0.4)))));
  const CostReport r1 = count_streaming(one);
  m.csqn_per_1q = r1.n_csqn;
  m.neg_per_1q = r1.n_neg;
  return m;
}

inline std::string format_report(const CostReport &r) {
  std::ostringstream os;
  auto row = [&](const char *name, std::size_t value, const std::string &note = "") {
    os << std::left << std::setw(18) << name << std::right << std::setw(12) << value;
    if (!note.empty()) os << "  " << note;
    os << '\n';
  };
  auto verdict = [](bool ok) { return std::string(ok ? "ok" : "EXCEEDED"); };
  row("k", r.k);
  row("c_cnot", r.c_cnot);
  row("c_s", r.c_s, r.source_condition() ? "c_s <= 2 c_cnot + k" : "c_s > 2 c_cnot + k");
  row("n_csqn", r.n_csqn);
  row("n_neg", r.n_neg);
  row("bound_csqn", r.bound_csqn, verdict(r.csqn_within()));
  row("bound_neg", r.bound_neg, verdict(r.neg_within()));
  row("bound_csqn_total", r.bound_csqn_total, verdict(r.total_within()));
  return os.str();
}

inline std::string format_report_kv(const CostReport &r) {
  std::ostringstream os;
  os << "k=" << r.k << "\nc_cnot=" << r.c_cnot << "\nc_s=" << r.c_s
     << "\nn_csqn=" << r.n_csqn << "\nn_neg=" << r.n_neg
     << "\nbound_csqn=" << r.bound_csqn << "\nbound_neg=" << r.bound_neg
     << "\nbound_csqn_total=" << r.bound_csqn_total
     << "\nsource_condition=" << (r.source_condition() ? 1 : 0)
     << "\nwithin_bounds=" << (r.within_bounds() ? 1 : 0) << '\n';
  return os.str();
}

struct ScalingRow {
  std::size_t k = 0;
  std::size_t samples = 0;
  double mean_c_cnot = 0.0;
  double mean_c_s = 0.0;
  double mean_n_csqn = 0.0;
  double mean_n_neg = 0.0;
  double mean_bound_csqn = 0.0;
};

/// Averages over `samples` Haar-random unitaries per k (k in 1..5).
inline std::vector<ScalingRow> scaling_table(std::span<const std::size_t> ks,
                                             std::size_t samples = 10,
                                             std::uint64_t seed = 2026) {
  std::vector<ScalingRow> rows;
  for (std::size_t k : ks) {
    if (k < 1 || k > 5) throw DimensionError("scaling_table: k must lie in 1..5");
    std::mt19937_64 rng(seed + k);
    ScalingRow row{k, samples};
    for (std::size_t s = 0; s < samples; ++s) {
      const CostReport r = count_streaming(synthesize(haar_unitary(std::size_t{1} << k, rng)));
      row.mean_c_cnot += static_cast<double>(r.c_cnot);
      row.mean_c_s += static_cast<double>(r.c_s);
      row.mean_n_csqn += static_cast<double>(r.n_csqn);
      row.mean_n_neg += static_cast<double>(r.n_neg);
      row.mean_bound_csqn += static_cast<double>(r.bound_csqn);
    }
    const double n = static_cast<double>(samples);
    row.mean_c_cnot /= n;
    row.mean_c_s /= n;
    row.mean_n_csqn /= n;
    row.mean_n_neg /= n;
    row.mean_bound_csqn /= n;
    rows.push_back(row);
  }
  return rows;
}

inline std::string format_scaling_table(std::span<const ScalingRow> rows) {
  std::ostringstream os;
  os << std::setw(3) << "k" << std::setw(14) << "c_cnot" << std::setw(14) << "c_s"
     << std::setw(16) << "n_csqn" << std::setw(16) << "bound_csqn" << std::setw(10)
     << "ratio" << '\n';
  os << std::fixed << std::setprecision(1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto &r = rows[i];
    os << std::setw(3) << r.k << std::setw(14) << r.mean_c_cnot << std::setw(14) << r.mean_c_s
       << std::setw(16) << r.mean_n_csqn << std::setw(16) << r.mean_bound_csqn;
    if (i > 0 && rows[i - 1].k + 1 == r.k && rows[i - 1].mean_n_csqn > 0.0) {
      os << std::setw(10) << std::setprecision(2) << r.mean_n_csqn / rows[i - 1].mean_n_csqn
         << std::setprecision(1);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace ncn
