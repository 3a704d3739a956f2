// Copyright 2026 The phldpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "phldpc/code.hpp"
#include "phldpc/errors.hpp"
#include "phldpc/photonic_ctmc.hpp"
#include "phldpc/slh.hpp"

namespace phldpc::slh {

/// Subsystem caps for fragment construction; 2^8 = 256-dimensional state space.
inline constexpr size_t default_max_subsystems = 8;

/// Parity-measurement fragment of one check.
///
/// A coherent probe of amplitude `alpha` enters in1 of the first variable
/// latch; each variable latch's routing block passes both paths on to the
/// next, and the final pair drives the reset (even) / set (odd) inputs of the
/// check latch. Variable latches carry labels 0..k_vars-1, the check latch
/// carries label k_vars. Two field channels.
inline SlhTriple build_parity_fragment(size_t k_vars, Complex alpha,
                                       size_t max_subsystems = default_max_subsystems) {
    phldpc::detail::require(k_vars >= 1, "build_parity_fragment: k_vars must be >= 1");
    if (k_vars + 1 > max_subsystems) {
        throw BudgetError("build_parity_fragment: " + std::to_string(k_vars + 1) + " subsystems exceed budget " +
                          std::to_string(max_subsystems));
    }
    SlhTriple g = make_weyl({alpha, Complex(0.0)});
    for (size_t i = 0; i < k_vars; ++i) {
        g = series(make_latch_in_out(static_cast<int>(i)), g);
    }
    return series(make_latch_set_reset(static_cast<int>(k_vars)), g);
}

/// One check latch's stage of the feedback path: the beam enters in1, and out1
/// returns to in2 through a beamsplitter of transmission `gamma` whose other
/// arm is an external dump. Two channels remain: 0 = beam in -> out2, 1 = dump.
/// A satisfied latch (|0>) sends the beam once around the attenuating loop;
/// an unsatisfied one (|1>) swaps it straight to out2.
inline SlhTriple attenuating_check_stage(int label, double gamma) {
    const SlhTriple latch_and_dump = concat(make_latch_in_out(label), identity_system(1));
    const SlhTriple attenuated = series(embed(make_beamsplitter(gamma), {0, 2}, 3), latch_and_dump);
    return feedback(attenuated, 0, 1);
}

/// Feedback fragment of one variable.
///
/// Drive `beta` passes l_checks attenuating check stages (labels
/// 0..l_checks-1), then the variable latch (label l_checks): its own routing
/// block steers the beam to the set input while it reads |0> and to the reset
/// input while it reads |1>, so the full attenuated power always toggles it.
/// Channels: 0 = main path, 1 = auxiliary routing input, 2.. = stage dumps.
inline SlhTriple build_feedback_fragment(size_t l_checks, Complex beta, double gamma,
                                         size_t max_subsystems = default_max_subsystems) {
    phldpc::detail::require(l_checks >= 1, "build_feedback_fragment: l_checks must be >= 1");
    phldpc::detail::require(gamma > 0.0 && gamma <= 1.0, "build_feedback_fragment: gamma must lie in (0, 1]");
    if (l_checks + 1 > max_subsystems) {
        throw BudgetError("build_feedback_fragment: " + std::to_string(l_checks + 1) +
                          " subsystems exceed budget " + std::to_string(max_subsystems));
    }
    const size_t ports = l_checks + 2;
    std::vector<Complex> drive(ports, Complex(0.0));
    drive[0] = beta;
    SlhTriple g = make_weyl(drive);
    for (size_t i = 0; i < l_checks; ++i) {
        g = series(embed(attenuating_check_stage(static_cast<int>(i), gamma), {0, 2 + i}, ports), g);
    }
    const int var = static_cast<int>(l_checks);
    g = series(embed(make_latch_in_out(var), {0, 1}, ports), g);
    return series(embed(make_latch_set_reset(var), {1, 0}, ports), g);
}

struct OracleCase {
    std::string fragment;  // "parity" or "feedback"
    size_t size = 0;       // k_vars or l_checks
    std::vector<int> bits; // configuration in label order
    double max_deviation = 0.0;
};

struct OracleReport {
    double max_deviation = 0.0;
    size_t cases = 0;
    std::vector<OracleCase> worst;  // the worst case per fragment size

    bool passed(double tol = 1e-10) const { return max_deviation <= tol; }
};

namespace detail {

/// Compares SLH toggle rates on one basis configuration with compute_rates
/// on the Tanner-graph fragment. `var_label(v)` / `check_label(c)` map graph
/// indices to subsystem labels.
template <class VarLabel, class CheckLabel>
double compare_configuration(const SlhTriple &g, const TannerGraph &graph, const SimParams &params,
                             const std::vector<int> &bits, VarLabel var_label, CheckLabel check_label) {
    std::vector<int> labels(g.space().begin(), g.space().end());
    const size_t idx = basis_index(g.space(), labels, bits);
    CircuitState state;
    state.var_latch.resize(graph.n());
    state.check_latch.resize(graph.m());
    for (size_t v = 0; v < graph.n(); ++v) {
        state.var_latch[v] = static_cast<Bit>(label_bit(g.space(), var_label(v), idx));
    }
    for (size_t c = 0; c < graph.m(); ++c) {
        state.check_latch[c] = static_cast<Bit>(label_bit(g.space(), check_label(c), idx));
    }
    const RateTable table = compute_rates(graph, state, params);
    double dev = 0.0;
    for (size_t v = 0; v < graph.n(); ++v) {
        dev = std::max(dev, std::abs(toggle_rate(g, idx, var_label(v)) - table.var_rate[v]));
    }
    for (size_t c = 0; c < graph.m(); ++c) {
        dev = std::max(dev, std::abs(toggle_rate(g, idx, check_label(c)) - table.check_rate[c]));
    }
    return dev;
}

}  // namespace detail

/// Exhaustive basis-state comparison between the SLH fragments and the
/// jump-process rates (eta = 0): parity fragments for k = 1..max_k_vars on a
/// single k-variable check, feedback fragments for l = 1..max_l_checks on one
/// variable in l single-variable checks.
inline OracleReport verify_fragments_against_ctmc(size_t max_k_vars, size_t max_l_checks, double gamma,
                                                  double probe_power = 2.0, double feedback_power = 3.0) {
    phldpc::detail::require(gamma > 0.0 && gamma < 1.0, "verify_fragments_against_ctmc: gamma must lie in (0, 1)");
    OracleReport report;
    auto sweep = [&](const std::string &name, size_t size, const SlhTriple &g, const TannerGraph &graph,
                     const SimParams &params, auto var_label, auto check_label) {
        OracleCase worst{name, size, {}, -1.0};
        const size_t dim = g.dim();
        for (size_t idx = 0; idx < dim; ++idx) {
            std::vector<int> bits;
            for (int label : g.space()) {
                bits.push_back(label_bit(g.space(), label, idx));
            }
            const double dev = detail::compare_configuration(g, graph, params, bits, var_label, check_label);
            ++report.cases;
            if (dev > worst.max_deviation) {
                worst.max_deviation = dev;
                worst.bits = bits;
            }
        }
        report.max_deviation = std::max(report.max_deviation, worst.max_deviation);
        report.worst.push_back(std::move(worst));
    };

    for (size_t k = 1; k <= max_k_vars; ++k) {
        const SlhTriple g = build_parity_fragment(k, std::sqrt(probe_power));
        std::vector<uint32_t> vars(k);
        for (size_t v = 0; v < k; ++v) {
            vars[v] = static_cast<uint32_t>(v);
        }
        const TannerGraph graph = TannerGraph::from_checks(k, 1, k, {vars});
        SimParams params;
        params.probe_power = probe_power;
        params.feedback_power = 0.0;
        params.gamma = gamma;
        params.eta = 0.0;
        sweep("parity", k, g, graph, params, [](size_t v) { return static_cast<int>(v); },
              [k](size_t) { return static_cast<int>(k); });
    }
    for (size_t l = 1; l <= max_l_checks; ++l) {
        const SlhTriple g = build_feedback_fragment(l, std::sqrt(feedback_power), gamma);
        const TannerGraph graph = TannerGraph::from_checks(1, l, 1, std::vector<std::vector<uint32_t>>(l, {0u}));
        SimParams params;
        params.probe_power = 0.0;
        params.feedback_power = feedback_power;
        params.gamma = gamma;
        params.eta = 0.0;
        sweep("feedback", l, g, graph, params, [l](size_t) { return static_cast<int>(l); },
              [](size_t c) { return static_cast<int>(c); });
    }
    return report;
}

}  // namespace phldpc::slh
