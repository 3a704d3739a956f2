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

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "phldpc/code.hpp"
#include "phldpc/errors.hpp"
#include "phldpc/rng.hpp"
#include "phldpc/trajectory.hpp"

namespace phldpc {

/// How check latches are set at t = 0.
enum class CheckInit : uint8_t {
    /// True syndrome of the initial assignment.
    syndrome,
    /// All satisfied; the probe must first drive them to the true parity.
    zero,
};

/// Circuit drive and noise parameters. Rates equal photon fluxes, so powers
/// are in 1/time.
struct SimParams {
    double probe_power = 1e5;
    double feedback_power = 1.0;
    /// Per-satisfied-check attenuation of the feedback power, in (0, 1).
    double gamma = 0.01;
    /// Spontaneous toggle rate of every latch.
    double eta = 0.0;
    double t_max = 1e12;
    uint64_t event_cap = 50'000'000;
    uint64_t seed = 0;
    CheckInit check_init = CheckInit::syndrome;
    /// Keep the full event list in the record. The errors timeline is always kept.
    bool record_events = true;

    void validate() const {
        detail::require(probe_power >= 0.0 && std::isfinite(probe_power), "SimParams: probe_power must be >= 0");
        detail::require(feedback_power >= 0.0 && std::isfinite(feedback_power),
                        "SimParams: feedback_power must be >= 0");
        detail::require(gamma > 0.0 && gamma < 1.0, "SimParams: gamma must lie in (0, 1)");
        detail::require(eta >= 0.0 && std::isfinite(eta), "SimParams: eta must be >= 0");
        detail::require(t_max > 0.0, "SimParams: t_max must be positive");
    }
};

/// Latch states of the whole circuit. check_latch[c] == 1 means recorded unsatisfied.
struct CircuitState {
    Assignment var_latch;
    std::vector<Bit> check_latch;
    double t = 0.0;

    bool operator==(const CircuitState &) const = default;
};

struct RateTable {
    std::vector<double> check_rate;
    std::vector<Bit> check_target;
    std::vector<double> var_rate;
    double total = 0.0;
};

namespace detail {

inline void require_consistent(const TannerGraph &graph, const CircuitState &state) {
    require(state.var_latch.size() == graph.n(), "CircuitState: var_latch length does not match n");
    require(state.check_latch.size() == graph.m(), "CircuitState: check_latch length does not match m");
}

inline Bit parity_of(const TannerGraph &graph, const Assignment &bits, size_t c) {
    Bit p = 0;
    for (uint32_t v : graph.vars_of(c)) {
        p ^= bits[v];
    }
    return p;
}

inline size_t satisfied_count(const TannerGraph &graph, const std::vector<Bit> &check_latch, size_t v) {
    size_t s = 0;
    for (uint32_t c : graph.checks_of(v)) {
        s += check_latch[c] == 0;
    }
    return s;
}

}  // namespace detail

/// Full evaluation of every transition rate of the circuit.
///
/// Check latch c moves to the true parity p_c at rate probe_power + eta when it
/// disagrees with p_c, and otherwise toggles spontaneously at rate eta. The
/// variable latch v toggles at feedback_power * gamma^s_v + eta, where s_v
/// counts incident checks whose LATCH reads satisfied.
inline RateTable compute_rates(const TannerGraph &graph, const CircuitState &state, const SimParams &params) {
    detail::require_consistent(graph, state);
    RateTable r;
    r.check_rate.resize(graph.m());
    r.check_target.resize(graph.m());
    r.var_rate.resize(graph.n());
    for (size_t c = 0; c < graph.m(); ++c) {
        const Bit parity = detail::parity_of(graph, state.var_latch, c);
        if (state.check_latch[c] != parity) {
            r.check_rate[c] = params.probe_power + params.eta;
            r.check_target[c] = parity;
        } else {
            r.check_rate[c] = params.eta;
            r.check_target[c] = parity ^ 1;
        }
        r.total += r.check_rate[c];
    }
    for (size_t v = 0; v < graph.n(); ++v) {
        const auto s = static_cast<double>(detail::satisfied_count(graph, state.check_latch, v));
        r.var_rate[v] = params.feedback_power * std::pow(params.gamma, s) + params.eta;
        r.total += r.var_rate[v];
    }
    return r;
}

/// Hamming distance between the variable latches and the transmitted word.
inline size_t errors_remaining(const CircuitState &state, std::span<const Bit> reference) {
    return hamming_distance(state.var_latch, reference);
}

/// Applies `e` to `state` (no rate bookkeeping).
inline void apply_event(CircuitState &state, const Event &e) {
    if (e.kind == LatchKind::variable) {
        state.var_latch.at(e.index) = e.new_bit;
    } else {
        state.check_latch.at(e.index) = e.new_bit;
    }
    state.t = e.t;
}

/// One direct-method Gillespie step against a precomputed table, by linear
/// scan. Returns nullopt (absorbing state) when the total rate is zero.
inline std::optional<Event> gillespie_step(const TannerGraph &graph, CircuitState &state, const RateTable &rates,
                                           Rng &rng) {
    detail::require_consistent(graph, state);
    detail::require(rates.var_rate.size() == graph.n() && rates.check_rate.size() == graph.m(),
                    "gillespie_step: rate table does not match graph");
    if (!(rates.total > 0.0)) {
        return std::nullopt;
    }
    std::exponential_distribution<double> unit_exp(1.0);
    const double dt = unit_exp(rng) / rates.total;
    double u = std::uniform_real_distribution<double>(0.0, rates.total)(rng);

    Event e;
    e.t = state.t + dt;
    std::optional<size_t> last_positive;
    bool chosen = false;
    for (size_t v = 0; v < graph.n() && !chosen; ++v) {
        if (rates.var_rate[v] <= 0.0) {
            continue;
        }
        last_positive = v;
        if (u < rates.var_rate[v]) {
            e.kind = LatchKind::variable;
            e.index = static_cast<uint32_t>(v);
            chosen = true;
        }
        u -= rates.var_rate[v];
    }
    for (size_t c = 0; c < graph.m() && !chosen; ++c) {
        if (rates.check_rate[c] <= 0.0) {
            continue;
        }
        last_positive = graph.n() + c;
        if (u < rates.check_rate[c]) {
            e.kind = LatchKind::check;
            e.index = static_cast<uint32_t>(c);
            chosen = true;
        }
        u -= rates.check_rate[c];
    }
    if (!chosen) {
        // Rounding pushed u past the last positive channel.
        const size_t i = *last_positive;
        e.kind = i < graph.n() ? LatchKind::variable : LatchKind::check;
        e.index = static_cast<uint32_t>(i < graph.n() ? i : i - graph.n());
    }
    e.new_bit = e.kind == LatchKind::variable ? state.var_latch[e.index] ^ 1 : rates.check_target[e.index];
    apply_event(state, e);
    return e;
}

/// Initial circuit state used by run_trajectory for `initial`.
inline CircuitState initial_state(const TannerGraph &graph, std::span<const Bit> initial, CheckInit mode) {
    CircuitState s;
    s.var_latch.assign(initial.begin(), initial.end());
    s.check_latch = mode == CheckInit::syndrome ? syndrome(graph, initial) : std::vector<Bit>(graph.m(), 0);
    return s;
}

/// Binary sum tree over nonnegative weights: O(log N) update and
/// proportional sampling. Internal nodes are always recomputed from their
/// children, so the stored sums are a pure function of the leaves.
class SumTree {
  public:
    explicit SumTree(size_t size = 0) { reset(size); }

    void reset(size_t size) {
        size_ = size;
        cap_ = 1;
        while (cap_ < size) {
            cap_ <<= 1;
        }
        node_.assign(2 * cap_, 0.0);
    }

    void set(size_t i, double w) {
        size_t p = cap_ + i;
        node_[p] = w;
        for (p >>= 1; p >= 1; p >>= 1) {
            node_[p] = node_[2 * p] + node_[2 * p + 1];
        }
    }

    /// Bulk load followed by one bottom-up pass.
    void assign(std::span<const double> w) {
        reset(w.size());
        std::copy(w.begin(), w.end(), node_.begin() + static_cast<std::ptrdiff_t>(cap_));
        for (size_t p = cap_ - 1; p >= 1; --p) {
            node_[p] = node_[2 * p] + node_[2 * p + 1];
        }
    }

    double total() const { return node_[1]; }
    double leaf(size_t i) const { return node_[cap_ + i]; }
    size_t size() const { return size_; }

    /// Leaf index for a draw u in [0, total()). Never returns a zero-weight leaf.
    size_t sample(double u) const {
        size_t p = 1;
        while (p < cap_) {
            const double left = node_[2 * p];
            if (u < left || !(node_[2 * p + 1] > 0.0)) {
                p = 2 * p;
            } else {
                u -= left;
                p = 2 * p + 1;
            }
        }
        return p - cap_;
    }

  private:
    size_t size_ = 0;
    size_t cap_ = 1;
    std::vector<double> node_;
};

/// Event-driven simulator of the decoder circuit.
///
/// Internally the clock runs in units of 1 / P_ref, P_ref being the feedback
/// power (or the probe power when feedback is off, else 1). Rates are held
/// divided by P_ref, so multiplying both powers by c (with eta = 0) leaves the
/// internal rates, hence the event sequence and the internal clock, bitwise
/// unchanged; reported times are internal time / P_ref.
///
/// After a variable flip only its l check rates change; after a check flip
/// only that check and its k variables change.
class PhotonicSimulator {
  public:
    enum class Step : uint8_t { moved, timeout, absorbed };

    PhotonicSimulator(const TannerGraph &graph, std::span<const Bit> initial, const SimParams &params)
        : PhotonicSimulator(graph, initial_state(graph, initial, params.check_init), params) {}

    /// Starts from an arbitrary latch configuration; params.check_init is ignored.
    PhotonicSimulator(const TannerGraph &graph, CircuitState start, const SimParams &params)
        : graph_(&graph), params_(params), rng_(params.seed) {
        params.validate();
        detail::require_consistent(graph, start);
        time_unit_ = params.feedback_power > 0.0 ? params.feedback_power
                     : params.probe_power > 0.0  ? params.probe_power
                                                 : 1.0;
        scaled_ = params;
        scaled_.probe_power = params.probe_power / time_unit_;
        scaled_.feedback_power = params.feedback_power / time_unit_;
        scaled_.eta = params.eta / time_unit_;
        tau_max_ = params.t_max * time_unit_;
        for (size_t s = 0; s <= graph.l(); ++s) {
            gamma_pow_.push_back(std::pow(params.gamma, static_cast<double>(s)));
        }

        state_ = std::move(start);
        tau_ = state_.t * time_unit_;
        parity_ = syndrome(graph, state_.var_latch);
        satisfied_.resize(graph.n());
        for (size_t v = 0; v < graph.n(); ++v) {
            satisfied_[v] = static_cast<uint32_t>(detail::satisfied_count(graph, state_.check_latch, v));
        }

        rates_.var_rate.resize(graph.n());
        rates_.check_rate.resize(graph.m());
        rates_.check_target.resize(graph.m());
        std::vector<double> leaves(graph.n() + graph.m());
        for (size_t v = 0; v < graph.n(); ++v) {
            rates_.var_rate[v] = leaves[v] = var_rate(v);
        }
        for (size_t c = 0; c < graph.m(); ++c) {
            refresh_check_entry(c);
            leaves[graph.n() + c] = rates_.check_rate[c];
        }
        tree_.assign(leaves);
        rates_.total = tree_.total();
    }

    const CircuitState &state() const { return state_; }
    const TannerGraph &graph() const { return *graph_; }
    double time() const { return state_.t; }
    /// Rates in internal units, i.e. compute_rates(graph, state, internal_params()).
    const RateTable &rates() const { return rates_; }
    const SimParams &internal_params() const { return scaled_; }
    double time_unit() const { return time_unit_; }
    const Event &last_event() const { return last_; }

    /// Draws and applies the next event unless it would fall after t_max.
    Step advance() {
        const double total = tree_.total();
        if (!(total > 0.0)) {
            return Step::absorbed;
        }
        const double tau_next = tau_ + exp_(rng_) / total;
        if (tau_next > tau_max_) {
            tau_ = tau_max_;
            state_.t = params_.t_max;
            return Step::timeout;
        }
        const double u = std::uniform_real_distribution<double>(0.0, total)(rng_);
        const size_t leaf = tree_.sample(u);
        tau_ = tau_next;
        state_.t = tau_ / time_unit_;
        last_.t = state_.t;
        if (leaf < graph_->n()) {
            flip_variable(leaf);
        } else {
            flip_check(leaf - graph_->n());
        }
        rates_.total = tree_.total();
        return Step::moved;
    }

  private:
    double var_rate(size_t v) const {
        return scaled_.feedback_power * gamma_pow_[satisfied_[v]] + scaled_.eta;
    }

    void refresh_check_entry(size_t c) {
        if (state_.check_latch[c] != parity_[c]) {
            rates_.check_rate[c] = scaled_.probe_power + scaled_.eta;
            rates_.check_target[c] = parity_[c];
        } else {
            rates_.check_rate[c] = scaled_.eta;
            rates_.check_target[c] = parity_[c] ^ 1;
        }
    }

    void flip_variable(size_t v) {
        state_.var_latch[v] ^= 1;
        last_ = {state_.t, LatchKind::variable, static_cast<uint32_t>(v), state_.var_latch[v]};
        for (uint32_t c : graph_->checks_of(v)) {
            parity_[c] ^= 1;
            refresh_check_entry(c);
            tree_.set(graph_->n() + c, rates_.check_rate[c]);
        }
    }

    void flip_check(size_t c) {
        state_.check_latch[c] ^= 1;
        last_ = {state_.t, LatchKind::check, static_cast<uint32_t>(c), state_.check_latch[c]};
        refresh_check_entry(c);
        tree_.set(graph_->n() + c, rates_.check_rate[c]);
        const bool now_satisfied = state_.check_latch[c] == 0;
        for (uint32_t v : graph_->vars_of(c)) {
            satisfied_[v] = now_satisfied ? satisfied_[v] + 1 : satisfied_[v] - 1;
            rates_.var_rate[v] = var_rate(v);
            tree_.set(v, rates_.var_rate[v]);
        }
    }

    const TannerGraph *graph_;
    SimParams params_;
    SimParams scaled_;
    double time_unit_ = 1.0;
    double tau_ = 0.0;
    double tau_max_ = 0.0;
    std::vector<double> gamma_pow_;
    CircuitState state_;
    std::vector<Bit> parity_;
    std::vector<uint32_t> satisfied_;
    RateTable rates_;
    SumTree tree_;
    Rng rng_;
    std::exponential_distribution<double> exp_{1.0};
    Event last_;
};

/// Runs the circuit from `initial` until the variable latches first equal
/// `reference` (success), the clock would pass t_max, or event_cap events
/// have been applied. Deterministic for a fixed params.seed.
inline TrajectoryRecord run_trajectory(const TannerGraph &graph, std::span<const Bit> initial,
                                       std::span<const Bit> reference, const SimParams &params) {
    detail::require(reference.size() == graph.n(), "run_trajectory: reference length does not match n");
    PhotonicSimulator sim(graph, initial, params);
    TrajectoryRecord rec;
    auto errors = static_cast<uint32_t>(errors_remaining(sim.state(), reference));
    rec.errors_timeline.push_back({0.0, errors});
    while (true) {
        if (errors == 0) {
            rec.outcome = Outcome::success;
            rec.t_decode = sim.time();
            break;
        }
        if (rec.n_events >= params.event_cap) {
            rec.outcome = Outcome::event_cap;
            break;
        }
        const auto step = sim.advance();
        if (step == PhotonicSimulator::Step::timeout) {
            rec.outcome = Outcome::timeout;
            break;
        }
        if (step == PhotonicSimulator::Step::absorbed) {
            rec.outcome = Outcome::absorbed;
            break;
        }
        ++rec.n_events;
        const Event &e = sim.last_event();
        if (params.record_events) {
            rec.events.push_back(e);
        }
        if (e.kind == LatchKind::variable) {
            errors = e.new_bit == reference[e.index] ? errors - 1 : errors + 1;
            rec.errors_timeline.push_back({e.t, errors});
        }
    }
    rec.t_end = sim.time();
    return rec;
}

/// Replays a recorded event list onto an initial state.
inline CircuitState replay(CircuitState state, std::span<const Event> events) {
    for (const auto &e : events) {
        apply_event(state, e);
    }
    return state;
}

}  // namespace phldpc
