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

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "phldpc/code.hpp"
#include "phldpc/errors.hpp"
#include "phldpc/rng.hpp"
#include "phldpc/trajectory.hpp"

namespace phldpc {

enum class DecodeStatus : uint8_t {
    success,
    /// Nonzero syndrome and no variable sits in a strict majority of unsatisfied checks.
    stuck,
    /// Flip budget exhausted while eligible variables remained.
    budget,
};

inline std::string_view to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::success:
            return "success";
        case DecodeStatus::stuck:
            return "stuck";
        case DecodeStatus::budget:
            return "budget";
    }
    return "?";
}

struct DecodeResult {
    Assignment final;
    bool success = false;
    size_t flips = 0;
    std::vector<uint32_t> flip_log;
    DecodeStatus status = DecodeStatus::stuck;
};

namespace detail {

/// Syndrome plus per-variable unsatisfied-check counts, updated in place on flips.
class FlipBookkeeping {
  public:
    FlipBookkeeping(const TannerGraph &graph, std::span<const Bit> a)
        : graph_(graph), bits_(a.begin(), a.end()), syndrome_(syndrome(graph, a)), unsat_of_(graph.n(), 0) {
        for (size_t c = 0; c < graph.m(); ++c) {
            if (syndrome_[c]) {
                ++total_unsat_;
                for (uint32_t v : graph.vars_of(c)) {
                    ++unsat_of_[v];
                }
            }
        }
    }

    /// Strictly more unsatisfied than satisfied incident checks.
    bool eligible(size_t v) const { return 2 * unsat_of_[v] > graph_.l(); }

    void flip(size_t v) {
        bits_[v] ^= 1;
        for (uint32_t c : graph_.checks_of(v)) {
            syndrome_[c] ^= 1;
            const bool now_unsat = syndrome_[c] != 0;
            total_unsat_ = now_unsat ? total_unsat_ + 1 : total_unsat_ - 1;
            for (uint32_t w : graph_.vars_of(c)) {
                unsat_of_[w] = now_unsat ? unsat_of_[w] + 1 : unsat_of_[w] - 1;
            }
        }
    }

    size_t unsat_of(size_t v) const { return unsat_of_[v]; }
    size_t total_unsat() const { return total_unsat_; }
    const Assignment &bits() const { return bits_; }
    Assignment &&take_bits() { return std::move(bits_); }

  private:
    const TannerGraph &graph_;
    Assignment bits_;
    std::vector<Bit> syndrome_;
    std::vector<uint32_t> unsat_of_;
    size_t total_unsat_ = 0;
};

}  // namespace detail

/// Which eligible variable decode_sequential flips next.
enum class FlipOrder : uint8_t {
    /// The one in the most unsatisfied checks; lowest index among ties.
    most_unsatisfied,
    /// The lowest-index eligible variable.
    first_index,
};

inline std::string_view to_string(FlipOrder o) {
    return o == FlipOrder::most_unsatisfied ? "most_unsatisfied" : "first_index";
}

/// Sequential bit-flip decoding: while some variable sits in a strict
/// majority of unsatisfied checks, flip one chosen by `order`. Every flip must
/// lower the unsatisfied-check count; a violation throws std::logic_error.
inline DecodeResult decode_sequential(const TannerGraph &graph, std::span<const Bit> a,
                                      size_t max_flips = std::numeric_limits<size_t>::max(),
                                      FlipOrder order = FlipOrder::most_unsatisfied) {
    detail::require(a.size() == graph.n(), "decode_sequential: assignment length does not match n");
    detail::FlipBookkeeping book(graph, a);
    // buckets[u] holds the variables with u unsatisfied checks.
    std::vector<std::set<uint32_t>> buckets(graph.l() + 1);
    std::vector<uint32_t> in_bucket(graph.n());
    for (uint32_t v = 0; v < graph.n(); ++v) {
        in_bucket[v] = static_cast<uint32_t>(book.unsat_of(v));
        buckets[in_bucket[v]].insert(v);
    }
    auto next_variable = [&]() -> std::optional<uint32_t> {
        if (order == FlipOrder::most_unsatisfied) {
            for (size_t u = graph.l(); 2 * u > graph.l(); --u) {
                if (!buckets[u].empty()) {
                    return *buckets[u].begin();
                }
            }
            return std::nullopt;
        }
        std::optional<uint32_t> best;
        for (size_t u = graph.l(); 2 * u > graph.l(); --u) {
            if (!buckets[u].empty() && (!best || *buckets[u].begin() < *best)) {
                best = *buckets[u].begin();
            }
        }
        return best;
    };

    DecodeResult result;
    while (book.total_unsat() > 0) {
        const auto v = next_variable();
        if (!v) {
            result.status = DecodeStatus::stuck;
            break;
        }
        if (result.flips >= max_flips) {
            result.status = DecodeStatus::budget;
            break;
        }
        const size_t before = book.total_unsat();
        book.flip(*v);
        if (book.total_unsat() >= before) {
            throw std::logic_error("decode_sequential: flip of variable " + std::to_string(*v) +
                                   " did not reduce the unsatisfied-check count");
        }
        for (uint32_t c : graph.checks_of(*v)) {
            for (uint32_t w : graph.vars_of(c)) {
                const auto u = static_cast<uint32_t>(book.unsat_of(w));
                if (u != in_bucket[w]) {
                    buckets[in_bucket[w]].erase(w);
                    buckets[u].insert(w);
                    in_bucket[w] = u;
                }
            }
        }
        result.flip_log.push_back(*v);
        ++result.flips;
    }
    result.success = book.total_unsat() == 0;
    if (result.success) {
        result.status = DecodeStatus::success;
    }
    result.final = book.take_bits();
    return result;
}

/// Idealized continuous-time flip decoder: each variable in a strict majority
/// of unsatisfied checks flips at rate `r_flip`, all others at rate 0. The
/// record's errors_timeline tracks the number of unsatisfied checks; success is
/// the first passage of that count to zero.
inline TrajectoryRecord decode_ctmc_ideal(const TannerGraph &graph, std::span<const Bit> a, double r_flip,
                                          uint64_t seed, double t_max, uint64_t event_cap = 10'000'000) {
    detail::require(a.size() == graph.n(), "decode_ctmc_ideal: assignment length does not match n");
    detail::require(r_flip > 0.0, "decode_ctmc_ideal: r_flip must be positive");
    detail::require(t_max > 0.0, "decode_ctmc_ideal: t_max must be positive");

    detail::FlipBookkeeping book(graph, a);
    // Dense set of eligible variables with O(1) insert/erase.
    constexpr uint32_t absent = std::numeric_limits<uint32_t>::max();
    std::vector<uint32_t> eligible;
    std::vector<uint32_t> slot(graph.n(), absent);
    auto refresh = [&](uint32_t v) {
        const bool want = book.eligible(v);
        if (want && slot[v] == absent) {
            slot[v] = static_cast<uint32_t>(eligible.size());
            eligible.push_back(v);
        } else if (!want && slot[v] != absent) {
            const uint32_t last = eligible.back();
            eligible[slot[v]] = last;
            slot[last] = slot[v];
            eligible.pop_back();
            slot[v] = absent;
        }
    };
    for (uint32_t v = 0; v < graph.n(); ++v) {
        refresh(v);
    }

    Rng rng(seed);
    std::exponential_distribution<double> unit_exp(1.0);
    TrajectoryRecord rec;
    double t = 0.0;
    rec.errors_timeline.push_back({0.0, static_cast<uint32_t>(book.total_unsat())});
    while (true) {
        if (book.total_unsat() == 0) {
            rec.outcome = Outcome::success;
            rec.t_decode = t;
            break;
        }
        if (eligible.empty()) {
            rec.outcome = Outcome::absorbed;
            break;
        }
        if (rec.n_events >= event_cap) {
            rec.outcome = Outcome::event_cap;
            break;
        }
        const double total = r_flip * static_cast<double>(eligible.size());
        const double t_next = t + unit_exp(rng) / total;
        if (t_next > t_max) {
            rec.outcome = Outcome::timeout;
            t = t_max;
            break;
        }
        t = t_next;
        std::uniform_int_distribution<size_t> pick(0, eligible.size() - 1);
        const uint32_t v = eligible[pick(rng)];
        book.flip(v);
        for (uint32_t c : graph.checks_of(v)) {
            for (uint32_t w : graph.vars_of(c)) {
                refresh(w);
            }
        }
        rec.events.push_back({t, LatchKind::variable, v, book.bits()[v]});
        ++rec.n_events;
        rec.errors_timeline.push_back({t, static_cast<uint32_t>(book.total_unsat())});
    }
    rec.t_end = t;
    return rec;
}

}  // namespace phldpc
