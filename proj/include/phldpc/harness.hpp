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
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "phldpc/channel.hpp"
#include "phldpc/code.hpp"
#include "phldpc/errors.hpp"
#include "phldpc/photonic_ctmc.hpp"
#include "phldpc/rng.hpp"
#include "phldpc/trajectory.hpp"

namespace phldpc {

/// Upper limit on the feedback attenuation for which a lone error is corrected
/// before the induced flips around it accumulate: (1 / (l (k - 1)))^(1 / (l - 1)).
inline double gamma_bound(int l, int k) {
    detail::require(l >= 2, "gamma_bound: l must be >= 2");
    detail::require(k >= 2, "gamma_bound: k must be >= 2");
    return std::pow(1.0 / (static_cast<double>(l) * static_cast<double>(k - 1)), 1.0 / static_cast<double>(l - 1));
}

/// `points` log-spaced times from t_min to t_max inclusive.
inline std::vector<double> log_grid(double t_min, double t_max, size_t points) {
    detail::require(t_min > 0.0 && t_max > t_min, "log_grid: need 0 < t_min < t_max");
    detail::require(points >= 2, "log_grid: need at least two points");
    std::vector<double> g(points);
    const double a = std::log10(t_min);
    const double b = std::log10(t_max);
    for (size_t i = 0; i < points; ++i) {
        g[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1));
    }
    g.front() = t_min;
    g.back() = t_max;
    return g;
}

/// Step (last value at or before) interpolation of the sparse errors timeline.
inline std::vector<double> resample_timeline(const TrajectoryRecord &record, std::span<const double> grid) {
    detail::require(std::is_sorted(grid.begin(), grid.end()), "resample_timeline: grid must be sorted");
    std::vector<double> out(grid.size(), 0.0);
    const auto &tl = record.errors_timeline;
    if (tl.empty()) {
        return out;
    }
    size_t j = 0;
    for (size_t i = 0; i < grid.size(); ++i) {
        while (j + 1 < tl.size() && tl[j + 1].t <= grid[i]) {
            ++j;
        }
        out[i] = tl[j].errors;
    }
    return out;
}

/// Linear-interpolation percentile (q in [0, 1]) of sorted data.
inline double percentile_sorted(std::span<const double> sorted, double q) {
    detail::require(!sorted.empty(), "percentile: empty sample");
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<size_t>(std::floor(pos));
    const size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

struct CodeSpec {
    size_t n = 1000;
    size_t l = 5;
    size_t k = 10;
    uint64_t seed = 1;
    /// When set, the code is loaded from this graph file instead of sampled.
    std::string graph_file;
    /// Draw a fresh code for every trajectory (seeded from `seed` and the index).
    bool fresh_per_trajectory = false;
};

struct ErrorSpec {
    std::optional<size_t> count;
    std::optional<double> prob;
};

struct GridSpec {
    double t_min = 1e-2;
    double t_max = 1e8;
    size_t points = 101;
};

struct OutputSpec {
    std::string csv;
    std::string timeline_csv;
    std::string trajectories_csv;
};

struct EnsembleConfig {
    CodeSpec code;
    ErrorSpec errors{30, std::nullopt};
    SimParams params;
    size_t trajectories = 100;
    GridSpec grid;
    /// Worker threads; 0 selects the hardware concurrency.
    size_t threads = 0;
    OutputSpec output;

    void validate() const {
        detail::require(trajectories >= 1, "EnsembleConfig: trajectories must be >= 1");
        detail::require(errors.count.has_value() != errors.prob.has_value(),
                        "EnsembleConfig: specify exactly one of errors.count and errors.prob");
        detail::require(grid.t_min > 0.0 && grid.t_max > grid.t_min, "EnsembleConfig: grid bounds must be 0 < t_min < t_max");
        detail::require(grid.points >= 2, "EnsembleConfig: grid needs at least two points");
        params.validate();
    }
};

struct TrajectorySummary {
    Outcome outcome = Outcome::timeout;
    std::optional<double> t_decode;
    /// Time of the first variable event that lowered the error count.
    std::optional<double> t_first_correction;
    uint32_t initial_errors = 0;
    uint64_t events = 0;
    double t_end = 0.0;
    std::vector<double> curve;
};

struct EnsembleStats {
    size_t n_total = 0;
    size_t n_success = 0;
    double p_decode = 0.0;
    std::optional<double> t_decode_median;
    std::optional<double> t_decode_p05;
    std::optional<double> t_decode_p95;
    std::optional<double> t_decode_mean;
    /// Mean over successful trajectories, per grid point.
    std::vector<double> grid;
    std::vector<double> mean_errors_curve;
    /// Block bits decoded per unit time: n / mean decode time.
    std::optional<double> decode_rate;
    /// decode_rate / input_power.
    std::optional<double> decode_energy_rate;
    /// n*l*probe_power + n*feedback_power: one probe drive per Tanner edge
    /// fragment plus one feedback drive per variable.
    double input_power = 0.0;
    std::vector<TrajectorySummary> per_trajectory;
};

inline double total_input_power(size_t n, size_t l, const SimParams &p) {
    return static_cast<double>(n * l) * p.probe_power + static_cast<double>(n) * p.feedback_power;
}

/// Aggregates per-trajectory summaries (indexed by trajectory) into
/// ensemble statistics. Failed trajectories count in p_decode only.
inline EnsembleStats summarize(std::vector<TrajectorySummary> runs, std::vector<double> grid, size_t n,
                               double input_power) {
    EnsembleStats st;
    st.n_total = runs.size();
    st.grid = std::move(grid);
    st.input_power = input_power;
    st.mean_errors_curve.assign(st.grid.size(), 0.0);
    std::vector<double> times;
    for (const auto &r : runs) {
        if (r.outcome != Outcome::success) {
            continue;
        }
        ++st.n_success;
        times.push_back(*r.t_decode);
        for (size_t i = 0; i < st.grid.size(); ++i) {
            st.mean_errors_curve[i] += r.curve[i];
        }
    }
    st.p_decode = st.n_total ? static_cast<double>(st.n_success) / static_cast<double>(st.n_total) : 0.0;
    if (!times.empty()) {
        for (auto &x : st.mean_errors_curve) {
            x /= static_cast<double>(st.n_success);
        }
        std::sort(times.begin(), times.end());
        st.t_decode_median = percentile_sorted(times, 0.5);
        st.t_decode_p05 = percentile_sorted(times, 0.05);
        st.t_decode_p95 = percentile_sorted(times, 0.95);
        st.t_decode_mean = std::accumulate(times.begin(), times.end(), 0.0) / static_cast<double>(times.size());
        st.decode_rate = static_cast<double>(n) / *st.t_decode_mean;
        st.decode_energy_rate = *st.decode_rate / input_power;
    }
    st.per_trajectory = std::move(runs);
    return st;
}

inline TannerGraph load_graph_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParameterError("cannot open graph file '" + path + "'");
    }
    return read_graph(in);
}

inline void save_graph_file(const std::string &path, const TannerGraph &graph) {
    std::ofstream out(path);
    if (!out) {
        throw ParameterError("cannot write graph file '" + path + "'");
    }
    write_graph(out, graph);
}

/// Code, corrupted word and simulator seed of one ensemble member.
struct TrajectoryInput {
    const TannerGraph *shared_graph = nullptr;
    std::optional<TannerGraph> own_graph;
    Corrupted input;
    SimParams params;

    const TannerGraph &graph() const { return own_graph ? *own_graph : *shared_graph; }
};

namespace detail {

inline std::optional<TannerGraph> shared_graph(const EnsembleConfig &cfg) {
    if (!cfg.code.graph_file.empty()) {
        return load_graph_file(cfg.code.graph_file);
    }
    if (!cfg.code.fresh_per_trajectory) {
        return sample_regular_code(cfg.code.n, cfg.code.l, cfg.code.k, cfg.code.seed);
    }
    return std::nullopt;
}

inline TrajectoryInput make_trajectory_input(const EnsembleConfig &cfg, const std::optional<TannerGraph> &shared,
                                             size_t i) {
    TrajectoryInput in;
    if (shared) {
        in.shared_graph = &*shared;
    } else {
        in.own_graph =
            sample_regular_code(cfg.code.n, cfg.code.l, cfg.code.k, derive_seed(cfg.code.seed, i, stream::code));
    }
    const Assignment reference(in.graph().n(), 0);
    const uint64_t channel_seed = derive_seed(cfg.params.seed, i, stream::channel);
    in.input = cfg.errors.count ? corrupt_fixed_count(reference, *cfg.errors.count, channel_seed)
                                : corrupt_iid(reference, *cfg.errors.prob, channel_seed);
    in.params = cfg.params;
    in.params.seed = derive_seed(cfg.params.seed, i, stream::sim);
    return in;
}

}  // namespace detail

/// Re-runs member `index` of the ensemble described by `cfg` with the full
/// event list recorded.
inline TrajectoryRecord ensemble_trajectory(const EnsembleConfig &cfg, size_t index) {
    cfg.validate();
    const auto shared = detail::shared_graph(cfg);
    TrajectoryInput in = detail::make_trajectory_input(cfg, shared, index);
    in.params.record_events = true;
    const Assignment reference(in.graph().n(), 0);
    return run_trajectory(in.graph(), in.input.word, reference, in.params);
}

/// Runs cfg.trajectories independent trajectories from the all-zero
/// codeword. Trajectory i draws its code (when fresh), channel pattern and
/// simulator stream from seeds derived from (master seed, i), so results do
/// not depend on the thread count or scheduling.
inline EnsembleStats run_ensemble(const EnsembleConfig &cfg) {
    cfg.validate();
    const std::optional<TannerGraph> shared = detail::shared_graph(cfg);
    const size_t n = shared ? shared->n() : cfg.code.n;
    const size_t l = shared ? shared->l() : cfg.code.l;
    if (cfg.errors.count) {
        detail::require(*cfg.errors.count <= n, "run_ensemble: error count exceeds block length");
    }
    const std::vector<double> grid = log_grid(cfg.grid.t_min, cfg.grid.t_max, cfg.grid.points);

    std::vector<TrajectorySummary> runs(cfg.trajectories);
    auto run_one = [&](size_t i) {
        TrajectoryInput in = detail::make_trajectory_input(cfg, shared, i);
        in.params.record_events = false;
        const Assignment reference(in.graph().n(), 0);
        const TrajectoryRecord rec = run_trajectory(in.graph(), in.input.word, reference, in.params);

        TrajectorySummary s;
        s.outcome = rec.outcome;
        s.t_decode = rec.t_decode;
        s.initial_errors = rec.initial_errors();
        s.events = rec.n_events;
        s.t_end = rec.t_end;
        for (size_t j = 1; j < rec.errors_timeline.size(); ++j) {
            if (rec.errors_timeline[j].errors < rec.errors_timeline[j - 1].errors) {
                s.t_first_correction = rec.errors_timeline[j].t;
                break;
            }
        }
        s.curve = resample_timeline(rec, grid);
        runs[i] = std::move(s);
    };

    size_t workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, cfg.trajectories);
    if (workers <= 1) {
        for (size_t i = 0; i < cfg.trajectories; ++i) {
            run_one(i);
        }
    } else {
        std::atomic<size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        for (size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                try {
                    for (size_t i = next++; i < cfg.trajectories; i = next++) {
                        run_one(i);
                    }
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    failure = std::current_exception();
                    next = cfg.trajectories;
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    return summarize(std::move(runs), grid, n, total_input_power(n, l, cfg.params));
}

// ---------------------------------------------------------------------------
// CSV output

namespace csv {

inline std::string num(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string num(const std::optional<double> &x) { return x ? num(*x) : std::string(); }

inline const std::vector<std::string> &config_columns() {
    static const std::vector<std::string> cols = {
        "n",           "l",          "k",          "code_seed",      "graph_file", "fresh_code",
        "errors_count", "errors_prob", "probe_power", "feedback_power", "gamma",      "eta",
        "t_max",       "event_cap",  "seed",       "check_init",     "trajectories"};
    return cols;
}

inline const std::vector<std::string> &stat_columns() {
    static const std::vector<std::string> cols = {
        "input_power",   "p_decode",    "t_decode_median",    "t_decode_p05", "t_decode_p95",
        "t_decode_mean", "decode_rate", "decode_energy_rate", "n_success",    "n_total"};
    return cols;
}

inline std::string header() {
    std::string h;
    for (const auto &c : config_columns()) {
        h += (h.empty() ? "" : ",") + c;
    }
    for (const auto &c : stat_columns()) {
        h += "," + c;
    }
    return h;
}

/// Graph-file paths are written verbatim; commas or quotes in them are rejected.
inline std::vector<std::string> config_fields(const EnsembleConfig &cfg) {
    detail::require(cfg.code.graph_file.find_first_of(",\"\n") == std::string::npos,
                    "csv: graph file path may not contain commas, quotes or newlines");
    const auto &p = cfg.params;
    return {std::to_string(cfg.code.n),
            std::to_string(cfg.code.l),
            std::to_string(cfg.code.k),
            std::to_string(cfg.code.seed),
            cfg.code.graph_file,
            cfg.code.fresh_per_trajectory ? "1" : "0",
            cfg.errors.count ? std::to_string(*cfg.errors.count) : "",
            cfg.errors.prob ? num(*cfg.errors.prob) : "",
            num(p.probe_power),
            num(p.feedback_power),
            num(p.gamma),
            num(p.eta),
            num(p.t_max),
            std::to_string(p.event_cap),
            std::to_string(p.seed),
            p.check_init == CheckInit::syndrome ? "syndrome" : "zero",
            std::to_string(cfg.trajectories)};
}

inline std::string join(const std::vector<std::string> &fields) {
    std::string s;
    for (size_t i = 0; i < fields.size(); ++i) {
        s += (i ? "," : "") + fields[i];
    }
    return s;
}

inline std::string row(const EnsembleConfig &cfg, const EnsembleStats &st) {
    auto f = config_fields(cfg);
    f.push_back(num(st.input_power));
    f.push_back(num(st.p_decode));
    f.push_back(num(st.t_decode_median));
    f.push_back(num(st.t_decode_p05));
    f.push_back(num(st.t_decode_p95));
    f.push_back(num(st.t_decode_mean));
    f.push_back(num(st.decode_rate));
    f.push_back(num(st.decode_energy_rate));
    f.push_back(std::to_string(st.n_success));
    f.push_back(std::to_string(st.n_total));
    return join(f);
}

/// CSV `t,errors` of the mean errors-remaining curve.
inline void write_mean_curve(std::ostream &out, const EnsembleStats &st) {
    out << "t,errors\n";
    for (size_t i = 0; i < st.grid.size(); ++i) {
        out << num(st.grid[i]) << ',' << (st.n_success ? num(st.mean_errors_curve[i]) : std::string()) << '\n';
    }
}

inline void write_trajectories(std::ostream &out, const EnsembleStats &st) {
    out << "index,outcome,initial_errors,t_decode,t_end,events\n";
    for (size_t i = 0; i < st.per_trajectory.size(); ++i) {
        const auto &r = st.per_trajectory[i];
        out << i << ',' << to_string(r.outcome) << ',' << r.initial_errors << ',' << num(r.t_decode) << ','
            << num(r.t_end) << ',' << r.events << '\n';
    }
}

}  // namespace csv

/// Appends one row per ensemble to a CSV file, writing the header when the
/// file is new. Rows whose config columns already appear are reported as
/// done so interrupted sweeps can resume.
class CsvAppender {
  public:
    explicit CsvAppender(std::string path) : path_(std::move(path)) {
        std::ifstream in(path_);
        if (in) {
            std::string line;
            if (std::getline(in, line)) {
                if (line != csv::header()) {
                    throw FormatError("csv '" + path_ + "': existing header does not match this tool's columns");
                }
                has_header_ = true;
            }
            const size_t n_cfg = csv::config_columns().size();
            while (std::getline(in, line)) {
                if (line.empty()) {
                    continue;
                }
                size_t pos = 0;
                for (size_t i = 0; i < n_cfg && pos != std::string::npos; ++i) {
                    pos = line.find(',', pos + (i ? 1 : 0));
                }
                done_.insert(pos == std::string::npos ? line : line.substr(0, pos));
            }
        }
        out_.open(path_, std::ios::app);
        if (!out_) {
            throw ParameterError("cannot write csv '" + path_ + "'");
        }
        if (!has_header_) {
            out_ << csv::header() << '\n';
            out_.flush();
        }
    }

    bool done(const EnsembleConfig &cfg) const { return done_.count(csv::join(csv::config_fields(cfg))) > 0; }

    void append(const EnsembleConfig &cfg, const EnsembleStats &st) {
        std::lock_guard lock(mutex_);
        out_ << csv::row(cfg, st) << '\n';
        out_.flush();
        done_.insert(csv::join(csv::config_fields(cfg)));
    }

  private:
    std::string path_;
    std::ofstream out_;
    bool has_header_ = false;
    std::set<std::string> done_;
    std::mutex mutex_;
};

// ---------------------------------------------------------------------------
// Sweeps

/// Grid axes, applied in this order; the last listed axis varies fastest.
/// `power` sets probe and feedback power to the same value.
inline const std::vector<std::string> &sweep_axes() {
    static const std::vector<std::string> axes = {"errors_count", "errors_prob", "gamma", "probe_power",
                                                  "feedback_power", "power", "eta"};
    return axes;
}

struct SweepSpec {
    std::map<std::string, std::vector<double>> axes;
};

inline EnsembleConfig apply_sweep_point(EnsembleConfig cfg, const std::string &axis, double value) {
    if (axis == "errors_count") {
        detail::require(value >= 0.0 && value == std::floor(value), "sweep: errors_count must be a whole number");
        cfg.errors = {static_cast<size_t>(value), std::nullopt};
    } else if (axis == "errors_prob") {
        cfg.errors = {std::nullopt, value};
    } else if (axis == "gamma") {
        cfg.params.gamma = value;
    } else if (axis == "probe_power") {
        cfg.params.probe_power = value;
    } else if (axis == "feedback_power") {
        cfg.params.feedback_power = value;
    } else if (axis == "power") {
        cfg.params.probe_power = value;
        cfg.params.feedback_power = value;
    } else if (axis == "eta") {
        cfg.params.eta = value;
    } else {
        throw ParameterError("sweep: unknown axis '" + axis + "'");
    }
    return cfg;
}

/// Cartesian product of the sweep axes over `base`, in deterministic order.
inline std::vector<EnsembleConfig> expand_sweep(const EnsembleConfig &base, const SweepSpec &spec) {
    detail::require(!spec.axes.empty(), "sweep: grid is empty");
    for (const auto &[axis, values] : spec.axes) {
        detail::require(std::find(sweep_axes().begin(), sweep_axes().end(), axis) != sweep_axes().end(),
                        "sweep: unknown axis '" + axis + "'");
        detail::require(!values.empty(), "sweep: axis '" + axis + "' has no values");
    }
    std::vector<EnsembleConfig> points{base};
    for (const auto &axis : sweep_axes()) {
        const auto it = spec.axes.find(axis);
        if (it == spec.axes.end()) {
            continue;
        }
        std::vector<EnsembleConfig> next;
        for (const auto &cfg : points) {
            for (double v : it->second) {
                next.push_back(apply_sweep_point(cfg, axis, v));
            }
        }
        points = std::move(next);
    }
    return points;
}

struct SweepRow {
    EnsembleConfig config;
    std::optional<EnsembleStats> stats;  // empty when skipped as already done
};

/// Runs every grid point, appending each row to `csv_path` (if nonempty) as
/// soon as it completes. Points already present in the CSV are skipped.
inline std::vector<SweepRow> sweep(const EnsembleConfig &base, const SweepSpec &spec, const std::string &csv_path) {
    const auto points = expand_sweep(base, spec);
    std::optional<CsvAppender> out;
    if (!csv_path.empty()) {
        out.emplace(csv_path);
    }
    std::vector<SweepRow> rows;
    for (const auto &cfg : points) {
        if (out && out->done(cfg)) {
            rows.push_back({cfg, std::nullopt});
            continue;
        }
        EnsembleStats st = run_ensemble(cfg);
        if (out) {
            out->append(cfg, st);
        }
        rows.push_back({cfg, std::move(st)});
    }
    return rows;
}

}  // namespace phldpc
