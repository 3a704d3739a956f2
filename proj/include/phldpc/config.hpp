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

#include <fstream>
#include <set>
#include <string>

#include "json.hpp"
#include "phldpc/errors.hpp"
#include "phldpc/harness.hpp"

namespace phldpc {

// JSON run description. Every section is optional and falls back to the
// EnsembleConfig defaults; unknown keys are rejected.
//
// {
//   "code":   {"n": 1000, "l": 5, "k": 10, "seed": 1, "graph_file": "", "fresh_per_trajectory": false},
//   "errors": {"count": 30}            (or {"prob": 0.03}),
//   "sim":    {"probe_power": 1e5, "feedback_power": 1, "gamma": 0.01, "eta": 0,
//              "t_max": 1e12, "event_cap": 50000000, "seed": 42, "check_init": "syndrome"},
//   "trajectories": 500,
//   "grid":   {"t_min": 0.01, "t_max": 1e8, "points": 101},
//   "threads": 0,
//   "output": {"csv": "", "timeline_csv": "", "trajectories_csv": ""},
//   "sweep":  {"gamma": [0.1, 0.01], "errors_count": [10, 30]}
// }

namespace detail {

inline void reject_unknown(const nlohmann::json &j, const std::string &where, const std::set<std::string> &known) {
    if (!j.is_object()) {
        throw ParameterError("config: '" + where + "' must be an object");
    }
    for (const auto &[key, _] : j.items()) {
        if (!known.count(key)) {
            throw ParameterError("config: unknown key '" + key + "' in " + where);
        }
    }
}

template <class T>
void read_opt(const nlohmann::json &j, const char *key, T &out) {
    if (j.contains(key)) {
        out = j.at(key).get<T>();
    }
}

}  // namespace detail

inline EnsembleConfig ensemble_config_from_json(const nlohmann::json &j) {
    using detail::read_opt;
    detail::reject_unknown(j, "config", {"code", "errors", "sim", "trajectories", "grid", "threads", "output", "sweep"});
    EnsembleConfig cfg;
    try {
        if (j.contains("code")) {
            const auto &c = j.at("code");
            detail::reject_unknown(c, "code", {"n", "l", "k", "seed", "graph_file", "fresh_per_trajectory"});
            read_opt(c, "n", cfg.code.n);
            read_opt(c, "l", cfg.code.l);
            read_opt(c, "k", cfg.code.k);
            read_opt(c, "seed", cfg.code.seed);
            read_opt(c, "graph_file", cfg.code.graph_file);
            read_opt(c, "fresh_per_trajectory", cfg.code.fresh_per_trajectory);
        }
        if (j.contains("errors")) {
            const auto &e = j.at("errors");
            detail::reject_unknown(e, "errors", {"count", "prob"});
            cfg.errors = {};
            if (e.contains("count")) {
                cfg.errors.count = e.at("count").get<size_t>();
            }
            if (e.contains("prob")) {
                cfg.errors.prob = e.at("prob").get<double>();
            }
        }
        if (j.contains("sim")) {
            const auto &s = j.at("sim");
            detail::reject_unknown(s, "sim", {"probe_power", "feedback_power", "gamma", "eta", "t_max", "event_cap",
                                              "seed", "check_init"});
            read_opt(s, "probe_power", cfg.params.probe_power);
            read_opt(s, "feedback_power", cfg.params.feedback_power);
            read_opt(s, "gamma", cfg.params.gamma);
            read_opt(s, "eta", cfg.params.eta);
            read_opt(s, "t_max", cfg.params.t_max);
            read_opt(s, "event_cap", cfg.params.event_cap);
            read_opt(s, "seed", cfg.params.seed);
            if (s.contains("check_init")) {
                const auto mode = s.at("check_init").get<std::string>();
                if (mode == "syndrome") {
                    cfg.params.check_init = CheckInit::syndrome;
                } else if (mode == "zero") {
                    cfg.params.check_init = CheckInit::zero;
                } else {
                    throw ParameterError("config: sim.check_init must be 'syndrome' or 'zero'");
                }
            }
        }
        read_opt(j, "trajectories", cfg.trajectories);
        read_opt(j, "threads", cfg.threads);
        if (j.contains("grid")) {
            const auto &g = j.at("grid");
            detail::reject_unknown(g, "grid", {"t_min", "t_max", "points"});
            read_opt(g, "t_min", cfg.grid.t_min);
            read_opt(g, "t_max", cfg.grid.t_max);
            read_opt(g, "points", cfg.grid.points);
        }
        if (j.contains("output")) {
            const auto &o = j.at("output");
            detail::reject_unknown(o, "output", {"csv", "timeline_csv", "trajectories_csv"});
            read_opt(o, "csv", cfg.output.csv);
            read_opt(o, "timeline_csv", cfg.output.timeline_csv);
            read_opt(o, "trajectories_csv", cfg.output.trajectories_csv);
        }
    } catch (const nlohmann::json::exception &e) {
        throw ParameterError(std::string("config: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

inline SweepSpec sweep_spec_from_json(const nlohmann::json &j) {
    SweepSpec spec;
    if (!j.contains("sweep")) {
        throw ParameterError("config: missing 'sweep' section");
    }
    const auto &s = j.at("sweep");
    detail::reject_unknown(s, "sweep", {sweep_axes().begin(), sweep_axes().end()});
    try {
        for (const auto &[axis, values] : s.items()) {
            spec.axes[axis] = values.get<std::vector<double>>();
        }
    } catch (const nlohmann::json::exception &e) {
        throw ParameterError(std::string("config: sweep: ") + e.what());
    }
    return spec;
}

inline nlohmann::json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParameterError("cannot open config '" + path + "'");
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw ParameterError("config '" + path + "': " + e.what());
    }
}

}  // namespace phldpc
