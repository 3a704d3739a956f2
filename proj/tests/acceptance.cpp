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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes. Usage: phldpc_acceptance [path-to-phldpc-cli]

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "phldpc/phldpc.hpp"
#include "phldpc/slh_fragments.hpp"
#include "slh_random.hpp"

using namespace phldpc;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

EnsembleConfig headline_config() {
    EnsembleConfig cfg;  // n=1000, l=5, k=10, 30 errors, gamma=0.01, fb=1, probe=1e5, eta=0
    cfg.code = {1000, 5, 10, 1, "", false};
    cfg.errors = {30, std::nullopt};
    cfg.params.probe_power = 1e5;
    cfg.params.feedback_power = 1.0;
    cfg.params.gamma = 0.01;
    cfg.params.eta = 0.0;
    cfg.params.seed = 2026;
    return cfg;
}

Verdict headline_reproduction() {
    EnsembleConfig cfg = headline_config();
    cfg.trajectories = 500;
    const EnsembleStats st = run_ensemble(cfg);
    return {st.p_decode >= 0.98, fmt("success %zu/%zu = %.3f (need >= 0.98), median t_decode %.4g", st.n_success,
                                     st.n_total, st.p_decode, st.t_decode_median.value_or(NAN))};
}

Verdict rate_exactness() {
    const size_t l = 5;
    const TannerGraph g = isolated_variable(l);
    double worst = 0.0;
    bool exact = true;
    for (double eta : {0.0, 1e-8, 1e-4}) {
        for (double fb : {1.0, 0.37, 1e3}) {
            SimParams p;
            p.feedback_power = fb;
            p.gamma = 0.01;
            p.eta = eta;
            p.probe_power = 0.0;
            for (size_t s = 0; s <= l; ++s) {
                CircuitState st;
                st.var_latch = {0};
                st.check_latch.assign(l, 1);
                std::fill_n(st.check_latch.begin(), s, Bit{0});
                const double formula = fb * std::pow(p.gamma, static_cast<double>(s)) + eta;
                const double full = compute_rates(g, st, p).var_rate[0];
                // The incremental engine, converted back from its internal units.
                PhotonicSimulator sim(g, st, p);
                const double inc = sim.rates().var_rate[0] * sim.time_unit();
                exact = exact && full == formula;
                worst = std::max(worst, std::abs(inc - formula) / formula);
            }
        }
    }
    return {exact && worst <= 4e-16,
            fmt("compute_rates bitwise equal to fb*gamma^s+eta for s=0..5: %s; engine max rel dev %.2e",
                exact ? "yes" : "no", worst)};
}

Verdict gamma_bound_value() {
    const double b = gamma_bound(5, 10);
    return {std::abs(b - 0.3861) <= 0.0005, fmt("gamma_bound(5,10) = %.6f (need 0.3861 +- 0.0005)", b)};
}

Verdict rescaling_invariance() {
    const EnsembleConfig cfg = headline_config();
    const TannerGraph g = sample_regular_code(1000, 5, 10, cfg.code.seed);
    const Assignment zero(g.n(), 0);
    size_t events = 0, mismatches = 0;
    for (uint64_t i = 0; i < 20; ++i) {
        const Corrupted c = corrupt_fixed_count(zero, 30, derive_seed(7, i, stream::channel));
        SimParams a = cfg.params;
        a.seed = derive_seed(7, i, stream::sim);
        SimParams b = a;
        b.probe_power *= 10;
        b.feedback_power *= 10;
        const TrajectoryRecord ra = run_trajectory(g, c.word, zero, a);
        const TrajectoryRecord rb = run_trajectory(g, c.word, zero, b);
        if (ra.events.size() != rb.events.size()) {
            ++mismatches;
            continue;
        }
        for (size_t j = 0; j < ra.events.size(); ++j) {
            const Event &x = ra.events[j];
            const Event &y = rb.events[j];
            mismatches += !(x.kind == y.kind && x.index == y.index && x.new_bit == y.new_bit && y.t == x.t / 10);
        }
        events += ra.events.size();
    }
    return {mismatches == 0, fmt("%zu events over 20 trajectories, %zu differ from (same event, t/10) bitwise",
                                 events, mismatches)};
}

Verdict first_passage() {
    const size_t l = 5;
    const TannerGraph g = isolated_variable(l);
    const size_t samples = 2000;
    double worst = 0.0;
    std::string per_s;
    for (size_t s = 0; s <= l; ++s) {
        SimParams p;
        p.probe_power = 0.0;
        p.feedback_power = 1.0;
        p.gamma = 0.01;
        CircuitState st;
        st.var_latch = {0};
        st.check_latch.assign(l, 1);
        std::fill_n(st.check_latch.begin(), s, Bit{0});
        double sum = 0.0;
        for (size_t i = 0; i < samples; ++i) {
            p.seed = derive_seed(500 + s, i);
            PhotonicSimulator sim(g, st, p);
            sim.advance();
            sum += sim.time();
        }
        const double expected = 1.0 / std::pow(p.gamma, static_cast<double>(s));
        const double rel = std::abs(sum / samples / expected - 1.0);
        worst = std::max(worst, rel);
        per_s += fmt(" s=%zu:%.3f", s, rel);
    }
    return {worst <= 0.10, fmt("%zu samples each, relative error of mean vs 1/(fb*gamma^s):%s (need <= 0.10)",
                               samples, per_s.c_str())};
}

Verdict slh_equivalence(const std::string &cli) {
    const slh::OracleReport rep = slh::verify_fragments_against_ctmc(4, 3, 0.01);
    std::string cli_note = "cli not given";
    bool cli_ok = true;
    if (!cli.empty()) {
        const std::string cmd = "\"" + cli + "\" slh-verify --kvars 4 --lchecks 3 --gamma 0.01 > /dev/null";
        const int rc = std::system(cmd.c_str());
        cli_ok = rc == 0;
        cli_note = cli_ok ? "slh-verify exit 0" : fmt("slh-verify exit status %d", rc);
    }
    return {rep.passed(1e-10) && cli_ok && !cli.empty(),
            fmt("%zu basis configurations, max |rate deviation| %.2e (need <= 1e-10); %s", rep.cases,
                rep.max_deviation, cli_note.c_str())};
}

Verdict slh_health() {
    using namespace slh;
    using namespace slh_test;
    std::mt19937_64 rng(31);
    double unit = 0.0, trace = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const SlhTriple a = random_triple({0}, 3, rng);
        const SlhTriple b = random_triple({1}, 3, rng);
        const SlhTriple c = random_triple({0, 2}, 2, rng);
        unit = std::max({unit, series(b, a).unitarity_defect(), concat(a, c).unitarity_defect(),
                         feedback(series(b, a), trial % 3, (trial + 2) % 3).unitarity_defect(),
                         feedback(concat(a, c), 4, 0).unitarity_defect()});
        const SlhTriple sys = series(b, a);
        const Operator rho = random_density(sys.space(), rng);
        trace = std::max(trace, std::abs(lindblad_rhs(sys, rho).matrix().trace()));
    }
    return {unit <= 1e-10 && trace <= 1e-12,
            fmt("200 random triples: max unitarity defect %.2e (need <= 1e-10), max |tr drho/dt| %.2e (need <= 1e-12)",
                unit, trace)};
}

Verdict classical_decoder() {
    size_t ok = 0;
    const size_t instances = 200;
    try {
        for (uint64_t i = 0; i < instances; ++i) {
            const TannerGraph g = sample_regular_code(1000, 5, 10, derive_seed(900, i, stream::code));
            const Corrupted c = corrupt_fixed_count(Assignment(g.n(), 0), 30, derive_seed(900, i, stream::channel));
            // decode_sequential throws if any flip fails to lower the unsatisfied count.
            ok += decode_sequential(g, c.word).success;
        }
    } catch (const std::logic_error &e) {
        return {false, e.what()};
    }
    const double frac = static_cast<double>(ok) / instances;
    return {frac >= 0.95, fmt("monotone on every flip; success %zu/%zu = %.3f (need >= 0.95)", ok, instances, frac)};
}

Verdict gamma_tradeoff() {
    EnsembleConfig cfg = headline_config();
    cfg.trajectories = 200;
    const EnsembleStats hi = run_ensemble(cfg);
    cfg.params.gamma = 0.001;
    const EnsembleStats lo = run_ensemble(cfg);
    const bool both = hi.p_decode >= 0.9 && lo.p_decode >= 0.9;
    const double ratio = both ? *lo.t_decode_median / *hi.t_decode_median : 0.0;
    return {both && ratio >= 5.0, fmt("30 errors: p(0.01)=%.3f p(0.001)=%.3f; median ratio %.1f (need >= 5)",
                                      hi.p_decode, lo.p_decode, ratio)};
}

Verdict noise_robustness() {
    EnsembleConfig cfg = headline_config();
    cfg.trajectories = 200;
    cfg.params.eta = 1e-4;
    cfg.params.t_max = 1e7;
    cfg.params.event_cap = 5'000'000;
    std::string log;
    for (double p_low : {0.3, 1.0, 3.0}) {
        cfg.params.probe_power = cfg.params.feedback_power = p_low;
        const double lo = run_ensemble(cfg).p_decode;
        cfg.params.probe_power = cfg.params.feedback_power = 100 * p_low;
        const double hi = run_ensemble(cfg).p_decode;
        log += fmt(" P=%g:%.3f->%.3f", p_low, lo, hi);
        if (lo < 0.5 && hi > 0.9) {
            return {true, fmt("eta=1e-4, probe=feedback=P, p_decode at P -> 100P:%s", log.c_str())};
        }
    }
    return {false, fmt("no P with p<0.5 and p(100P)>0.9:%s", log.c_str())};
}

}  // namespace

int main(int argc, char **argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"headline_reproduction", headline_reproduction},
        {"rate_formula_exactness", rate_exactness},
        {"gamma_bound", gamma_bound_value},
        {"time_rescaling_invariance", rescaling_invariance},
        {"first_passage_scaling", first_passage},
        {"slh_oracle_equivalence", [&] { return slh_equivalence(cli); }},
        {"slh_algebra_health", slh_health},
        {"classical_decoder_sanity", classical_decoder},
        {"gamma_tradeoff_direction", gamma_tradeoff},
        {"noise_robustness", noise_robustness},
    };
    int failed = 0;
    for (const auto &[name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %-27s %s\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str());
        std::fflush(stdout);
        failed += !v.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
