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

// Command-line front end: code generation, channel corruption, classical
// decoding, photonic-decoder ensembles and sweeps, the attenuation bound and
// the SLH-vs-jump-process oracle check.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "phldpc/config.hpp"
#include "phldpc/phldpc.hpp"
#include "phldpc/slh_fragments.hpp"

using namespace phldpc;

namespace {

Assignment read_assignment_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParameterError("cannot open assignment file '" + path + "'");
    }
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_assignment(text);
}

void write_text(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw ParameterError("cannot write '" + path + "'");
    }
    out << text;
}

nlohmann::json opt_json(const std::optional<double> &x) { return x ? nlohmann::json(*x) : nlohmann::json(nullptr); }

nlohmann::json stats_json(const EnsembleStats &st) {
    return {{"p_decode", st.p_decode},
            {"n_success", st.n_success},
            {"n_total", st.n_total},
            {"t_decode_median", opt_json(st.t_decode_median)},
            {"t_decode_p05", opt_json(st.t_decode_p05)},
            {"t_decode_p95", opt_json(st.t_decode_p95)},
            {"t_decode_mean", opt_json(st.t_decode_mean)},
            {"decode_rate", opt_json(st.decode_rate)},
            {"decode_energy_rate", opt_json(st.decode_energy_rate)},
            {"input_power", st.input_power},
            {"power_accounting", "n*l*probe_power + n*feedback_power"}};
}

void write_ensemble_outputs(const EnsembleConfig &cfg, const EnsembleStats &st) {
    if (!cfg.output.csv.empty()) {
        CsvAppender(cfg.output.csv).append(cfg, st);
    }
    if (!cfg.output.timeline_csv.empty()) {
        std::ofstream out(cfg.output.timeline_csv);
        if (!out) {
            throw ParameterError("cannot write '" + cfg.output.timeline_csv + "'");
        }
        csv::write_mean_curve(out, st);
    }
    if (!cfg.output.trajectories_csv.empty()) {
        std::ofstream out(cfg.output.trajectories_csv);
        if (!out) {
            throw ParameterError("cannot write '" + cfg.output.trajectories_csv + "'");
        }
        csv::write_trajectories(out, st);
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Photonic expander-LDPC decoder simulator"};
    app.require_subcommand(1);

    // gen-code
    auto *gen = app.add_subcommand("gen-code", "Sample a random regular (l, k) Tanner graph");
    size_t gen_n = 0, gen_l = 0, gen_k = 0;
    uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--n", gen_n, "Block length")->required();
    gen->add_option("--l", gen_l, "Checks per variable")->required();
    gen->add_option("--k", gen_k, "Variables per check")->required();
    gen->add_option("--seed", gen_seed, "RNG seed")->required();
    gen->add_option("--out", gen_out, "Graph file ('-' for stdout)")->required();

    // corrupt
    auto *cor = app.add_subcommand("corrupt", "Corrupt the all-zero codeword (or --codeword) of a code");
    std::string cor_graph, cor_codeword, cor_out = "-";
    std::optional<size_t> cor_count;
    std::optional<double> cor_prob;
    uint64_t cor_seed = 0;
    cor->add_option("--graph", cor_graph, "Graph file")->required();
    auto *count_opt = cor->add_option("--count", cor_count, "Flip exactly this many bits");
    auto *prob_opt = cor->add_option("--prob", cor_prob, "Flip each bit with this probability");
    count_opt->excludes(prob_opt);
    cor->add_option("--seed", cor_seed, "RNG seed")->required();
    cor->add_option("--codeword", cor_codeword, "Transmitted word file (default all-zero)");
    cor->add_option("--out", cor_out, "Output assignment file ('-' for stdout)");

    // decode-flip
    auto *dec = app.add_subcommand("decode-flip", "Sequential bit-flip decoding of an assignment");
    std::string dec_graph, dec_input, dec_out;
    size_t dec_max_flips = std::numeric_limits<size_t>::max();
    dec->add_option("--graph", dec_graph, "Graph file")->required();
    dec->add_option("--input", dec_input, "Assignment file (one line of 0/1)")->required();
    dec->add_option("--max-flips", dec_max_flips, "Flip budget");
    std::string dec_order_name = "most_unsatisfied";
    dec->add_option("--order", dec_order_name, "Selection among eligible variables")
        ->check(CLI::IsMember({"most_unsatisfied", "first_index"}));
    dec->add_option("--out", dec_out, "Write the decoded assignment here");

    // simulate
    auto *sim = app.add_subcommand("simulate", "Run one photonic-decoder ensemble");
    std::string sim_config;
    sim->add_option("--config", sim_config, "JSON run description")->required();

    // sweep
    auto *swp = app.add_subcommand("sweep", "Run a parameter grid of ensembles into a CSV");
    std::string swp_config;
    swp->add_option("--config", swp_config, "JSON run description with a 'sweep' section")->required();

    // trace
    auto *trc = app.add_subcommand("trace", "Re-run one ensemble member with its full event log");
    std::string trc_config, trc_events, trc_timeline;
    size_t trc_index = 0;
    trc->add_option("--config", trc_config, "JSON run description")->required();
    trc->add_option("--index", trc_index, "Trajectory index");
    trc->add_option("--events", trc_events, "Event log output ('t kind index new_bit')");
    trc->add_option("--timeline", trc_timeline, "Timeline CSV output ('t,errors')");

    // bound
    auto *bnd = app.add_subcommand("bound", "Upper bound on the feedback attenuation gamma");
    int bnd_l = 0, bnd_k = 0;
    bnd->add_option("--l", bnd_l, "Checks per variable")->required();
    bnd->add_option("--k", bnd_k, "Variables per check")->required();

    // slh-verify
    auto *ver = app.add_subcommand("slh-verify", "Compare SLH fragment rates with the jump-process rates");
    size_t ver_kvars = 4, ver_lchecks = 3;
    double ver_gamma = 0.01, ver_tol = 1e-10;
    ver->add_option("--kvars", ver_kvars, "Largest parity fragment (variables per check)");
    ver->add_option("--lchecks", ver_lchecks, "Largest feedback fragment (checks per variable)");
    ver->add_option("--gamma", ver_gamma, "Attenuation");
    ver->add_option("--tol", ver_tol, "Maximum allowed absolute deviation");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            const TannerGraph g = sample_regular_code(gen_n, gen_l, gen_k, gen_seed);
            std::ostringstream os;
            write_graph(os, g);
            write_text(gen_out, os.str());
        } else if (*cor) {
            if (!cor_count && !cor_prob) {
                throw ParameterError("corrupt: one of --count or --prob is required");
            }
            const TannerGraph g = load_graph_file(cor_graph);
            const Assignment word = cor_codeword.empty() ? Assignment(g.n(), 0) : read_assignment_file(cor_codeword);
            detail::require(word.size() == g.n(), "corrupt: codeword length does not match the graph");
            const Corrupted c = cor_count ? corrupt_fixed_count(word, *cor_count, cor_seed)
                                          : corrupt_iid(word, *cor_prob, cor_seed);
            write_text(cor_out, format_assignment(c.word) + "\n");
            std::cerr << "flipped " << c.pattern.weight() << " bits\n";
        } else if (*dec) {
            const TannerGraph g = load_graph_file(dec_graph);
            const Assignment a = read_assignment_file(dec_input);
            const FlipOrder dec_order =
                dec_order_name == "first_index" ? FlipOrder::first_index : FlipOrder::most_unsatisfied;
            const DecodeResult r = decode_sequential(g, a, dec_max_flips, dec_order);
            nlohmann::json out = {{"status", std::string(to_string(r.status))},
                                  {"order", std::string(to_string(dec_order))},
                                  {"success", r.success},
                                  {"flips", r.flips},
                                  {"flip_log", r.flip_log},
                                  {"remaining_weight", hamming_distance(r.final, Assignment(g.n(), 0))}};
            std::cout << out.dump(2) << '\n';
            if (!dec_out.empty()) {
                write_text(dec_out, format_assignment(r.final) + "\n");
            }
            return r.success ? 0 : 2;
        } else if (*sim) {
            const EnsembleConfig cfg = ensemble_config_from_json(load_json_file(sim_config));
            const EnsembleStats st = run_ensemble(cfg);
            write_ensemble_outputs(cfg, st);
            std::cout << stats_json(st).dump(2) << '\n';
        } else if (*swp) {
            const nlohmann::json j = load_json_file(swp_config);
            const EnsembleConfig base = ensemble_config_from_json(j);
            const SweepSpec spec = sweep_spec_from_json(j);
            if (base.output.csv.empty()) {
                throw ParameterError("sweep: output.csv is required");
            }
            const auto rows = sweep(base, spec, base.output.csv);
            size_t ran = 0;
            for (const auto &r : rows) {
                ran += r.stats.has_value();
            }
            std::cerr << "sweep: " << rows.size() << " points, " << ran << " run, " << rows.size() - ran
                      << " already in " << base.output.csv << '\n';
        } else if (*trc) {
            const EnsembleConfig cfg = ensemble_config_from_json(load_json_file(trc_config));
            detail::require(trc_index < cfg.trajectories, "trace: index out of range");
            const TrajectoryRecord rec = ensemble_trajectory(cfg, trc_index);
            if (!trc_events.empty()) {
                std::ostringstream os;
                write_event_log(os, rec);
                write_text(trc_events, os.str());
            }
            if (!trc_timeline.empty()) {
                std::ostringstream os;
                write_timeline_csv(os, rec);
                write_text(trc_timeline, os.str());
            }
            nlohmann::json out = {{"outcome", std::string(to_string(rec.outcome))},
                                  {"t_decode", opt_json(rec.t_decode)},
                                  {"t_end", rec.t_end},
                                  {"events", rec.n_events},
                                  {"initial_errors", rec.initial_errors()}};
            std::cerr << out.dump() << '\n';
        } else if (*bnd) {
            std::printf("%.6f\n", gamma_bound(bnd_l, bnd_k));
        } else if (*ver) {
            const slh::OracleReport rep = slh::verify_fragments_against_ctmc(ver_kvars, ver_lchecks, ver_gamma);
            for (const auto &w : rep.worst) {
                std::printf("%-8s size=%zu  max|dev|=%.3e\n", w.fragment.c_str(), w.size, w.max_deviation);
            }
            std::printf("configurations=%zu  max deviation=%.3e  tolerance=%.1e  %s\n", rep.cases, rep.max_deviation,
                        ver_tol, rep.passed(ver_tol) ? "OK" : "FAIL");
            return rep.passed(ver_tol) ? 0 : 1;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
