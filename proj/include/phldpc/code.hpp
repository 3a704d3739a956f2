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
#include <cstddef>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "phldpc/errors.hpp"
#include "phldpc/rng.hpp"

namespace phldpc {

using Bit = uint8_t;

/// A length-n binary vector; entries are 0 or 1.
using Assignment = std::vector<Bit>;

/// Sparse bipartite graph of n variables and m checks, each variable in
/// exactly l checks and each check over exactly k variables. Immutable once
/// built; construction validates every structural invariant.
class TannerGraph {
  public:
    TannerGraph() = default;

    /// Builds the graph from per-check variable lists. Throws ParameterError
    /// if degrees are irregular, an index is out of range, or a (variable,
    /// check) pair repeats.
    static TannerGraph from_checks(size_t n, size_t l, size_t k,
                                   std::vector<std::vector<uint32_t>> check_to_vars) {
        detail::require(n > 0 && l > 0 && k > 0, "TannerGraph: n, l, k must be positive");
        detail::require((n * l) % k == 0, "TannerGraph: n*l must be divisible by k");
        detail::require(check_to_vars.size() == n * l / k, "TannerGraph: expected m = n*l/k checks");
        TannerGraph g;
        g.n_ = n;
        g.l_ = l;
        g.k_ = k;
        g.var_to_checks_.assign(n, {});
        for (size_t c = 0; c < check_to_vars.size(); ++c) {
            auto &vars = check_to_vars[c];
            detail::require(vars.size() == k, "TannerGraph: check " + std::to_string(c) + " has degree " +
                                                  std::to_string(vars.size()) + ", expected " + std::to_string(k));
            std::sort(vars.begin(), vars.end());
            detail::require(std::adjacent_find(vars.begin(), vars.end()) == vars.end(),
                            "TannerGraph: repeated variable in check " + std::to_string(c));
            for (uint32_t v : vars) {
                detail::require(v < n, "TannerGraph: variable index out of range in check " + std::to_string(c));
                g.var_to_checks_[v].push_back(static_cast<uint32_t>(c));
            }
        }
        for (size_t v = 0; v < n; ++v) {
            detail::require(g.var_to_checks_[v].size() == l, "TannerGraph: variable " + std::to_string(v) +
                                                                 " has degree " +
                                                                 std::to_string(g.var_to_checks_[v].size()) +
                                                                 ", expected " + std::to_string(l));
        }
        g.check_to_vars_ = std::move(check_to_vars);
        return g;
    }

    size_t n() const { return n_; }
    size_t m() const { return check_to_vars_.size(); }
    size_t l() const { return l_; }
    size_t k() const { return k_; }

    std::span<const uint32_t> checks_of(size_t v) const { return var_to_checks_[v]; }
    std::span<const uint32_t> vars_of(size_t c) const { return check_to_vars_[c]; }

    const std::vector<std::vector<uint32_t>> &var_to_checks() const { return var_to_checks_; }
    const std::vector<std::vector<uint32_t>> &check_to_vars() const { return check_to_vars_; }

    bool operator==(const TannerGraph &) const = default;

  private:
    size_t n_ = 0;
    size_t l_ = 0;
    size_t k_ = 0;
    std::vector<std::vector<uint32_t>> var_to_checks_;
    std::vector<std::vector<uint32_t>> check_to_vars_;
};

/// Samples a random simple (l, k)-biregular bipartite graph on n variables.
///
/// Variable stubs are dealt onto check slots by a uniform shuffle
/// (configuration model). Repeated (variable, check) pairs are removed by
/// random double-edge switches that never introduce a new repeat; if a round
/// cannot be repaired the whole pairing is redrawn, up to `max_rounds` times.
inline TannerGraph sample_regular_code(size_t n, size_t l, size_t k, uint64_t seed, size_t max_rounds = 1000) {
    detail::require(l >= 1, "sample_regular_code: l must be >= 1");
    detail::require(k >= 1 && n >= k, "sample_regular_code: need n >= k >= 1");
    detail::require((n * l) % k == 0, "sample_regular_code: n*l must be divisible by k");
    const size_t m = n * l / k;
    detail::require(l <= m, "sample_regular_code: l exceeds the number of checks; no simple graph exists");

    const size_t edges = n * l;
    Rng rng(seed);
    std::vector<uint32_t> slot_var(edges);
    for (size_t e = 0; e < edges; ++e) {
        slot_var[e] = static_cast<uint32_t>(e / l);
    }

    auto in_check = [&](size_t c, uint32_t v) {
        for (size_t s = c * k; s < (c + 1) * k; ++s) {
            if (slot_var[s] == v) {
                return true;
            }
        }
        return false;
    };
    // Index of a slot whose variable also occupies an earlier slot of the same check.
    auto find_repeat = [&](size_t from) -> size_t {
        for (size_t s = from; s < edges; ++s) {
            const size_t c = s / k;
            for (size_t t = c * k; t < s; ++t) {
                if (slot_var[t] == slot_var[s]) {
                    return s;
                }
            }
        }
        return edges;
    };

    std::uniform_int_distribution<size_t> pick_slot(0, edges - 1);
    const size_t switch_budget = 100 * edges + 1000;
    for (size_t round = 0; round < max_rounds; ++round) {
        std::shuffle(slot_var.begin(), slot_var.end(), rng);
        size_t switches = 0;
        size_t bad = find_repeat(0);
        while (bad < edges && switches < switch_budget) {
            ++switches;
            const size_t other = pick_slot(rng);
            const size_t c_bad = bad / k;
            const size_t c_other = other / k;
            if (c_bad == c_other) {
                continue;
            }
            const uint32_t v = slot_var[bad];
            const uint32_t w = slot_var[other];
            if (in_check(c_bad, w) || in_check(c_other, v)) {
                continue;
            }
            std::swap(slot_var[bad], slot_var[other]);
            bad = find_repeat(0);
        }
        if (bad < edges) {
            continue;
        }
        std::vector<std::vector<uint32_t>> checks(m);
        for (size_t c = 0; c < m; ++c) {
            checks[c].assign(slot_var.begin() + static_cast<std::ptrdiff_t>(c * k),
                             slot_var.begin() + static_cast<std::ptrdiff_t>((c + 1) * k));
        }
        return TannerGraph::from_checks(n, l, k, std::move(checks));
    }
    throw ConstructionError("sample_regular_code: no simple graph after " + std::to_string(max_rounds) + " rounds");
}

/// Parity of each check over `a`; all-zero iff `a` is a codeword.
inline std::vector<Bit> syndrome(const TannerGraph &graph, std::span<const Bit> a) {
    detail::require(a.size() == graph.n(), "syndrome: assignment length does not match n");
    std::vector<Bit> s(graph.m(), 0);
    for (size_t c = 0; c < graph.m(); ++c) {
        Bit p = 0;
        for (uint32_t v : graph.vars_of(c)) {
            p ^= a[v] & 1;
        }
        s[c] = p;
    }
    return s;
}

inline bool is_codeword(const TannerGraph &graph, std::span<const Bit> a) {
    const auto s = syndrome(graph, a);
    return std::all_of(s.begin(), s.end(), [](Bit b) { return b == 0; });
}

struct Rational {
    int64_t num = 0;
    int64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational &) const = default;
};

/// Design rate (k - l) / k of a regular (l, k) code, in lowest terms.
inline Rational code_rate(int64_t l, int64_t k) {
    detail::require(l >= 1 && l < k, "code_rate: need 1 <= l < k for a positive rate");
    const int64_t num = k - l;
    const int64_t g = std::gcd(num, k);
    return {num / g, k / g};
}

struct ExpansionReport {
    /// min_ratio[s - 1] = min over |V| = s of |N(V)| / |V|.
    std::vector<double> min_ratio;
    /// A subset attaining each minimum.
    std::vector<std::vector<uint32_t>> witness;
    size_t subsets_examined = 0;
};

namespace detail {
inline double binomial(size_t n, size_t s) {
    double r = 1.0;
    for (size_t i = 1; i <= s; ++i) {
        r = r * static_cast<double>(n - s + i) / static_cast<double>(i);
    }
    return r;
}
}  // namespace detail

/// Exact vertex expansion of all variable subsets up to `max_subset_size`, by
/// exhaustive enumeration. Refuses (BudgetError) rather than approximating
/// when the number of subsets exceeds `budget`.
inline ExpansionReport expansion_audit(const TannerGraph &graph, size_t max_subset_size, size_t budget = 5'000'000) {
    const size_t n = graph.n();
    detail::require(max_subset_size >= 1 && max_subset_size <= n, "expansion_audit: subset size out of range");
    double total = 0;
    for (size_t s = 1; s <= max_subset_size; ++s) {
        total += detail::binomial(n, s);
    }
    if (total > static_cast<double>(budget)) {
        throw BudgetError("expansion_audit: " + std::to_string(static_cast<uint64_t>(total)) +
                          " subsets exceed budget " + std::to_string(budget));
    }

    ExpansionReport report;
    std::vector<uint32_t> hits(graph.m(), 0);
    for (size_t s = 1; s <= max_subset_size; ++s) {
        std::vector<uint32_t> idx(s);
        std::iota(idx.begin(), idx.end(), 0u);
        double best = static_cast<double>(graph.m() + 1);
        std::vector<uint32_t> best_set;
        while (true) {
            size_t neighbors = 0;
            for (uint32_t v : idx) {
                for (uint32_t c : graph.checks_of(v)) {
                    if (hits[c]++ == 0) {
                        ++neighbors;
                    }
                }
            }
            for (uint32_t v : idx) {
                for (uint32_t c : graph.checks_of(v)) {
                    hits[c] = 0;
                }
            }
            ++report.subsets_examined;
            const double ratio = static_cast<double>(neighbors) / static_cast<double>(s);
            if (ratio < best) {
                best = ratio;
                best_set = idx;
            }
            // Next combination in lexicographic order.
            size_t i = s;
            while (i > 0 && idx[i - 1] == n - s + i - 1) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++idx[i - 1];
            for (size_t j = i; j < s; ++j) {
                idx[j] = idx[j - 1] + 1;
            }
        }
        report.min_ratio.push_back(best);
        report.witness.push_back(std::move(best_set));
    }
    return report;
}

// Graph file: header "n m l k", then m lines of k space-separated 0-based
// variable indices.

inline void write_graph(std::ostream &out, const TannerGraph &graph) {
    out << graph.n() << ' ' << graph.m() << ' ' << graph.l() << ' ' << graph.k() << '\n';
    for (size_t c = 0; c < graph.m(); ++c) {
        const auto vars = graph.vars_of(c);
        for (size_t i = 0; i < vars.size(); ++i) {
            out << (i ? " " : "") << vars[i];
        }
        out << '\n';
    }
}

inline TannerGraph read_graph(std::istream &in) {
    size_t n = 0, m = 0, l = 0, k = 0;
    std::string line;
    if (!std::getline(in, line)) {
        throw FormatError("graph file: missing header");
    }
    std::istringstream header(line);
    if (!(header >> n >> m >> l >> k)) {
        throw FormatError("graph file: header must be 'n m l k'");
    }
    std::vector<std::vector<uint32_t>> checks;
    checks.reserve(m);
    for (size_t c = 0; c < m; ++c) {
        if (!std::getline(in, line)) {
            throw FormatError("graph file: expected " + std::to_string(m) + " check lines, got " + std::to_string(c));
        }
        std::istringstream row(line);
        std::vector<uint32_t> vars;
        int64_t v = 0;
        while (row >> v) {
            if (v < 0) {
                throw FormatError("graph file: negative index on check line " + std::to_string(c));
            }
            vars.push_back(static_cast<uint32_t>(v));
        }
        if (!row.eof()) {
            throw FormatError("graph file: non-integer token on check line " + std::to_string(c));
        }
        checks.push_back(std::move(vars));
    }
    if (l == 0 || k == 0 || (n * l) % k != 0 || n * l / k != m) {
        throw FormatError("graph file: header violates n*l = m*k");
    }
    try {
        return TannerGraph::from_checks(n, l, k, std::move(checks));
    } catch (const ParameterError &e) {
        throw FormatError(std::string("graph file: ") + e.what());
    }
}

// Assignment text form: one line of '0'/'1' characters.

inline std::string format_assignment(std::span<const Bit> a) {
    std::string s(a.size(), '0');
    for (size_t i = 0; i < a.size(); ++i) {
        s[i] = a[i] ? '1' : '0';
    }
    return s;
}

inline Assignment parse_assignment(std::string_view text) {
    Assignment a;
    for (char ch : text) {
        if (ch == '0' || ch == '1') {
            a.push_back(static_cast<Bit>(ch - '0'));
        } else if (ch != ' ' && ch != '\n' && ch != '\r' && ch != '\t') {
            throw FormatError(std::string("assignment: unexpected character '") + ch + "'");
        }
    }
    return a;
}

inline size_t hamming_distance(std::span<const Bit> a, std::span<const Bit> b) {
    detail::require(a.size() == b.size(), "hamming_distance: length mismatch");
    size_t d = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        d += (a[i] != b[i]);
    }
    return d;
}

}  // namespace phldpc
