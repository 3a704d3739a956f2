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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "phldpc/slh.hpp"
#include "phldpc/slh_fragments.hpp"
#include "slh_random.hpp"

using namespace phldpc::slh;
using phldpc::BudgetError;
using phldpc::CompositionError;
using phldpc::ParameterError;
using namespace phldpc::slh_test;

namespace {

double max_abs(const Matrix &m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

double distance(const SlhTriple &a, const SlhTriple &b) {
    EXPECT_EQ(a.space(), b.space());
    EXPECT_EQ(a.n_port(), b.n_port());
    return std::max({max_abs(a.S_blocks() - b.S_blocks()), max_abs(a.L_blocks() - b.L_blocks()),
                     max_abs(a.H_matrix() - b.H_matrix())});
}

}  // namespace

TEST(SlhOperator, ExtensionPlacesFactorsByLabel) {
    // Label 0 is the most significant bit.
    const Operator x = sigma10(3);
    const Operator y = x.extended({1, 3});
    // |b1 b3>: sigma10 on label 3 maps |00> -> |01> (index 0 -> 1) and |10> -> |11> (2 -> 3).
    EXPECT_EQ(y.matrix()(1, 0), Complex(1.0));
    EXPECT_EQ(y.matrix()(3, 2), Complex(1.0));
    EXPECT_DOUBLE_EQ(y.matrix().cwiseAbs().sum(), 2.0);
    const Operator prod = pi1(0) * pi0(1);
    EXPECT_EQ(prod.space(), (Space{0, 1}));
    EXPECT_EQ(prod.matrix()(2, 2), Complex(1.0));
    EXPECT_DOUBLE_EQ(prod.matrix().cwiseAbs().sum(), 1.0);
    EXPECT_THROW(Operator({1, 0}, Matrix::Identity(4, 4)), ParameterError);
}

TEST(SlhSeries, WeylDisplacementsAdd) {
    const SlhTriple g = series(make_weyl({Complex(2.0)}), make_weyl({Complex(0.5)}));
    EXPECT_NEAR(std::abs(g.L_blocks()(0, 0) - Complex(2.5)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(g.S_blocks()(0, 0) - Complex(1.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(g.H_matrix()(0, 0)), 0.0, 1e-15);
}

TEST(SlhSeries, BeamsplitterMixesDrives) {
    const Complex a(1.0, 0.5), b(-0.3, 2.0);
    const SlhTriple g = series(make_beamsplitter(0.5), make_weyl({a, b}));
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(g.L_blocks()(0, 0) - (a + b) * r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(g.L_blocks()(1, 0) - (-a + b) * r), 0.0, 1e-15);
}

TEST(SlhSeries, IdentityIsNeutral) {
    std::mt19937_64 rng(1);
    const SlhTriple g = random_triple({0, 2}, 3, rng);
    const SlhTriple id({}, 3);
    EXPECT_LT(distance(series(id, g), g), 1e-14);
    EXPECT_LT(distance(series(g, id), g), 1e-14);
    EXPECT_THROW(series(identity_system(2), g), CompositionError);
}

TEST(SlhSeries, Associative) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        const SlhTriple a = random_triple({0}, 2, rng);
        const SlhTriple b = random_triple({1}, 2, rng);
        const SlhTriple c = random_triple({0, 2}, 2, rng);
        EXPECT_LT(distance(series(c, series(b, a)), series(series(c, b), a)), 1e-10);
    }
}

TEST(SlhConcat, BlockStructure) {
    const SlhTriple two = concat(identity_system(1), identity_system(1));
    EXPECT_LT(distance(two, identity_system(2)), 1e-15);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        const SlhTriple a = random_triple({0}, 1 + trial % 3, rng);
        const SlhTriple b = random_triple({1}, 2, rng);
        const SlhTriple c = concat(a, b);
        EXPECT_EQ(c.n_port(), a.n_port() + b.n_port());
        EXPECT_EQ(c.space(), (Space{0, 1}));
        // G1's ports come first.
        EXPECT_LT(max_abs(c.S(0, 0).matrix() - a.S(0, 0).extended({0, 1}).matrix()), 1e-15);
        EXPECT_LT(max_abs(c.L(a.n_port()).matrix() - b.L(0).extended({0, 1}).matrix()), 1e-15);
        EXPECT_LT(max_abs(c.S(0, a.n_port()).matrix()), 1e-15);
    }
}

TEST(SlhFeedback, BeamsplitterLoop) {
    const SlhTriple g = feedback(make_beamsplitter(0.5), 1, 1);
    ASSERT_EQ(g.n_port(), 1u);
    EXPECT_NEAR(std::abs(g.S_blocks()(0, 0) - Complex(-1.0)), 0.0, 1e-12);
}

TEST(SlhFeedback, SingularLoopIsRejected) {
    EXPECT_THROW(feedback(identity_system(2), 0, 0), CompositionError);
    EXPECT_THROW(feedback(identity_system(2), 2, 0), CompositionError);
}

TEST(SlhHealth, UnitarityPreservedByProducts) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const SlhTriple a = random_triple({0}, 3, rng);
        const SlhTriple b = random_triple({1}, 3, rng);
        EXPECT_LT(series(b, a).unitarity_defect(), 1e-10);
        EXPECT_LT(concat(a, b).unitarity_defect(), 1e-10);
        const SlhTriple f = feedback(series(b, a), trial % 3, (trial + 1) % 3);
        EXPECT_LT(f.unitarity_defect(), 1e-10);
        EXPECT_LT(f.hermiticity_defect(), 1e-10);
        EXPECT_LT(feedback(f, 0, 1).unitarity_defect(), 1e-10);
    }
}

TEST(SlhHealth, LindbladIsTraceFreeAndHermitian) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Space space = trial % 2 ? Space{0, 1} : Space{0, 1, 2};
        const SlhTriple g = random_triple(space, 2, rng);
        const Operator rho = random_density(space, rng);
        const Matrix r = lindblad_rhs(g, rho).matrix();
        EXPECT_LT(std::abs(r.trace()), 1e-12);
        EXPECT_LT(max_abs(r - r.adjoint()), 1e-12);
    }
    EXPECT_THROW(lindblad_rhs(random_triple({0}, 1, rng), random_density({1}, rng)), ParameterError);
}

TEST(SlhHealth, AmplitudeDecay) {
    const SlhTriple g({{Operator::identity({0})}}, {sigma01(0)}, Operator::zero({0}));
    std::mt19937_64 rng(6);
    const Operator rho = random_density({0}, rng);
    const Matrix p1 = pi1(0).matrix();
    const Complex rate = (p1 * lindblad_rhs(g, rho).matrix()).trace();
    const Complex pop = (p1 * rho.matrix()).trace();
    EXPECT_LT(std::abs(rate + pop), 1e-14);
}

TEST(SlhComponents, Beamsplitter) {
    EXPECT_LT(distance(make_beamsplitter(1.0), identity_system(2)), 1e-15);
    const SlhTriple bs = make_beamsplitter(0.01);
    EXPECT_NEAR(std::norm(bs.S_blocks()(0, 0)), 0.01, 1e-15);
    EXPECT_NEAR(std::norm(bs.S_blocks()(1, 0)), 0.99, 1e-15);
    const double r = 1.0 / std::sqrt(2.0);
    const Matrix half = make_beamsplitter(0.5).S_blocks();
    EXPECT_NEAR(std::abs(half(0, 1) - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(half(1, 0) + r), 0.0, 1e-15);
    EXPECT_THROW(make_beamsplitter(0.0), ParameterError);
    EXPECT_THROW(make_beamsplitter(1.5), ParameterError);
}

TEST(SlhComponents, Weyl) {
    EXPECT_EQ(make_weyl(std::span<const Complex>{}).n_port(), 0u);
    const SlhTriple w = make_weyl({Complex(2.0), Complex(0.0)});
    EXPECT_EQ(w.L_blocks()(0, 0), Complex(2.0));
    EXPECT_EQ(w.L_blocks()(1, 0), Complex(0.0));
    const auto rates = jump_rates(w, Vector::Ones(1));
    EXPECT_DOUBLE_EQ(rates[0], 4.0);
    EXPECT_DOUBLE_EQ(rates[1], 0.0);
}

TEST(SlhComponents, LatchBlocksAsPrinted) {
    const SlhTriple q = make_latch(0);
    ASSERT_EQ(q.n_port(), 4u);
    EXPECT_LT(q.unitarity_defect(), 1e-12);
    EXPECT_LT(max_abs(q.S(0, 0).matrix() - pi0(0).matrix()), 1e-15);
    EXPECT_LT(max_abs(q.S(0, 1).matrix() + sigma10(0).matrix()), 1e-15);
    EXPECT_LT(max_abs(q.S(1, 0).matrix() + sigma01(0).matrix()), 1e-15);
    EXPECT_LT(max_abs(q.S(1, 1).matrix() - pi1(0).matrix()), 1e-15);
    EXPECT_LT(max_abs(q.S(2, 2).matrix() - pi0(0).matrix()), 1e-15);
    EXPECT_LT(max_abs(q.S(2, 3).matrix() + pi1(0).matrix()), 1e-15);
    EXPECT_LT(max_abs(q.S(0, 2).matrix()), 1e-15);
}

TEST(SlhComponents, LatchRoutingDependsOnState) {
    // Drive in1 only: latch |0> passes it to out1, latch |1> to out2.
    const SlhTriple g = series(make_latch_in_out(0), make_weyl({Complex(1.5), Complex(0.0)}));
    const auto r0 = jump_rates(g, basis_state(g, 0));
    const auto r1 = jump_rates(g, basis_state(g, 1));
    EXPECT_NEAR(r0[0], 2.25, 1e-14);
    EXPECT_NEAR(r0[1], 0.0, 1e-14);
    EXPECT_NEAR(r1[0], 0.0, 1e-14);
    EXPECT_NEAR(r1[1], 2.25, 1e-14);
}

TEST(SlhComponents, SetDriveTogglesTowardOne) {
    const Complex alpha(0.0, 1.2);
    const SlhTriple g = series(make_latch_set_reset(0), make_weyl({Complex(0.0), alpha}));
    EXPECT_NEAR(toggle_rate(g, 0, 0), std::norm(alpha), 1e-14);
    EXPECT_NEAR(toggle_rate(g, 1, 0), 0.0, 1e-14);
    const SlhTriple h = series(make_latch_set_reset(0), make_weyl({alpha, Complex(0.0)}));
    EXPECT_NEAR(toggle_rate(h, 1, 0), std::norm(alpha), 1e-14);
    EXPECT_NEAR(toggle_rate(h, 0, 0), 0.0, 1e-14);
}

TEST(SlhFragments, ParitySelectsSetOrReset) {
    const Complex alpha(1.3, 0.0);
    const double power = std::norm(alpha);
    for (size_t k = 1; k <= 4; ++k) {
        const SlhTriple g = build_parity_fragment(k, alpha);
        EXPECT_LT(g.unitarity_defect(), 1e-12);
        std::vector<int> labels(g.space().begin(), g.space().end());
        for (size_t idx = 0; idx < g.dim(); ++idx) {
            int parity = 0;
            for (size_t v = 0; v < k; ++v) {
                parity ^= label_bit(g.space(), static_cast<int>(v), idx);
            }
            const int check = static_cast<int>(k);
            EXPECT_NEAR(rate_into(g, idx, check, parity), power, 1e-12);
            EXPECT_NEAR(rate_into(g, idx, check, parity ^ 1), 0.0, 1e-12);
            // Variables are never disturbed by the probe.
            for (size_t v = 0; v < k; ++v) {
                EXPECT_NEAR(toggle_rate(g, idx, static_cast<int>(v)), 0.0, 1e-12);
            }
            const auto rates = jump_rates(g, basis_state(g, idx));
            EXPECT_NEAR(rates[0] + rates[1], power, 1e-12);
            EXPECT_NEAR(std::min(rates[0], rates[1]), 0.0, 1e-12);
        }
    }
}

TEST(SlhFragments, ParityExamples) {
    const SlhTriple one = build_parity_fragment(1, 2.0);
    // variable |0>, check |1>: the reset drive resets the check.
    EXPECT_NEAR(toggle_rate(one, basis_index(one.space(), std::vector<int>{0, 1}, std::vector<int>{0, 1}), 1), 4.0,
                1e-12);
    const SlhTriple two = build_parity_fragment(2, 2.0);
    const size_t odd = basis_index(two.space(), std::vector<int>{0, 1, 2}, std::vector<int>{0, 1, 0});
    EXPECT_NEAR(rate_into(two, odd, 2, 1), 4.0, 1e-12);
    EXPECT_NEAR(rate_into(two, odd, 2, 0), 0.0, 1e-12);
}

TEST(SlhFragments, FeedbackAttenuatesPerSatisfiedCheck) {
    const double gamma = 0.01;
    const Complex beta(0.0, 1.7);
    const double power = std::norm(beta);
    const SlhTriple one = build_feedback_fragment(1, beta, gamma);
    for (int var : {0, 1}) {
        EXPECT_NEAR(toggle_rate(one, basis_index(one.space(), std::vector<int>{0, 1}, std::vector<int>{0, var}), 1),
                    gamma * power, 1e-12);
        EXPECT_NEAR(toggle_rate(one, basis_index(one.space(), std::vector<int>{0, 1}, std::vector<int>{1, var}), 1),
                    power, 1e-12);
    }
    const SlhTriple three = build_feedback_fragment(3, beta, gamma);
    EXPECT_LT(three.unitarity_defect(), 1e-10);
    const size_t all_sat = basis_index(three.space(), std::vector<int>{0, 1, 2, 3}, std::vector<int>{0, 0, 0, 1});
    EXPECT_NEAR(toggle_rate(three, all_sat, 3), gamma * gamma * gamma * power, 1e-12);
    // Check latches are never disturbed by the feedback beam.
    for (int c = 0; c < 3; ++c) {
        EXPECT_NEAR(toggle_rate(three, all_sat, c), 0.0, 1e-12);
    }
    const SlhTriple dark = build_feedback_fragment(2, 0.0, gamma);
    for (size_t idx = 0; idx < dark.dim(); ++idx) {
        for (double r : jump_rates(dark, basis_state(dark, idx))) {
            EXPECT_EQ(r, 0.0);
        }
    }
}

TEST(SlhFragments, BudgetIsEnforced) {
    EXPECT_THROW(build_parity_fragment(8, 1.0), BudgetError);
    EXPECT_THROW(build_feedback_fragment(8, 1.0, 0.1), BudgetError);
    EXPECT_NO_THROW(build_parity_fragment(3, 1.0, 4));
    EXPECT_THROW(build_parity_fragment(4, 1.0, 4), BudgetError);
}

TEST(SlhFragments, OracleAgreesWithJumpProcess) {
    for (double gamma : {0.01, 0.3}) {
        const OracleReport rep = verify_fragments_against_ctmc(4, 3, gamma);
        EXPECT_TRUE(rep.passed(1e-10)) << rep.max_deviation;
        EXPECT_EQ(rep.cases, (4u + 8u + 16u + 32u) + (4u + 8u + 16u));
    }
}
