// Copyright 2026 The NLA Simulator Authors
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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "nla/detectors.hpp"
#include "nla/hilbert.hpp"
#include "oracles.hpp"

using namespace nla;
using namespace nla::detectors;

namespace {

const DetectorModel kLab{0.85, 0.015};
const ModeRegister kPair({"I", "A"});
const ModeRegister kCluster({"I", "E", "A", "F"});

// Correct-herald probabilities over (I, A) for the one-way cluster state,
// written out from the single-detector response numbers.
std::array<double, 4> herald_oracle(double a2, double g, double t, double eta, double mu) {
    const double b2 = 1 - a2, c = eta + (1 - eta) * mu;
    return {(1 - mu) * (1 - mu) * (1 - t) * (a2 + b2 * (1 - g)), (1 - mu) * c * t * (a2 + b2 * (1 - g)),
            (1 - mu) * c * b2 * g * (1 - t), c * c * b2 * g * t};
}

PureState cluster(double a2, double g, double t) {
    return PureState(kCluster, oracle::oneway_state(std::sqrt(a2), std::sqrt(1 - a2), g, t));
}

}  // namespace

TEST(OnOff, ideal_number_basis) {
    OnOffPair d = ideal_onoff();
    EXPECT_NEAR(d.off.matrix()(0, 0).real(), 1.0, 1e-15);
    EXPECT_NEAR(d.on.matrix()(1, 1).real(), 1.0, 1e-15);
    EXPECT_LT(max_abs_diff(d.off.matrix() + d.on.matrix(), Matrix::Identity(2, 2)), 1e-15);
}

TEST(OnOff, qnd_dark_counts) {
    OnOffPair d = qnd_onoff({1.0, 0.1});
    Vector plus = oracle::ket('+'), minus = oracle::ket('-');
    EXPECT_NEAR(plus.dot(d.off.matrix() * plus).real(), 0.9, 1e-15);
    EXPECT_NEAR(plus.dot(d.on.matrix() * plus).real(), 0.1, 1e-15);
    EXPECT_NEAR(minus.dot(d.on.matrix() * minus).real(), 1.0, 1e-15);
    EXPECT_LT(max_abs_diff(d.off.matrix() + d.on.matrix(), Matrix::Identity(2, 2)), 1e-15);
}

TEST(Response, efficiency_sets_click_rate) {
    Response r = response_matrix({0.85, 0.0}, DetectionBasis::Diagonal);
    EXPECT_NEAR(r[1][1], 0.85, 1e-15);
    EXPECT_NEAR(r[1][0], 0.15, 1e-15);
    EXPECT_NEAR(r[0][0], 1.0, 1e-15);
}

TEST(Response, rows_are_stochastic) {
    for (auto basis : {DetectionBasis::Diagonal, DetectionBasis::Number}) {
        for (double eta : {0.0, 0.5, 1.0}) {
            for (double mu : {0.0, 0.015, 0.3}) {
                Response r = response_matrix({eta, mu}, basis);
                EXPECT_NEAR(r[0][0] + r[0][1], 1.0, 1e-15);
                EXPECT_NEAR(r[1][0] + r[1][1], 1.0, 1e-15);
                EXPECT_NEAR(r[1][1], eta + (1 - eta) * mu, 1e-15);
                EXPECT_NEAR(r[0][1], mu, 1e-15);
            }
        }
    }
}

TEST(Response, rejects_bad_parameters) {
    EXPECT_THROW(response_matrix({1.1, 0.0}, DetectionBasis::Diagonal), DomainError);
    EXPECT_THROW(response_matrix({0.5, -0.1}, DetectionBasis::Number), DomainError);
}

TEST(JointObservables, resolve_identity) {
    for (auto basis : {DetectionBasis::Diagonal, DetectionBasis::Number}) {
        for (const auto& [d1, d2] : {std::pair{DetectorModel::ideal(), DetectorModel::ideal()},
                                     std::pair{kLab, DetectorModel{0.5, 0.2}}}) {
            JointObservables obs = joint_observables(d1, d2, basis);
            Matrix sum = Matrix::Zero(4, 4), patterns = Matrix::Zero(4, 4);
            for (const auto& o : obs) {
                sum += o.element.matrix();
                patterns += o.pattern.matrix();
            }
            EXPECT_LT(max_abs_diff(sum, Matrix::Identity(4, 4)), 1e-12);
            EXPECT_LT(max_abs_diff(patterns, Matrix::Identity(4, 4)), 1e-12);
        }
    }
}

TEST(JointObservables, diagonal_pattern_kets) {
    JointObservables obs = joint_observables(DetectorModel::ideal(), DetectorModel::ideal());
    Vector pp = oracle::product("++"), pm = oracle::product("+-");
    EXPECT_NEAR(pp.dot(obs[0].element.matrix() * pp).real(), 1.0, 1e-12);
    EXPECT_NEAR(pm.dot(obs[1].element.matrix() * pm).real(), 1.0, 1e-12);
    EXPECT_NEAR(pm.dot(obs[0].element.matrix() * pm).real(), 0.0, 1e-12);
}

TEST(OutcomeProbabilities, product_plus_state) {
    PureState s(kPair, oracle::product("++"));
    OutcomeDistribution d = outcome_probabilities(s, {"I", "A"}, joint_observables({}, {}));
    EXPECT_NEAR(d.outcomes[0].registered, 1.0, 1e-12);
    EXPECT_FALSE(d.outcomes[3].state.has_value());
    PureState z(kPair, oracle::product("00"));
    OutcomeDistribution e = outcome_probabilities(z, {"I", "A"}, joint_observables({}, {}));
    for (const auto& o : e.outcomes) EXPECT_NEAR(o.registered, 0.25, 1e-15);
}

TEST(OutcomeProbabilities, balanced_cluster) {
    OutcomeDistribution d = outcome_probabilities(cluster(0.0, 0.5, 0.5), {"I", "A"}, joint_observables({}, {}));
    for (const auto& o : d.outcomes) {
        EXPECT_NEAR(o.pattern, 0.25, 1e-15);
        EXPECT_NEAR(o.heralded, 0.25, 1e-15);
        ASSERT_TRUE(o.state.has_value());
        EXPECT_NEAR(o.state->norm_squared(), 1.0, 1e-12);
    }
}

TEST(OutcomeProbabilities, lab_detectors_both_click) {
    OutcomeDistribution d = outcome_probabilities(cluster(0.0, 0.5, 0.5), {"I", "A"}, joint_observables(kLab, kLab));
    EXPECT_NEAR(d.outcomes[3].heralded, 0.181582515625, 1e-12);
    EXPECT_NEAR(d.total_registered(), 1.0, 1e-12);
    EXPECT_LT(d.total_heralded(), 1.0);
}

TEST(OutcomeProbabilities, grid_against_oracle) {
    for (double a2 : {0.0, 0.2, 0.5, 0.8, 1.0}) {
        for (double g : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                for (const auto& det : {DetectorModel::ideal(), kLab, DetectorModel{0.5, 0.015}}) {
                    OutcomeDistribution d =
                        outcome_probabilities(cluster(a2, g, t), {"I", "A"}, joint_observables(det, det));
                    const auto h = herald_oracle(a2, g, t, det.eta, det.mu);
                    EXPECT_NEAR(d.total_registered(), 1.0, 1e-12);
                    EXPECT_NEAR(d.total_pattern(), 1.0, 1e-12);
                    for (std::size_t l = 0; l < 4; ++l) EXPECT_NEAR(d.outcomes[l].heralded, h[l], 1e-12);
                }
            }
        }
    }
}

TEST(OutcomeProbabilities, both_click_grows_with_efficiency) {
    double last = -1.0;
    for (double eta : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}) {
        const DetectorModel det{eta, 0.015};
        OutcomeDistribution d = outcome_probabilities(cluster(0.3, 0.6, 0.4), {"I", "A"}, joint_observables(det, det));
        EXPECT_GT(d.outcomes[3].heralded, last);
        last = d.outcomes[3].heralded;
    }
}

TEST(OutcomeProbabilities, needs_two_modes) {
    PureState s(kPair, oracle::product("++"));
    EXPECT_THROW(outcome_probabilities(s, {"I"}, joint_observables({}, {})), ArityMismatchError);
}

TEST(Inefficiency, maps_click_towards_idle) {
    const double eta = 0.64;
    Matrix m = inefficiency_map({eta, 0.0}, DetectionBasis::Number).matrix();
    Vector out = m * oracle::ket('1');
    EXPECT_NEAR(out(1).real(), 0.8, 1e-15);
    EXPECT_NEAR(out(0).real(), 0.6, 1e-15);
    EXPECT_LT(oracle::max_diff(m * oracle::ket('0'), oracle::ket('0')), 1e-15);
}
