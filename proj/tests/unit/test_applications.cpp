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

#include <gtest/gtest.h>

#include "nla/applications.hpp"
#include "nla/hilbert.hpp"
#include "oracles.hpp"

using namespace nla;
using namespace nla::applications;

namespace {

const DetectorModel kLab{0.85, 0.015};

// Mean photon number giving a chosen lambda.
TmsvParams from_lambda(double lambda) {
    const double l2 = lambda * lambda;
    return TmsvParams{l2 / (1 - l2)};
}

}  // namespace

TEST(Tmsv, vacuum_source) {
    TruncatedTmsv s = tmsv_truncated(TmsvParams{0.0}, 0.5);
    EXPECT_NEAR(std::abs(s.state.amplitude("000")), 1.0, 1e-15);
    EXPECT_NEAR(s.weight, 1.0, 1e-15);
    EXPECT_TRUE(s.warnings.empty());
}

TEST(Tmsv, unit_mean_photon_number) {
    TmsvParams p{1.0};
    EXPECT_NEAR(p.lambda2(), 0.5, 1e-15);
    EXPECT_NEAR(p.truncation_weight(), 0.75, 1e-15);
    EXPECT_FALSE(p.truncation_valid());
    TruncatedTmsv s = tmsv_truncated(p, 1.0);
    EXPECT_NEAR(s.state.amplitude("000").real(), std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(s.state.amplitude("110").real(), 0.5, 1e-15);
    EXPECT_NEAR(std::abs(s.state.amplitude("101")), 0.0, 1e-15);
    EXPECT_EQ(s.warnings.size(), 2u);
}

TEST(Tmsv, lossy_terms) {
    TmsvParams p{0.05};
    const double g = 0.3;
    TruncatedTmsv s = tmsv_truncated(p, g);
    EXPECT_EQ(s.state.modes().labels(), (std::vector<std::string>{"S", "I", "E"}));
    EXPECT_NEAR(s.state.amplitude("110").real(), p.beta() * std::sqrt(g), 1e-15);
    EXPECT_NEAR(s.state.amplitude("101").real(), p.beta() * std::sqrt(1 - g), 1e-15);
    EXPECT_NEAR(s.state.norm_squared(), p.truncation_weight(), 1e-15);
    EXPECT_TRUE(s.warnings.empty());
    EXPECT_THROW(tmsv_truncated(TmsvParams{-1.0}, 0.5), DomainError);
}

TEST(Sensing, teleports_pair_when_lossless) {
    TmsvParams p{0.05};
    SensingResult r = sensing_restore(p, 1.0, 0.5, {}, {});
    PureState pair = PureState::from_terms(ModeRegister({"S", "F"}), {{"00", p.alpha()}, {"11", p.beta()}}).normalized();
    for (std::size_t op = 0; op < 2; ++op) {
        ASSERT_TRUE(r.protocol.branches[op].output.has_value());
        EXPECT_NEAR(fidelity(*r.protocol.branches[op].output, pair), 1.0, 1e-12);
        EXPECT_NEAR(*r.gain[op], 1.0, 1e-12);
        EXPECT_NEAR(r.success[op], 0.5, 1e-12);
    }
}

TEST(Sensing, first_branch_density) {
    TmsvParams p{0.08};
    const double g = 0.6, t = 0.7, a = p.alpha(), b = p.beta();
    SensingResult r = sensing_restore(p, g, t, {}, {});
    Vector psi = Vector::Zero(4);
    psi(0) = a * std::sqrt(1 - t);
    psi(3) = b * std::sqrt(g * t);
    Matrix want = psi * psi.adjoint();
    want(2, 2) += b * b * (1 - g) * (1 - t);  // photon lost from the idler: |10><10|
    want /= want.trace().real();
    EXPECT_LT(max_abs_diff(r.protocol.branches[0].output->matrix(), want), 1e-12);
    EXPECT_NEAR(r.ideal_success[0], (a * a * (1 - t) + b * b * (g * t + (1 - g) * (1 - t))) / p.truncation_weight(),
                1e-12);
}

TEST(Sensing, lab_detectors_lower_success_only) {
    SensingResult ideal = sensing_restore(TmsvParams{0.05}, 0.5, 0.8, {}, {});
    SensingResult lab = sensing_restore(TmsvParams{0.05}, 0.5, 0.8, kLab, kLab);
    for (std::size_t op = 0; op < 2; ++op) {
        EXPECT_LT(lab.success[op], ideal.success[op]);
        EXPECT_NEAR(*lab.gain[op], *ideal.gain[op], 1e-12);
    }
}

TEST(Restoration, photon_only_input_hits_endpoints) {
    EXPECT_NEAR(full_restoration_t(0.0, 0.5, OperatingPoint::OP1), 1.0, 1e-8);
    EXPECT_NEAR(full_restoration_t(0.0, 0.5, OperatingPoint::OP2), 0.0, 1e-8);
}

TEST(Restoration, balanced_input) {
    // gamma t = N+ with alpha^2 = gamma = 1/2 gives t = 3/4; OP2 mirrors it.
    EXPECT_NEAR(full_restoration_t(0.5, 0.5, OperatingPoint::OP1), 0.75, 1e-8);
    EXPECT_NEAR(full_restoration_t(0.5, 0.5, OperatingPoint::OP2), 0.25, 1e-8);
    const double t = full_restoration_t(TmsvParams{0.05}, 0.4, OperatingPoint::OP1);
    SensingResult r = sensing_restore(TmsvParams{0.05}, 0.4, t, {}, {});
    EXPECT_NEAR(*r.gain[0] * 0.4, 1.0, 1e-7);
}

TEST(Restoration, rejects_bad_inputs) {
    EXPECT_THROW(full_restoration_t(1.5, 0.5, OperatingPoint::OP1), DomainError);
    EXPECT_THROW(full_restoration_t(0.5, -0.1, OperatingPoint::OP1), DomainError);
}

TEST(RequiredPairs, scales_inversely) {
    EXPECT_NEAR(required_pairs(1e5, 0.4), 2.5e5, 1e-6);
    EXPECT_NEAR(required_pairs(10.0, 1.0), 10.0, 1e-15);
    EXPECT_THROW(required_pairs(10.0, 0.0), DomainError);
    EXPECT_THROW(required_pairs(-1.0, 0.5), DomainError);
}

TEST(Remote, ideal_detectors_give_target_state) {
    EntanglementResult r = remote_entangle({}, {});
    EXPECT_EQ(r.target.modes().labels(), (std::vector<std::string>{"S", "F", "s", "f"}));
    for (std::size_t op = 0; op < 2; ++op) {
        EXPECT_NEAR(r.fidelity[op], 1.0, 1e-12);
        EXPECT_NEAR(r.protocol.branches[op].success_probability, 0.5, 1e-12);
    }
    EXPECT_NEAR(r.mean_success, 0.5, 1e-12);
}

TEST(Remote, imperfect_detectors_match_closed_form) {
    for (const auto& det : {kLab, DetectorModel{0.5, 0.1}}) {
        EntanglementResult r = remote_entangle(det, det);
        const double c = det.eta + (1 - det.eta) * det.mu, off = 1 - det.mu;
        EXPECT_NEAR(r.protocol.branches[0].success_probability, off * off / 4 + c * c / 4, 1e-12);
        EXPECT_NEAR(r.protocol.branches[1].success_probability, off * c / 2, 1e-12);
        EXPECT_NEAR(r.fidelity[0], 1.0, 1e-12);
        EXPECT_NEAR(r.fidelity[1], 1.0, 1e-12);
    }
}

TEST(Skr, build_matches_term_expansion) {
    const TmsvParams p = from_lambda(0.1);
    const double g = 0.8, ga = 0.6, t = 0.7;
    PureState s = skr_build(p, g, ga, t);
    EXPECT_EQ(s.modes().labels(), (std::vector<std::string>{"S", "I", "E", "A", "F", "E'"}));
    EXPECT_LT(oracle::max_diff(s.amplitudes(), oracle::two_loss_state(p.alpha(), p.beta(), g, ga, t)), 1e-12);
}

TEST(Skr, branch_norms_match_two_loss_closed_form) {
    const TmsvParams p = from_lambda(0.1);
    const double g = 0.8, ga = 0.6, t = 0.7;
    const double a2 = p.alpha() * p.alpha(), b2 = p.beta() * p.beta();
    SkrResult r = skr_protocol(p, g, ga, t, {}, {});
    EXPECT_NEAR(r.norm[0] + r.norm[1], p.truncation_weight(), 1e-12);
    EXPECT_NEAR(r.approx_same, a2 * (1 - t) + b2 * g * ga * t, 1e-15);
    EXPECT_NEAR(r.approx_diff, a2 * t * ga + b2 * g * (1 - t), 1e-15);
    EXPECT_NEAR(r.signal[0], b2 * g * ga * t, 1e-12);
    EXPECT_NEAR(r.signal[1], b2 * g * (1 - t), 1e-12);
}

TEST(Skr, lossless_link) {
    SkrScenario sc;
    sc.link = {0.0063, 0.0};
    SkrResult r = skr_protocol(sc);
    EXPECT_NEAR(r.chi, 1.0, 1e-15);
    EXPECT_NEAR(r.success[0], 0.5, 1e-12);
    EXPECT_NEAR(r.success[1], 0.5, 1e-12);
    EXPECT_TRUE(std::isinf(r.plob));
}

TEST(Skr, quarter_transmission) {
    SkrResult r = skr_protocol(TmsvParams{0.01}, 0.5, 0.5, 0.5, {}, {});
    EXPECT_NEAR(r.chi, 0.25, 1e-15);
    EXPECT_NEAR(r.success[1], 0.25, 0.01);
    EXPECT_NEAR(r.success[1], r.approx_diff / r.truncation_weight, 1e-2);
}

TEST(Skr, rate_falls_with_distance) {
    SkrScenario sc;
    sc.link.attenuation_db_per_km = 0.0063;
    double last = 2.0;
    for (double d : {0.0, 100.0, 300.0, 600.0, 1200.0, 2400.0}) {
        sc.link.distance_km = d;
        SkrResult r = skr_protocol(sc);
        EXPECT_LT(r.skr[1], last);
        last = r.skr[1];
    }
}

TEST(Plob, values) {
    EXPECT_NEAR(plob_bound(0.5, 1), 1.0, 1e-15);
    EXPECT_NEAR(plob_bound(0.5, 2), 1.7716, 1e-4);
    EXPECT_TRUE(std::isinf(plob_bound(1.0, 1)));
    EXPECT_THROW(plob_bound(0.0, 1), DomainError);
    EXPECT_THROW(plob_bound(0.5, 3), DomainError);
}

TEST(Skr, crossover_is_where_margin_changes_sign) {
    SkrScenario sc;
    sc.link.attenuation_db_per_km = 0.0063;
    const auto d = crossover_distance(sc, OperatingPoint::OP2);
    ASSERT_TRUE(d.has_value());
    sc.link.distance_km = *d + 1.0;
    SkrResult after = skr_protocol(sc);
    EXPECT_GT(after.skr[1], after.plob);
    sc.link.distance_km = *d - 1.0;
    SkrResult before = skr_protocol(sc);
    EXPECT_LT(before.skr[1], before.plob);
}
