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

#include "nla/detectors.hpp"

#include <cmath>

namespace nla::detectors {

void DetectorModel::validate() const {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw DomainError("detector efficiency must lie in [0, 1], got " + std::to_string(eta));
    }
    if (!(mu >= 0.0 && mu <= 1.0)) {
        throw DomainError("dark-count probability must lie in [0, 1], got " + std::to_string(mu));
    }
}

Vector idle_ket(DetectionBasis basis) {
    Vector v(2);
    if (basis == DetectionBasis::Number) {
        v << 1.0, 0.0;
    } else {
        v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    }
    return v;
}

Vector click_ket(DetectionBasis basis) {
    Vector v(2);
    if (basis == DetectionBasis::Number) {
        v << 0.0, 1.0;
    } else {
        v << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
    }
    return v;
}

OnOffPair onoff(const DetectorModel& model, DetectionBasis basis) {
    model.validate();
    const Vector idle = idle_ket(basis);
    const Vector click = click_ket(basis);
    Matrix p_idle = idle * idle.adjoint();
    Matrix p_click = click * click.adjoint();
    return {LinearOp((1.0 - model.mu) * p_idle), LinearOp(model.mu * p_idle + p_click)};
}

OnOffPair ideal_onoff() { return onoff(DetectorModel::ideal(), DetectionBasis::Number); }

OnOffPair qnd_onoff(const DetectorModel& model) { return onoff(model, DetectionBasis::Diagonal); }

LinearOp inefficiency_map(const DetectorModel& model, DetectionBasis basis) {
    model.validate();
    const Vector idle = idle_ket(basis);
    const Vector click = click_ket(basis);
    Matrix m = idle * idle.adjoint() +
               (std::sqrt(model.eta) * click + std::sqrt(1.0 - model.eta) * idle) * click.adjoint();
    return LinearOp(std::move(m));
}

Response response_matrix(const DetectorModel& model, DetectionBasis basis) {
    const OnOffPair ops = onoff(model, basis);
    const Matrix s = inefficiency_map(model, basis).matrix();
    const std::array<Vector, 2> kets{idle_ket(basis), click_ket(basis)};
    Response r{};
    for (int k = 0; k < 2; ++k) {
        Vector v = s * kets[static_cast<std::size_t>(k)];
        r[k][0] = v.dot(ops.off.matrix() * v).real();
        r[k][1] = v.dot(ops.on.matrix() * v).real();
    }
    return r;
}

JointObservables joint_observables(const DetectorModel& detector1, const DetectorModel& detector2,
                                   DetectionBasis basis) {
    const Response r1 = response_matrix(detector1, basis);
    const Response r2 = response_matrix(detector2, basis);
    const std::array<Vector, 2> kets{idle_ket(basis), click_ket(basis)};

    std::array<Matrix, 4> proj;
    for (int k = 0; k < 4; ++k) {
        Vector a = kets[static_cast<std::size_t>(k >> 1)];
        Vector b = kets[static_cast<std::size_t>(k & 1)];
        Vector ab(4);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) ab(2 * i + j) = a(i) * b(j);
        }
        proj[static_cast<std::size_t>(k)] = ab * ab.adjoint();
    }

    JointObservables out;
    for (int l = 0; l < 4; ++l) {
        const int l1 = l >> 1;
        const int l2 = l & 1;
        Matrix element = Matrix::Zero(4, 4);
        for (int k = 0; k < 4; ++k) {
            element += r1[k >> 1][l1] * r2[k & 1][l2] * proj[static_cast<std::size_t>(k)];
        }
        const Matrix& pl = proj[static_cast<std::size_t>(l)];
        out[static_cast<std::size_t>(l)] =
            JointObservable{l, LinearOp(element), LinearOp(r1[l1][l1] * r2[l2][l2] * pl), LinearOp(pl)};
    }
    return out;
}

double OutcomeDistribution::total_registered() const {
    double s = 0.0;
    for (const auto& o : outcomes) s += o.registered;
    return s;
}

double OutcomeDistribution::total_heralded() const {
    double s = 0.0;
    for (const auto& o : outcomes) s += o.heralded;
    return s;
}

double OutcomeDistribution::total_pattern() const {
    double s = 0.0;
    for (const auto& o : outcomes) s += o.pattern;
    return s;
}

OutcomeDistribution outcome_probabilities(const PureState& state, const Targets& modes,
                                          const JointObservables& observables) {
    if (modes.size() != 2) throw ArityMismatchError("joint observables act on exactly two modes");
    OutcomeDistribution d;
    for (const auto& obs : observables) {
        Outcome& o = d.outcomes[static_cast<std::size_t>(obs.index)];
        o.pattern = expectation(state, obs.pattern, modes);
        o.registered = expectation(state, obs.element, modes);
        o.heralded = expectation(state, obs.heralding, modes);
        if (o.pattern >= kZeroBranchTol) {
            o.state = project(state, obs.pattern, modes).state;
        }
    }
    return d;
}

}  // namespace nla::detectors
