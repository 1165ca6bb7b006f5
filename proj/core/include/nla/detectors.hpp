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

#ifndef NLA_DETECTORS_HPP
#define NLA_DETECTORS_HPP

#include <array>
#include <optional>

#include "nla/hilbert.hpp"

namespace nla::detectors {

struct DetectorModel {
    double eta = 1.0;  // efficiency
    double mu = 0.0;   // dark-count probability

    void validate() const;
    static DetectorModel ideal() { return {}; }
};

// Which single-mode kets the detector discriminates. The QND detectors of the
// one-way amplifier read the diagonal basis (off = |+>, on = |->); the
// heralding detectors of the scissors read photon number (off = |0>, on = |1>).
enum class DetectionBasis { Diagonal, Number };

struct OnOffPair {
    LinearOp off;
    LinearOp on;
};

// Number basis: M_off = |0><0|, M_on = 1 - M_off.
OnOffPair ideal_onoff();
// Diagonal basis: M_off = (1-mu)|+><+|, M_on = mu|+><+| + |-><-|.
OnOffPair qnd_onoff(const DetectorModel& model);
OnOffPair onoff(const DetectorModel& model, DetectionBasis basis);

Vector idle_ket(DetectionBasis basis);
Vector click_ket(DetectionBasis basis);

// |click> -> sqrt(eta)|click> + sqrt(1-eta)|idle>, |idle> unchanged. Not unitary.
LinearOp inefficiency_map(const DetectorModel& model, DetectionBasis basis);

// r[k][l]: probability that the detector registers l (0 = off, 1 = on) when the
// mode is in pattern ket k (0 = idle, 1 = click), inefficiency included.
using Response = std::array<std::array<double, 2>, 2>;
Response response_matrix(const DetectorModel& model, DetectionBasis basis);

// Index l = 2 * (detector1 on) + (detector2 on): 0 off/off, 1 off/on, 2 on/off, 3 on/on.
struct JointObservable {
    int index = 0;
    // POVM element with inefficiency folded in: sum_k r1 r2 |k><k|. The four
    // elements resolve the identity for every (eta, mu).
    LinearOp element;
    // The part of `element` where the registered pattern matches the true one:
    // r1(l1|l1) r2(l2|l2) |l><l|.
    LinearOp heralding;
    // Ideal projector |l><l| onto the pattern ket.
    LinearOp pattern;
};

using JointObservables = std::array<JointObservable, 4>;

JointObservables joint_observables(const DetectorModel& detector1, const DetectorModel& detector2,
                                   DetectionBasis basis = DetectionBasis::Diagonal);

struct Outcome {
    double pattern = 0.0;     // weight of the ideal pattern ket
    double registered = 0.0;  // probability that the detectors report this outcome
    double heralded = 0.0;    // reported outcome and true pattern agree
    // Normalized state after the pattern projection; empty for a zero branch.
    std::optional<PureState> state;
};

struct OutcomeDistribution {
    std::array<Outcome, 4> outcomes;

    double total_registered() const;
    double total_heralded() const;
    double total_pattern() const;
};

OutcomeDistribution outcome_probabilities(const PureState& state, const Targets& modes,
                                          const JointObservables& observables);

}  // namespace nla::detectors

#endif  // NLA_DETECTORS_HPP
