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

#ifndef NLA_PROTOCOLS_HPP
#define NLA_PROTOCOLS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nla/detectors.hpp"
#include "nla/hilbert.hpp"

namespace nla::protocols {

using detectors::DetectorModel;

struct AmplifierConfig {
    Complex alpha{1.0, 0.0};
    Complex beta{0.0, 0.0};
    double gamma = 1.0;  // channel survivability ahead of the amplifier
    double t = 0.5;      // tunable splitter transmissivity
    DetectorModel detector1;
    DetectorModel detector2;

    void validate() const;
    double alpha2() const { return std::norm(alpha); }
    double beta2() const { return std::norm(beta); }

    // Real amplitudes alpha = sqrt(alpha2), beta = sqrt(1 - alpha2).
    static AmplifierConfig from_alpha2(double alpha2, double gamma, double t,
                                       DetectorModel d1 = {}, DetectorModel d2 = {});
};

// OP1: both detectors agree. OP2: they disagree.
enum class OperatingPoint { OP1 = 0, OP2 = 1 };
std::string to_string(OperatingPoint op);
inline std::size_t slot(OperatingPoint op) { return static_cast<std::size_t>(op); }

struct Branch {
    // Ideal-detector probability of this branch (sum of its two pattern weights).
    double weight = 0.0;
    // Probability that the detectors herald this branch and are right about it.
    double success_probability = 0.0;
    // Probability that the detectors report one of this branch's patterns.
    double registered_probability = 0.0;
    std::optional<PureState> raw;        // normalized, before feed-forward
    std::optional<PureState> corrected;  // after feed-forward
    std::optional<DensityOperator> output;
    // Output single-photon weight over the single-photon weight that entered.
    std::optional<double> gain;
};

struct ProtocolResult {
    detectors::OutcomeDistribution outcomes;
    std::array<Branch, 2> branches;

    const Branch& at(OperatingPoint op) const { return branches[slot(op)]; }
    Branch& at(OperatingPoint op) { return branches[slot(op)]; }
    double success_probability(OperatingPoint op) const { return at(op).success_probability; }
    std::optional<double> gain(OperatingPoint op) const { return at(op).gain; }
    double total_success() const;
};

struct FeedForward {
    LinearOp op;
    Targets targets;
};

// A two-detector Bell-type measurement followed by per-branch Pauli feed-forward.
// Branch OP1 keeps the coherent combination phi(0) + s1 phi(3) and OP2 keeps
// phi(1) + s2 phi(2), where phi(l) is the partial inner product of the state
// with pattern ket l on the measured modes.
struct BsmLayout {
    std::string first = "I";   // read by detector1
    std::string second = "A";  // read by detector2
    detectors::DetectionBasis basis = detectors::DetectionBasis::Diagonal;
    // Modes whose state is fixed by the measured one (e.g. a transmon locked to
    // its photon). Empty string for none. The companion ket is |1> when the
    // detector is idle and |0> when it clicks.
    std::string first_companion;
    std::string second_companion;
    std::array<double, 2> relative_sign{1.0, -1.0};
    std::array<std::vector<FeedForward>, 2> corrections;
    Targets keep;  // modes of the output density operator
};

ProtocolResult bell_measure(const PureState& state, const BsmLayout& layout,
                            const DetectorModel& detector1, const DetectorModel& detector2);

// Throws LeakageError when a dual-rail pair holds more than one excitation.
void check_no_leakage(const PureState& s, const std::string& a, const std::string& b,
                      double tol = 1e-14);

// ------------------------------------------------------------ scissors (QS-NLA)

struct ScissorsResult {
    detectors::OutcomeDistribution outcomes;  // over (D+, D-), number basis
    Branch plus;   // only D+ clicks; already in the common sign convention
    Branch minus;  // only D- clicks; Z on F applied
    double success_probability = 0.0;  // heralded, both branches
    double weight = 0.0;               // ideal-detector success probability
    std::optional<double> gain;
};

// Modes I (signal), E (loss environment), A, F; with aux_gamma < 1 an extra
// environment E' damps the auxiliary arm.
PureState qs_nla_build(const AmplifierConfig& config, double aux_gamma = 1.0);
// Appends the single-photon resource (A, F) to any state holding the signal
// mode I, then mixes I and A on the balanced splitter.
PureState qs_nla_attach(const PureState& lossy, double t, double aux_gamma = 1.0);
ScissorsResult qs_nla_measure(const PureState& state, const DetectorModel& d_plus,
                              const DetectorModel& d_minus, const Targets& keep);
ScissorsResult qs_nla_run(const AmplifierConfig& config);

// ------------------------------------------------------------ one-way amplifier

// Modes I, E, A, F after the gate-model loss, the A-F resource, CZ(I, A) and the
// Hadamards on I and A.
PureState oneway_build(const AmplifierConfig& config);
BsmLayout oneway_layout();
ProtocolResult oneway_measure_and_correct(const PureState& state, const DetectorModel& detector1,
                                          const DetectorModel& detector2);
// Build, measure, correct and attach gains.
ProtocolResult oneway_run(const AmplifierConfig& config);

// ----------------------------------------------------------------- closed forms

double branch_norm(const AmplifierConfig& config, OperatingPoint op);
// G_OP1 = t / N+, G_OP2 = (1 - t) / N-; +infinity when the norm vanishes.
double gain_closed_form(const AmplifierConfig& config, OperatingPoint op);
// Correct-herald probabilities of the four joint outcomes.
std::array<double, 4> herald_probabilities_closed_form(const AmplifierConfig& config);
double success_probability_closed_form(const AmplifierConfig& config, OperatingPoint op);
double qs_success_probability_closed_form(const AmplifierConfig& config);

// Reference g^n on a single two-level mode, normalized.
PureState nla_reference(const PureState& qubit, double g);

}  // namespace nla::protocols

#endif  // NLA_PROTOCOLS_HPP
