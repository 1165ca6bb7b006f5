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

#ifndef NLA_APPLICATIONS_HPP
#define NLA_APPLICATIONS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nla/channels.hpp"
#include "nla/protocols.hpp"

namespace nla::applications {

using detectors::DetectorModel;
using protocols::OperatingPoint;

struct TmsvParams {
    double mean_photon_number = 0.0;

    void validate() const;
    double lambda2() const { return mean_photon_number / (1.0 + mean_photon_number); }
    double lambda() const;
    // First-order amplitudes of the truncated expansion (not renormalized).
    double alpha() const;
    double beta() const;
    // alpha^2 + beta^2 = 1 - lambda^4
    double truncation_weight() const;
    bool truncation_valid() const { return mean_photon_number <= 0.1; }
};

struct TruncatedTmsv {
    PureState state;  // modes S, I, E
    double weight = 1.0;
    std::vector<std::string> warnings;
};

// alpha|000> + beta sqrt(g)|110> + beta sqrt(1-g)|101> over (S, I, E).
TruncatedTmsv tmsv_truncated(const TmsvParams& params, double gamma);

struct SensingResult {
    TruncatedTmsv input;
    protocols::ProtocolResult protocol;  // outputs over (S, F)
    // Probabilities relative to the truncated input.
    std::array<double, 2> success{};
    std::array<double, 2> ideal_success{};
    // |11>_SF weight of the output over the lossy |11>_SI weight of the input.
    std::array<std::optional<double>, 2> gain;
};

SensingResult sensing_restore(const TmsvParams& params, double gamma, double t,
                              const DetectorModel& detector1, const DetectorModel& detector2);

// t at which gain * gamma = 1, i.e. the amplified photon weight matches the
// lossless one. Bisection to 1e-9.
double full_restoration_t(double alpha2, double gamma, OperatingPoint op);
double full_restoration_t(const TmsvParams& params, double gamma, OperatingPoint op);

double required_pairs(double target_pairs, double success_probability);

struct EntanglementResult {
    protocols::ProtocolResult protocol;  // outputs over (S, F, s, f)
    PureState target;                    // (|01eg> + |10ge>)/sqrt(2), e = |1>, g = |0>
    std::array<double, 2> fidelity{};
    double mean_success = 0.0;
};

// Four photon-transmon pairs (S,s), (I,i), (A,a), (F,f) each in (|0e> + |1g>)/sqrt(2).
PureState remote_pairs_build();
EntanglementResult remote_entangle(const DetectorModel& detector1, const DetectorModel& detector2);

struct SkrScenario {
    channels::LinkBudget link;
    double t = 0.5;
    TmsvParams tmsv{0.01};
    DetectorModel detector1;
    DetectorModel detector2;
    int repeater_links = 1;

    void validate() const;
};

struct SkrResult {
    double chi = 1.0;
    double gamma = 1.0;      // storage-side loss
    double gamma_aux = 1.0;  // resource-side loss
    double truncation_weight = 1.0;
    protocols::ProtocolResult protocol;  // outputs over (S, F)
    // Branch norms of the unnormalized truncated state.
    std::array<double, 2> norm{};
    // Heralded success per truncated pair.
    std::array<double, 2> success{};
    // Weight of |11>_SF |00>_EE' in each corrected branch (unnormalized).
    std::array<double, 2> signal{};
    double approx_same = 0.0;  // alpha^2 (1-t) + beta^2 g g~ t
    double approx_diff = 0.0;  // alpha^2 t g~ + beta^2 g (1-t)
    std::array<double, 2> skr{};
    double qs_success = 0.0;  // scissors with the same two losses
    double plob = 0.0;
};

// Six modes S, I, E, A, F, E'.
PureState skr_build(const TmsvParams& tmsv, double gamma, double gamma_aux, double t);
SkrResult skr_protocol(const TmsvParams& tmsv, double gamma, double gamma_aux, double t,
                       const DetectorModel& detector1, const DetectorModel& detector2);
// Midpoint split of the link: gamma = gamma_aux = sqrt(chi).
SkrResult skr_protocol(const SkrScenario& scenario);

// One secret bit per heralded pair.
double skr_from_success(double success_probability);

// -log2(1 - chi^(1/K)). +infinity at chi = 1; DomainError at chi = 0.
double plob_bound(double chi, int k);

// Smallest distance beyond which the chosen branch's SKR stays above the PLOB
// curve, searched on [0, max_distance_km]. Empty when the curves never cross.
std::optional<double> crossover_distance(const SkrScenario& base, OperatingPoint op,
                                         double max_distance_km = 5000.0, int k = 1);

}  // namespace nla::applications

#endif  // NLA_APPLICATIONS_HPP
