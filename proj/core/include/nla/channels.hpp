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

#ifndef NLA_CHANNELS_HPP
#define NLA_CHANNELS_HPP

#include <string>
#include <vector>

#include "nla/hilbert.hpp"

namespace nla::channels {

struct AdcParams {
    double gamma = 1.0;  // single-photon survivability

    void validate() const;
};

class KrausChannel {
   public:
    explicit KrausChannel(std::vector<Matrix> ops);

    const std::vector<Matrix>& operators() const { return ops_; }
    // max |sum K^dagger K - I|
    double completeness_error() const;
    DensityOperator apply(const DensityOperator& rho, const Targets& targets) const;

   private:
    std::vector<Matrix> ops_;
};

// K0 = diag(1, sqrt(gamma)), K1 = sqrt(1 - gamma)|0><1|
KrausChannel adc_kraus(double gamma);

// Appends a vacuum environment mode and mixes it with `signal` on BS(gamma):
// a|0> + b|1>  ->  a|00> + b sqrt(g)|10> + b sqrt(1-g)|01>  (signal, env).
PureState adc_beamsplitter(double gamma, const PureState& input, const std::string& signal,
                           const std::string& env_label);

// Same joint state built from CR(theta) then (H (x) I) CZ (H (x) I), where the
// Hadamards sit on the signal so the pair acts as a CNOT from the ancilla back
// onto the signal. gamma = cos^2(theta).
PureState adc_gate_model(double gamma, const PureState& input, const std::string& signal,
                         const std::string& ancilla_label);

struct LinkBudget {
    double attenuation_db_per_km = 0.0;
    double distance_km = 0.0;

    void validate() const;
    double attenuation_length_km() const;
};

// L_att = 10 / (a ln 10)
double attenuation_length_km(double attenuation_db_per_km);
// Power transmissivity chi = exp(-L / L_att).
double transmissivity_from_distance(const LinkBudget& budget);
// exp(-L / 2 L_att) = sqrt(chi). Also the survivability of each half of a
// midpoint-split link of total length L, since halving L halves the exponent.
double amplitude_survivability(const LinkBudget& budget);

}  // namespace nla::channels

#endif  // NLA_CHANNELS_HPP
