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

#include "nla/channels.hpp"

#include <cmath>

#include "nla/gates.hpp"

namespace nla::channels {

void AdcParams::validate() const {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw DomainError("ADC survivability must lie in [0, 1], got " + std::to_string(gamma));
    }
}

KrausChannel::KrausChannel(std::vector<Matrix> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) throw ArityMismatchError("a Kraus channel needs at least one operator");
    for (const auto& k : ops_) {
        if (k.rows() != ops_.front().rows() || k.cols() != ops_.front().cols() || k.rows() != k.cols()) {
            throw ArityMismatchError("Kraus operators must share one square shape");
        }
    }
}

double KrausChannel::completeness_error() const {
    Matrix sum = Matrix::Zero(ops_.front().rows(), ops_.front().cols());
    for (const auto& k : ops_) sum += k.adjoint() * k;
    return max_abs_diff(sum, Matrix::Identity(sum.rows(), sum.cols()));
}

DensityOperator KrausChannel::apply(const DensityOperator& rho, const Targets& targets) const {
    Matrix out = Matrix::Zero(rho.matrix().rows(), rho.matrix().cols());
    for (const auto& k : ops_) {
        Matrix e = embed(LinearOp(k), targets, rho.modes());
        out += e * rho.matrix() * e.adjoint();
    }
    return DensityOperator(rho.modes(), std::move(out));
}

KrausChannel adc_kraus(double gamma) {
    AdcParams{gamma}.validate();
    Matrix k0 = Matrix::Zero(2, 2);
    k0(0, 0) = 1.0;
    k0(1, 1) = std::sqrt(gamma);
    Matrix k1 = Matrix::Zero(2, 2);
    k1(0, 1) = std::sqrt(1.0 - gamma);
    return KrausChannel({k0, k1});
}

PureState adc_beamsplitter(double gamma, const PureState& input, const std::string& signal,
                           const std::string& env_label) {
    AdcParams{gamma}.validate();
    PureState joint = tensor(input, PureState::basis(ModeRegister({env_label}), "0"));
    return apply(gates::beamsplitter(gamma), {signal, env_label}, joint);
}

PureState adc_gate_model(double gamma, const PureState& input, const std::string& signal,
                         const std::string& ancilla_label) {
    AdcParams{gamma}.validate();
    const double theta = gates::angle_from_transmissivity(gamma);
    PureState s = tensor(input, PureState::basis(ModeRegister({ancilla_label}), "0"));
    s = apply(gates::controlled_rotation(theta), {signal, ancilla_label}, s);
    s = apply(gates::hadamard(), {signal}, s);
    s = apply(gates::cz(), {signal, ancilla_label}, s);
    return apply(gates::hadamard(), {signal}, s);
}

void LinkBudget::validate() const {
    if (!(attenuation_db_per_km > 0.0) || !std::isfinite(attenuation_db_per_km)) {
        throw DomainError("attenuation factor must be positive");
    }
    if (!(distance_km >= 0.0) || !std::isfinite(distance_km)) {
        throw DomainError("distance must be nonnegative");
    }
}

double LinkBudget::attenuation_length_km() const {
    return channels::attenuation_length_km(attenuation_db_per_km);
}

double attenuation_length_km(double attenuation_db_per_km) {
    if (!(attenuation_db_per_km > 0.0)) throw DomainError("attenuation factor must be positive");
    return 10.0 / (attenuation_db_per_km * std::log(10.0));
}

double transmissivity_from_distance(const LinkBudget& budget) {
    budget.validate();
    return std::exp(-budget.distance_km / budget.attenuation_length_km());
}

double amplitude_survivability(const LinkBudget& budget) {
    budget.validate();
    return std::exp(-budget.distance_km / (2.0 * budget.attenuation_length_km()));
}

}  // namespace nla::channels
