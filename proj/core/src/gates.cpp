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

#include "nla/gates.hpp"

#include <cmath>
#include <numbers>

namespace nla::gates {

namespace {

void require_unit_interval(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw DomainError(std::string(what) + " must lie in [0, 1], got " + std::to_string(v));
    }
}

void require_angle(double theta) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi / 2)) {
        throw DomainError("rotation angle must lie in [0, pi/2], got " + std::to_string(theta));
    }
}

}  // namespace

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::Beamsplitter: return "BS";
        case GateKind::Hadamard: return "H";
        case GateKind::CZ: return "CZ";
        case GateKind::ControlledRotation: return "CR";
        case GateKind::CNOT: return "CNOT";
        case GateKind::PauliX: return "X";
        case GateKind::PauliZ: return "Z";
    }
    return "?";
}

void GateSpec::validate() const {
    if (kind == GateKind::Beamsplitter) require_unit_interval(parameter, "beamsplitter transmissivity");
    if (kind == GateKind::ControlledRotation) require_angle(parameter);
}

LinearOp GateSpec::to_op() const {
    validate();
    switch (kind) {
        case GateKind::Beamsplitter: return beamsplitter(parameter);
        case GateKind::Hadamard: return hadamard();
        case GateKind::CZ: return cz();
        case GateKind::ControlledRotation: return controlled_rotation(parameter);
        case GateKind::CNOT: return cnot();
        case GateKind::PauliX: return pauli_x();
        case GateKind::PauliZ: return pauli_z();
    }
    throw DomainError("unknown gate kind");
}

LinearOp beamsplitter(double transmissivity) {
    require_unit_interval(transmissivity, "beamsplitter transmissivity");
    const double c = std::sqrt(transmissivity);
    const double s = std::sqrt(1.0 - transmissivity);
    Matrix m = Matrix::Identity(4, 4);
    // basis order |00>, |01>, |10>, |11>
    m(2, 2) = c;
    m(1, 2) = s;
    m(2, 1) = -s;
    m(1, 1) = c;
    return LinearOp(std::move(m), true);
}

LinearOp hadamard() {
    const double r = 1.0 / std::sqrt(2.0);
    Matrix m(2, 2);
    m << r, r, r, -r;
    return LinearOp(std::move(m), true);
}

LinearOp cz() {
    Matrix m = Matrix::Identity(4, 4);
    m(3, 3) = -1.0;
    return LinearOp(std::move(m), true);
}

LinearOp cnot() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(3, 2) = 1.0;
    m(2, 3) = 1.0;
    return LinearOp(std::move(m), true);
}

LinearOp controlled_rotation(double theta) {
    require_angle(theta);
    Matrix m = Matrix::Identity(4, 4);
    m(2, 2) = std::cos(theta);
    m(2, 3) = -std::sin(theta);
    m(3, 2) = std::sin(theta);
    m(3, 3) = std::cos(theta);
    return LinearOp(std::move(m), true);
}

LinearOp pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return LinearOp(std::move(m), true);
}

LinearOp pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return LinearOp(std::move(m), true);
}

LinearOp identity(std::size_t arity) {
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << arity);
    return LinearOp(Matrix::Identity(d, d), true);
}

double angle_from_transmissivity(double gamma) {
    require_unit_interval(gamma, "transmissivity");
    return std::acos(std::sqrt(gamma));
}

double transmissivity_from_angle(double theta) {
    require_angle(theta);
    const double c = std::cos(theta);
    return c * c;
}

}  // namespace nla::gates
