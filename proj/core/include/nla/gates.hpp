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

#ifndef NLA_GATES_HPP
#define NLA_GATES_HPP

#include <string>

#include "nla/hilbert.hpp"

namespace nla::gates {

enum class GateKind { Beamsplitter, Hadamard, CZ, ControlledRotation, CNOT, PauliX, PauliZ };

struct GateSpec {
    GateKind kind = GateKind::Hadamard;
    // Transmissivity for Beamsplitter, angle for ControlledRotation, unused otherwise.
    double parameter = 0.0;

    void validate() const;
    LinearOp to_op() const;
};

std::string to_string(GateKind kind);

// Dual-rail beamsplitter on the ordered pair (a, b):
//   |10> -> sqrt(tau)|10> + sqrt(1-tau)|01>
//   |01> -> -sqrt(1-tau)|10> + sqrt(tau)|01>
// with |00> and |11> left alone.
LinearOp beamsplitter(double transmissivity);
LinearOp hadamard();
LinearOp cz();
// Control is the first target.
LinearOp cnot();
// |1>_c (x) R(theta) on the target, R = [[cos, -sin], [sin, cos]].
LinearOp controlled_rotation(double theta);
LinearOp pauli_x();
LinearOp pauli_z();
LinearOp identity(std::size_t arity = 1);

// gamma = cos^2(theta)
double angle_from_transmissivity(double gamma);
double transmissivity_from_angle(double theta);

}  // namespace nla::gates

#endif  // NLA_GATES_HPP
