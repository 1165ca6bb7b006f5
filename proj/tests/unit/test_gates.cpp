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
#include <numbers>

#include <gtest/gtest.h>

#include "nla/gates.hpp"
#include "nla/hilbert.hpp"
#include "oracles.hpp"

using namespace nla;

namespace {

bool is_unitary(const LinearOp& op) {
    const Matrix& m = op.matrix();
    return max_abs_diff(m.adjoint() * m, Matrix::Identity(m.rows(), m.cols())) < 1e-12;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

const ModeRegister kPair({"a", "b"});

}  // namespace

TEST(Gates, all_unitary) {
    for (double tau : {0.0, 0.1, 0.5, 0.77, 1.0}) EXPECT_TRUE(is_unitary(gates::beamsplitter(tau)));
    for (double th : {0.0, 0.3, std::numbers::pi / 2}) EXPECT_TRUE(is_unitary(gates::controlled_rotation(th)));
    EXPECT_TRUE(is_unitary(gates::hadamard()));
    EXPECT_TRUE(is_unitary(gates::cz()));
    EXPECT_TRUE(is_unitary(gates::cnot()));
    EXPECT_TRUE(is_unitary(gates::pauli_x()));
    EXPECT_TRUE(is_unitary(gates::pauli_z()));
    EXPECT_TRUE(is_unitary(gates::identity(3)));
    EXPECT_EQ(gates::identity(3).arity(), 3u);
}

TEST(Beamsplitter, single_photon_split) {
    const double tau = 0.3;
    PureState s = apply(gates::beamsplitter(tau), {"a", "b"}, PureState::basis(kPair, "10"));
    EXPECT_NEAR(s.amplitude("10").real(), std::sqrt(tau), 1e-15);
    EXPECT_NEAR(s.amplitude("01").real(), std::sqrt(1 - tau), 1e-15);
    PureState r = apply(gates::beamsplitter(tau), {"a", "b"}, PureState::basis(kPair, "01"));
    EXPECT_NEAR(r.amplitude("10").real(), -std::sqrt(1 - tau), 1e-15);
    EXPECT_NEAR(r.amplitude("01").real(), std::sqrt(tau), 1e-15);
}

TEST(Beamsplitter, vacuum_and_double_excitation_untouched) {
    for (const char* bits : {"00", "11"}) {
        PureState s = apply(gates::beamsplitter(0.42), {"a", "b"}, PureState::basis(kPair, bits));
        EXPECT_NEAR(std::abs(s.amplitude(bits)), 1.0, 1e-15);
    }
}

TEST(Beamsplitter, endpoints) {
    EXPECT_LT(max_abs_diff(gates::beamsplitter(1.0).matrix(), Matrix::Identity(4, 4)), 1e-15);
    PureState s = apply(gates::beamsplitter(0.0), {"a", "b"}, PureState::basis(kPair, "10"));
    EXPECT_NEAR(std::abs(s.amplitude("01")), 1.0, 1e-15);
}

TEST(Beamsplitter, angles_add) {
    // BS(cos^2 x) BS(cos^2 y) = BS(cos^2(x + y)) for x + y within [0, pi/2]
    const double x = 0.3, y = 0.5;
    auto bs = [](double th) { return gates::beamsplitter(gates::transmissivity_from_angle(th)); };
    EXPECT_LT(max_abs_diff((bs(x) * bs(y)).matrix(), bs(x + y).matrix()), 1e-12);
    EXPECT_NEAR(gates::angle_from_transmissivity(gates::transmissivity_from_angle(0.7)), 0.7, 1e-12);
}

TEST(Beamsplitter, range_checked) {
    EXPECT_THROW(gates::beamsplitter(-0.01), DomainError);
    EXPECT_THROW(gates::beamsplitter(1.01), DomainError);
    EXPECT_THROW(gates::beamsplitter(std::nan("")), DomainError);
}

TEST(Hadamard, identities) {
    const Matrix h = gates::hadamard().matrix();
    EXPECT_LT(max_abs_diff(h * h, Matrix::Identity(2, 2)), 1e-15);
    EXPECT_LT(max_abs_diff(h * gates::pauli_z().matrix() * h, gates::pauli_x().matrix()), 1e-15);
    EXPECT_LT(oracle::max_diff(h * oracle::ket('0'), oracle::ket('+')), 1e-15);
    EXPECT_LT(oracle::max_diff(h * oracle::ket('1'), oracle::ket('-')), 1e-15);
}

TEST(CZ, from_cnot_and_hadamards) {
    const Matrix i2 = Matrix::Identity(2, 2), h = gates::hadamard().matrix();
    const Matrix ih = kron(i2, h);
    EXPECT_LT(max_abs_diff(gates::cz().matrix(), ih * gates::cnot().matrix() * ih), 1e-15);
    EXPECT_LT(max_abs_diff(gates::cz().matrix(), gates::cz().adjoint().matrix()), 1e-15);
}

TEST(CZ, symmetric_in_targets) {
    std::mt19937_64 rng(11);
    PureState s(kPair, oracle::random_vector(rng, 4));
    EXPECT_LT(oracle::max_diff(apply(gates::cz(), {"a", "b"}, s).amplitudes(),
                               apply(gates::cz(), {"b", "a"}, s).amplitudes()),
              1e-15);
}

TEST(CNOT, control_first) {
    PureState s = apply(gates::cnot(), {"a", "b"}, PureState::basis(kPair, "10"));
    EXPECT_NEAR(std::abs(s.amplitude("11")), 1.0, 1e-15);
    PureState r = apply(gates::cnot(), {"a", "b"}, PureState::basis(kPair, "01"));
    EXPECT_NEAR(std::abs(r.amplitude("01")), 1.0, 1e-15);
}

TEST(ControlledRotation, idle_when_control_is_off) {
    PureState s = apply(gates::controlled_rotation(0.9), {"a", "b"}, PureState::basis(kPair, "00"));
    EXPECT_NEAR(std::abs(s.amplitude("00")), 1.0, 1e-15);
}

TEST(ControlledRotation, rotates_target) {
    const double th = 0.4;
    PureState s = apply(gates::controlled_rotation(th), {"a", "b"}, PureState::basis(kPair, "10"));
    EXPECT_NEAR(s.amplitude("10").real(), std::cos(th), 1e-15);
    EXPECT_NEAR(s.amplitude("11").real(), std::sin(th), 1e-15);
    PureState full = apply(gates::controlled_rotation(std::numbers::pi / 2), {"a", "b"}, PureState::basis(kPair, "10"));
    EXPECT_NEAR(std::abs(full.amplitude("11")), 1.0, 1e-15);
}

TEST(ControlledRotation, range_checked) {
    EXPECT_THROW(gates::controlled_rotation(-0.1), DomainError);
    EXPECT_THROW(gates::controlled_rotation(2.0), DomainError);
    EXPECT_THROW(gates::angle_from_transmissivity(1.5), DomainError);
}

TEST(Cluster, two_node_state) {
    PureState s = PureState::basis(kPair, "00");
    s = apply(gates::hadamard(), {"a"}, s);
    s = apply(gates::hadamard(), {"b"}, s);
    s = apply(gates::cz(), {"a", "b"}, s);
    Vector want = 0.5 * (oracle::product("00") + oracle::product("01") + oracle::product("10") - oracle::product("11"));
    EXPECT_LT(oracle::max_diff(s.amplitudes(), want), 1e-15);
}

TEST(GateSpec, builds_and_validates) {
    gates::GateSpec bs{gates::GateKind::Beamsplitter, 0.25};
    EXPECT_LT(max_abs_diff(bs.to_op().matrix(), gates::beamsplitter(0.25).matrix()), 1e-15);
    EXPECT_THROW((gates::GateSpec{gates::GateKind::Beamsplitter, 2.0}.validate()), DomainError);
    EXPECT_THROW((gates::GateSpec{gates::GateKind::ControlledRotation, -1.0}.validate()), DomainError);
    EXPECT_EQ(gates::to_string(gates::GateKind::CZ), "CZ");
}
