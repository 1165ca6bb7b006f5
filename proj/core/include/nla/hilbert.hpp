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

#ifndef NLA_HILBERT_HPP
#define NLA_HILBERT_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace nla {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Targets = std::vector<std::string>;

// Tolerances shared by the whole library.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kEvolutionTol = 1e-10;
inline constexpr double kZeroBranchTol = 1e-15;
inline constexpr std::size_t kMaxModes = 8;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LabelCollisionError : Error {
    using Error::Error;
};
struct UnknownModeError : Error {
    using Error::Error;
};
struct ArityMismatchError : Error {
    using Error::Error;
};
struct ZeroProbabilityError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct LeakageError : Error {
    using Error::Error;
};

/// Ordered list of two-level mode labels. Basis index bits are big-endian in
/// label order: mode 0 is the most significant bit, so the ket |b0 b1 ... b(n-1)>
/// reads left to right like the binary expansion of its index.
class ModeRegister {
   public:
    ModeRegister() = default;
    explicit ModeRegister(std::vector<std::string> labels);
    ModeRegister(std::initializer_list<std::string> labels)
        : ModeRegister(std::vector<std::string>(labels)) {}

    std::size_t size() const { return labels_.size(); }
    std::size_t dim() const { return std::size_t{1} << labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t k) const { return labels_.at(k); }

    bool contains(std::string_view label) const;
    std::size_t index_of(std::string_view label) const;
    // Bit position of mode k inside a basis index.
    std::size_t shift_of(std::size_t k) const { return labels_.size() - 1 - k; }

    ModeRegister concat(const ModeRegister& other) const;
    ModeRegister without(const Targets& drop) const;
    ModeRegister renamed(std::string_view from, std::string to) const;

    // "0110" style string for a basis index.
    std::string bits(std::size_t index) const;
    std::size_t index_of_bits(std::string_view bits) const;

    friend bool operator==(const ModeRegister&, const ModeRegister&) = default;

   private:
    std::vector<std::string> labels_;
};

class LinearOp {
   public:
    LinearOp() = default;
    explicit LinearOp(Matrix m, bool unitary = false);

    std::size_t arity() const { return arity_; }
    std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
    const Matrix& matrix() const { return matrix_; }
    bool flagged_unitary() const { return unitary_; }

    LinearOp adjoint() const;
    // Operator product: (a * b) acts as b first, then a.
    friend LinearOp operator*(const LinearOp& a, const LinearOp& b);

   private:
    Matrix matrix_;
    std::size_t arity_ = 0;
    bool unitary_ = false;
};

class PureState {
   public:
    PureState() = default;
    PureState(ModeRegister modes, Vector amplitudes);

    static PureState basis(ModeRegister modes, std::string_view bits);
    static PureState from_terms(ModeRegister modes,
                                const std::vector<std::pair<std::string, Complex>>& terms);

    const ModeRegister& modes() const { return modes_; }
    const Vector& amplitudes() const { return amps_; }
    std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
    Complex amplitude(std::string_view bits) const;

    double norm_squared() const { return amps_.squaredNorm(); }
    // Throws ZeroProbabilityError when the squared norm is below kZeroBranchTol.
    PureState normalized() const;
    PureState scaled(Complex factor) const;
    PureState renamed(std::string_view from, std::string to) const;
    // Same state expressed over a permutation of its labels.
    PureState reordered(const Targets& order) const;

    PureState& operator+=(const PureState& other);
    friend PureState operator+(PureState a, const PureState& b) { return a += b; }
    friend PureState operator-(PureState a, const PureState& b) { return a += b.scaled(-1.0); }

   private:
    ModeRegister modes_;
    Vector amps_;
};

class DensityOperator {
   public:
    DensityOperator() = default;
    DensityOperator(ModeRegister modes, Matrix matrix);

    // |psi><psi| with no renormalization.
    static DensityOperator from_pure(const PureState& psi);

    const ModeRegister& modes() const { return modes_; }
    const Matrix& matrix() const { return rho_; }
    std::size_t dim() const { return static_cast<std::size_t>(rho_.rows()); }

    double trace() const { return rho_.trace().real(); }
    DensityOperator normalized() const;
    DensityOperator reordered(const Targets& order) const;
    // Hermitian, unit trace, and eigenvalues above -kEvolutionTol.
    bool is_valid(double tol = kAlgebraTol) const;
    double population(std::string_view bits) const;

   private:
    ModeRegister modes_;
    Matrix rho_;
};

PureState tensor(const PureState& a, const PureState& b);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);
LinearOp tensor(const LinearOp& a, const LinearOp& b);

// Full-register matrix of `op` acting on `targets` (in the given order).
Matrix embed(const LinearOp& op, const Targets& targets, const ModeRegister& modes);

PureState apply(const LinearOp& op, const Targets& targets, const PureState& s);
// rho -> A rho A^dagger
DensityOperator apply(const LinearOp& op, const Targets& targets, const DensityOperator& rho);

struct Projection {
    double probability = 0.0;
    PureState state;
};

// Born rule with the square-root (Lueders) update. `element` must be PSD.
Projection project(const PureState& s, const LinearOp& element, const Targets& targets);
double expectation(const PureState& s, const LinearOp& op, const Targets& targets);

// Partial inner product <bra|s> over the bra's modes; the rest of the register
// survives unnormalized.
PureState contract(const PureState& s, const PureState& bra);

DensityOperator partial_trace(const DensityOperator& rho, const Targets& keep);
DensityOperator partial_trace(const PureState& s, const Targets& keep);

Complex inner(const PureState& a, const PureState& b);
// Compares normalized copies: |<a|b>| >= 1 - tol.
bool states_equal_up_to_phase(const PureState& a, const PureState& b, double tol = kAlgebraTol);
// <psi|rho|psi> for normalized psi.
double fidelity(const DensityOperator& rho, const PureState& psi);
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace nla

#endif  // NLA_HILBERT_HPP
