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

#include "nla/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/Eigenvalues>

namespace nla {

namespace {

// Bit positions (inside a full basis index) of the listed modes.
std::vector<std::size_t> positions(const ModeRegister& modes, const Targets& targets) {
    std::vector<std::size_t> out;
    out.reserve(targets.size());
    for (const auto& t : targets) {
        out.push_back(modes.shift_of(modes.index_of(t)));
    }
    return out;
}

// Sub-index formed by reading the bits at `pos` in order (first = most significant).
std::size_t gather(std::size_t index, const std::vector<std::size_t>& pos) {
    std::size_t r = 0;
    for (std::size_t p : pos) {
        r = (r << 1) | ((index >> p) & 1u);
    }
    return r;
}

// Inverse of gather: spread the bits of `sub` onto `pos`.
std::size_t scatter(std::size_t sub, const std::vector<std::size_t>& pos) {
    std::size_t r = 0;
    const std::size_t k = pos.size();
    for (std::size_t j = 0; j < k; ++j) {
        r |= ((sub >> (k - 1 - j)) & 1u) << pos[j];
    }
    return r;
}

std::size_t arity_from_dim(Eigen::Index dim) {
    if (dim <= 0) throw ArityMismatchError("operator has zero dimension");
    std::size_t n = 0;
    auto d = static_cast<std::size_t>(dim);
    while ((std::size_t{1} << n) < d) ++n;
    if ((std::size_t{1} << n) != d) {
        throw ArityMismatchError("operator dimension " + std::to_string(d) + " is not a power of two");
    }
    return n;
}

void check_targets(const ModeRegister& modes, const Targets& targets, std::size_t arity) {
    if (targets.size() != arity) {
        throw ArityMismatchError("operator acts on " + std::to_string(arity) + " modes but " +
                                 std::to_string(targets.size()) + " targets were given");
    }
    std::set<std::string> seen;
    for (const auto& t : targets) {
        if (!modes.contains(t)) throw UnknownModeError("unknown mode '" + t + "'");
        if (!seen.insert(t).second) throw ArityMismatchError("target '" + t + "' listed twice");
    }
}

void require_same_register(const ModeRegister& a, const ModeRegister& b) {
    if (!(a == b)) throw ArityMismatchError("register mismatch");
}

}  // namespace

// ---------------------------------------------------------------- ModeRegister

ModeRegister::ModeRegister(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw ArityMismatchError("a register needs at least one mode");
    if (labels_.size() > kMaxModes) {
        throw ArityMismatchError("registers are limited to " + std::to_string(kMaxModes) + " modes");
    }
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw UnknownModeError("empty mode label");
        if (!seen.insert(l).second) throw LabelCollisionError("duplicate mode label '" + l + "'");
    }
}

bool ModeRegister::contains(std::string_view label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t ModeRegister::index_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw UnknownModeError("unknown mode '" + std::string(label) + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

ModeRegister ModeRegister::concat(const ModeRegister& other) const {
    std::vector<std::string> all = labels_;
    for (const auto& l : other.labels_) {
        if (contains(l)) throw LabelCollisionError("mode '" + l + "' appears in both registers");
        all.push_back(l);
    }
    return ModeRegister(std::move(all));
}

ModeRegister ModeRegister::without(const Targets& drop) const {
    for (const auto& d : drop) index_of(d);
    std::vector<std::string> rest;
    for (const auto& l : labels_) {
        if (std::find(drop.begin(), drop.end(), l) == drop.end()) rest.push_back(l);
    }
    return ModeRegister(std::move(rest));
}

ModeRegister ModeRegister::renamed(std::string_view from, std::string to) const {
    std::vector<std::string> out = labels_;
    out[index_of(from)] = std::move(to);
    return ModeRegister(std::move(out));
}

std::string ModeRegister::bits(std::size_t index) const {
    std::string s(size(), '0');
    for (std::size_t k = 0; k < size(); ++k) {
        if ((index >> shift_of(k)) & 1u) s[k] = '1';
    }
    return s;
}

std::size_t ModeRegister::index_of_bits(std::string_view bits) const {
    if (bits.size() != size()) {
        throw ArityMismatchError("bitstring '" + std::string(bits) + "' does not match a " +
                                 std::to_string(size()) + "-mode register");
    }
    std::size_t r = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw DomainError("bitstring may only contain 0 and 1");
        r = (r << 1) | static_cast<std::size_t>(c == '1');
    }
    return r;
}

// -------------------------------------------------------------------- LinearOp

LinearOp::LinearOp(Matrix m, bool unitary) : matrix_(std::move(m)), unitary_(unitary) {
    if (matrix_.rows() != matrix_.cols()) throw ArityMismatchError("operator must be square");
    arity_ = arity_from_dim(matrix_.rows());
    if (!matrix_.allFinite()) throw DomainError("operator has non-finite entries");
    if (unitary_) {
        Matrix check = matrix_.adjoint() * matrix_ - Matrix::Identity(matrix_.rows(), matrix_.cols());
        if (check.cwiseAbs().maxCoeff() > kAlgebraTol) {
            throw DomainError("operator flagged unitary is not unitary");
        }
    }
}

LinearOp LinearOp::adjoint() const { return LinearOp(matrix_.adjoint(), unitary_); }

LinearOp operator*(const LinearOp& a, const LinearOp& b) {
    if (a.dim() != b.dim()) throw ArityMismatchError("operator product of different arities");
    Matrix m = a.matrix() * b.matrix();
    return LinearOp(std::move(m), a.flagged_unitary() && b.flagged_unitary());
}

// ------------------------------------------------------------------- PureState

PureState::PureState(ModeRegister modes, Vector amplitudes)
    : modes_(std::move(modes)), amps_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amps_.size()) != modes_.dim()) {
        throw ArityMismatchError("amplitude vector length does not match register dimension");
    }
}

PureState PureState::basis(ModeRegister modes, std::string_view bits) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(modes.dim()));
    v(static_cast<Eigen::Index>(modes.index_of_bits(bits))) = 1.0;
    return PureState(std::move(modes), std::move(v));
}

PureState PureState::from_terms(ModeRegister modes,
                                const std::vector<std::pair<std::string, Complex>>& terms) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(modes.dim()));
    for (const auto& [bits, c] : terms) {
        v(static_cast<Eigen::Index>(modes.index_of_bits(bits))) += c;
    }
    return PureState(std::move(modes), std::move(v));
}

Complex PureState::amplitude(std::string_view bits) const {
    return amps_(static_cast<Eigen::Index>(modes_.index_of_bits(bits)));
}

PureState PureState::normalized() const {
    double n2 = norm_squared();
    if (n2 < kZeroBranchTol) throw ZeroProbabilityError("cannot normalize a zero-norm state");
    return PureState(modes_, amps_ / std::sqrt(n2));
}

PureState PureState::scaled(Complex factor) const { return PureState(modes_, amps_ * factor); }

PureState PureState::renamed(std::string_view from, std::string to) const {
    return PureState(modes_.renamed(from, std::move(to)), amps_);
}

PureState PureState::reordered(const Targets& order) const {
    ModeRegister target(order);
    if (target.size() != modes_.size()) throw ArityMismatchError("reorder must list every mode");
    auto pos = positions(modes_, order);
    Vector v(amps_.size());
    for (std::size_t i = 0; i < dim(); ++i) {
        v(static_cast<Eigen::Index>(gather(i, pos))) = amps_(static_cast<Eigen::Index>(i));
    }
    return PureState(std::move(target), std::move(v));
}

PureState& PureState::operator+=(const PureState& other) {
    require_same_register(modes_, other.modes_);
    amps_ += other.amps_;
    return *this;
}

// ------------------------------------------------------------- DensityOperator

DensityOperator::DensityOperator(ModeRegister modes, Matrix matrix)
    : modes_(std::move(modes)), rho_(std::move(matrix)) {
    if (rho_.rows() != rho_.cols() || static_cast<std::size_t>(rho_.rows()) != modes_.dim()) {
        throw ArityMismatchError("density matrix dimension does not match register");
    }
}

DensityOperator DensityOperator::from_pure(const PureState& psi) {
    return DensityOperator(psi.modes(), psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityOperator DensityOperator::normalized() const {
    double tr = trace();
    if (tr < kZeroBranchTol) throw ZeroProbabilityError("cannot normalize a zero-trace operator");
    return DensityOperator(modes_, rho_ / tr);
}

DensityOperator DensityOperator::reordered(const Targets& order) const {
    ModeRegister target(order);
    if (target.size() != modes_.size()) throw ArityMismatchError("reorder must list every mode");
    auto pos = positions(modes_, order);
    std::vector<std::size_t> map(dim());
    for (std::size_t i = 0; i < dim(); ++i) map[i] = gather(i, pos);
    Matrix m(rho_.rows(), rho_.cols());
    for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = 0; j < dim(); ++j) {
            m(static_cast<Eigen::Index>(map[i]), static_cast<Eigen::Index>(map[j])) =
                rho_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return DensityOperator(std::move(target), std::move(m));
}

bool DensityOperator::is_valid(double tol) const {
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    if (std::abs(rho_.trace() - Complex(1.0)) > tol) return false;
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho_);
    return es.eigenvalues().minCoeff() >= -kEvolutionTol;
}

double DensityOperator::population(std::string_view bits) const {
    auto i = static_cast<Eigen::Index>(modes_.index_of_bits(bits));
    return rho_(i, i).real();
}

// --------------------------------------------------------------------- tensor

PureState tensor(const PureState& a, const PureState& b) {
    ModeRegister modes = a.modes().concat(b.modes());
    Vector v(static_cast<Eigen::Index>(modes.dim()));
    const auto nb = static_cast<Eigen::Index>(b.dim());
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(a.dim()); ++i) {
        v.segment(i * nb, nb) = a.amplitudes()(i) * b.amplitudes();
    }
    return PureState(std::move(modes), std::move(v));
}

namespace {
Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}
}  // namespace

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
    ModeRegister modes = a.modes().concat(b.modes());
    return DensityOperator(std::move(modes), kron(a.matrix(), b.matrix()));
}

LinearOp tensor(const LinearOp& a, const LinearOp& b) {
    return LinearOp(kron(a.matrix(), b.matrix()), a.flagged_unitary() && b.flagged_unitary());
}

// ---------------------------------------------------------------------- apply

Matrix embed(const LinearOp& op, const Targets& targets, const ModeRegister& modes) {
    check_targets(modes, targets, op.arity());
    auto pos = positions(modes, targets);
    std::size_t mask = scatter(op.dim() - 1, pos);
    const auto n = static_cast<Eigen::Index>(modes.dim());
    Matrix full = Matrix::Zero(n, n);
    for (std::size_t base = 0; base < modes.dim(); ++base) {
        if (base & mask) continue;
        for (std::size_t r = 0; r < op.dim(); ++r) {
            for (std::size_t c = 0; c < op.dim(); ++c) {
                full(static_cast<Eigen::Index>(base | scatter(r, pos)),
                     static_cast<Eigen::Index>(base | scatter(c, pos))) =
                    op.matrix()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
            }
        }
    }
    return full;
}

PureState apply(const LinearOp& op, const Targets& targets, const PureState& s) {
    check_targets(s.modes(), targets, op.arity());
    auto pos = positions(s.modes(), targets);
    std::size_t mask = scatter(op.dim() - 1, pos);
    const auto k = static_cast<Eigen::Index>(op.dim());
    std::vector<std::size_t> idx(op.dim());
    Vector local(k);
    Vector out = s.amplitudes();
    for (std::size_t base = 0; base < s.dim(); ++base) {
        if (base & mask) continue;
        for (std::size_t j = 0; j < op.dim(); ++j) {
            idx[j] = base | scatter(j, pos);
            local(static_cast<Eigen::Index>(j)) = s.amplitudes()(static_cast<Eigen::Index>(idx[j]));
        }
        Vector moved = op.matrix() * local;
        for (std::size_t j = 0; j < op.dim(); ++j) {
            out(static_cast<Eigen::Index>(idx[j])) = moved(static_cast<Eigen::Index>(j));
        }
    }
    return PureState(s.modes(), std::move(out));
}

DensityOperator apply(const LinearOp& op, const Targets& targets, const DensityOperator& rho) {
    Matrix e = embed(op, targets, rho.modes());
    return DensityOperator(rho.modes(), e * rho.matrix() * e.adjoint());
}

// ---------------------------------------------------------------- measurement

double expectation(const PureState& s, const LinearOp& op, const Targets& targets) {
    PureState moved = apply(op, targets, s);
    return s.amplitudes().dot(moved.amplitudes()).real();
}

Projection project(const PureState& s, const LinearOp& element, const Targets& targets) {
    const Matrix& m = element.matrix();
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kAlgebraTol) {
        throw DomainError("measurement element is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    if (es.eigenvalues().minCoeff() < -kAlgebraTol) {
        throw DomainError("measurement element is not positive semidefinite");
    }
    Eigen::VectorXd roots = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    Matrix sqrt_m = es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();

    double p = expectation(s, element, targets);
    if (p < kZeroBranchTol) {
        throw ZeroProbabilityError("measurement branch has probability " + std::to_string(p));
    }
    PureState post = apply(LinearOp(sqrt_m), targets, s);
    return {p, post.normalized()};
}

PureState contract(const PureState& s, const PureState& bra) {
    Targets bra_labels = bra.modes().labels();
    ModeRegister rest = s.modes().without(bra_labels);
    auto bra_pos = positions(s.modes(), bra_labels);
    auto rest_pos = positions(s.modes(), rest.labels());
    Vector out = Vector::Zero(static_cast<Eigen::Index>(rest.dim()));
    for (std::size_t i = 0; i < s.dim(); ++i) {
        auto b = static_cast<Eigen::Index>(gather(i, bra_pos));
        auto r = static_cast<Eigen::Index>(gather(i, rest_pos));
        out(r) += std::conj(bra.amplitudes()(b)) * s.amplitudes()(static_cast<Eigen::Index>(i));
    }
    return PureState(std::move(rest), std::move(out));
}

DensityOperator partial_trace(const DensityOperator& rho, const Targets& keep) {
    if (keep.empty()) throw ArityMismatchError("partial trace needs a nonempty keep set");
    ModeRegister kept(keep);
    for (const auto& k : keep) rho.modes().index_of(k);
    Targets traced;
    for (const auto& l : rho.modes().labels()) {
        if (!kept.contains(l)) traced.push_back(l);
    }
    auto keep_pos = positions(rho.modes(), keep);
    auto trace_pos = positions(rho.modes(), traced);
    std::vector<std::size_t> ki(rho.dim()), ti(rho.dim());
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        ki[i] = gather(i, keep_pos);
        ti[i] = gather(i, trace_pos);
    }
    const auto n = static_cast<Eigen::Index>(kept.dim());
    Matrix out = Matrix::Zero(n, n);
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            if (ti[i] != ti[j]) continue;
            out(static_cast<Eigen::Index>(ki[i]), static_cast<Eigen::Index>(ki[j])) +=
                rho.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return DensityOperator(std::move(kept), std::move(out));
}

DensityOperator partial_trace(const PureState& s, const Targets& keep) {
    return partial_trace(DensityOperator::from_pure(s), keep);
}

// ------------------------------------------------------------------ comparison

Complex inner(const PureState& a, const PureState& b) {
    require_same_register(a.modes(), b.modes());
    return a.amplitudes().dot(b.amplitudes());
}

bool states_equal_up_to_phase(const PureState& a, const PureState& b, double tol) {
    require_same_register(a.modes(), b.modes());
    return std::abs(inner(a.normalized(), b.normalized())) >= 1.0 - tol;
}

double fidelity(const DensityOperator& rho, const PureState& psi) {
    require_same_register(rho.modes(), psi.modes());
    return psi.amplitudes().dot(rho.matrix() * psi.amplitudes()).real();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ArityMismatchError("matrix shapes differ");
    }
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace nla
