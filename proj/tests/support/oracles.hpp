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

// Test-only oracles. Everything here is built from explicit Kronecker products
// of single-mode kets, never from the library's apply/gate machinery.

#ifndef NLA_TESTS_ORACLES_HPP
#define NLA_TESTS_ORACLES_HPP

#include <cmath>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "nla/hilbert.hpp"

namespace oracle {

using nla::Complex;
using nla::Matrix;
using nla::Vector;

inline Vector ket(char c) {
    const double r = 1.0 / std::sqrt(2.0);
    Vector v(2);
    switch (c) {
        case '0': v << 1, 0; break;
        case '1': v << 0, 1; break;
        case '+': v << r, r; break;
        case '-': v << r, -r; break;
        default: throw std::invalid_argument("unknown ket symbol");
    }
    return v;
}

inline Vector kron(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

// "0+-1" -> |0>|+>|->|1>
inline Vector product(const std::string& symbols) {
    Vector v = Vector::Ones(1);
    for (char c : symbols) v = kron(v, ket(c));
    return v;
}

struct Term {
    std::string symbols;
    Complex coeff;
};

inline Vector expand(const std::vector<Term>& terms) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(std::size_t{1} << terms.front().symbols.size()));
    for (const auto& t : terms) v += t.coeff * product(t.symbols);
    return v;
}

inline double max_diff(const Vector& a, const Vector& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline Vector random_vector(std::mt19937_64& rng, Eigen::Index dim) {
    std::normal_distribution<double> n(0.0, 1.0);
    Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(n(rng), n(rng));
    return v / v.norm();
}

inline Matrix random_density(std::mt19937_64& rng, Eigen::Index dim) {
    Matrix a(dim, dim);
    std::normal_distribution<double> n(0.0, 1.0);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = Complex(n(rng), n(rng));
    Matrix rho = a * a.adjoint();
    return rho / rho.trace().real();
}

// One-way amplifier state over (I, E, A, F), expanded term by term:
// lossy input {a|00>, b sqrt(g)|10>, b sqrt(1-g)|01>} times resource
// {sqrt(1-t)|00>, sqrt(t)|11>}, CZ sign on I = A = 1, then |0> -> |+>, |1> -> |->
// on I and A.
inline Vector oneway_state(Complex a, Complex b, double g, double t) {
    std::vector<Term> terms;
    const std::vector<std::pair<std::string, Complex>> sig = {
        {"00", a}, {"10", b * std::sqrt(g)}, {"01", b * std::sqrt(1 - g)}};
    const std::vector<std::pair<std::string, double>> res = {{"00", std::sqrt(1 - t)}, {"11", std::sqrt(t)}};
    for (const auto& [si, cs] : sig) {
        for (const auto& [ra, cr] : res) {
            const bool flip = si[0] == '1' && ra[0] == '1';
            std::string sym;
            sym += si[0] == '1' ? '-' : '+';
            sym += si[1];
            sym += ra[0] == '1' ? '-' : '+';
            sym += ra[1];
            terms.push_back({sym, cs * cr * (flip ? -1.0 : 1.0)});
        }
    }
    return expand(terms);
}

// Two-loss state over (S, I, E, A, F, E'), nine terms.
inline Vector two_loss_state(double alpha, double beta, double g, double ga, double t) {
    std::vector<Term> terms;
    const std::vector<std::pair<std::string, double>> sig = {
        {"000", alpha}, {"110", beta * std::sqrt(g)}, {"101", beta * std::sqrt(1 - g)}};
    const std::vector<std::pair<std::string, double>> res = {
        {"000", std::sqrt(1 - t)}, {"110", std::sqrt(t * ga)}, {"011", std::sqrt(t * (1 - ga))}};
    for (const auto& [s, cs] : sig) {
        for (const auto& [r, cr] : res) {
            const bool flip = s[1] == '1' && r[0] == '1';
            std::string sym;
            sym += s[0];
            sym += s[1] == '1' ? '-' : '+';
            sym += s[2];
            sym += r[0] == '1' ? '-' : '+';
            sym += r[1];
            sym += r[2];
            terms.push_back({sym, cs * cr * (flip ? -1.0 : 1.0)});
        }
    }
    return expand(terms);
}

}  // namespace oracle

#endif  // NLA_TESTS_ORACLES_HPP
