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

#include "nla/protocols.hpp"

#include <cmath>
#include <limits>

#include "nla/channels.hpp"
#include "nla/gates.hpp"

namespace nla::protocols {

namespace {

void require_unit(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw DomainError(std::string(what) + " must lie in [0, 1], got " + std::to_string(v));
    }
}

PureState input_qubit(const AmplifierConfig& c, const std::string& label) {
    Vector v(2);
    v << c.alpha, c.beta;
    return PureState(ModeRegister({label}), std::move(v));
}

PureState single_mode(const std::string& label, const Vector& ket) {
    return PureState(ModeRegister({label}), ket);
}

// Single-photon weight carried by `signal` after the loss, taken from the
// simulated state rather than from beta^2 gamma.
double incoming_photon_weight(const PureState& lossy, const std::string& signal) {
    return partial_trace(lossy, {signal}).population("1");
}

void attach_gain(Branch& b, double incoming) {
    if (!b.output || incoming < kZeroBranchTol) return;
    b.gain = b.output->population("1") / incoming;
}

}  // namespace

void AmplifierConfig::validate() const {
    const double n = std::norm(alpha) + std::norm(beta);
    if (std::abs(n - 1.0) > kAlgebraTol) {
        throw DomainError("input amplitudes must satisfy |alpha|^2 + |beta|^2 = 1, got " +
                          std::to_string(n));
    }
    require_unit(gamma, "gamma");
    require_unit(t, "t");
    detector1.validate();
    detector2.validate();
}

AmplifierConfig AmplifierConfig::from_alpha2(double alpha2, double gamma, double t,
                                             DetectorModel d1, DetectorModel d2) {
    require_unit(alpha2, "alpha^2");
    AmplifierConfig c;
    c.alpha = std::sqrt(alpha2);
    c.beta = std::sqrt(1.0 - alpha2);
    c.gamma = gamma;
    c.t = t;
    c.detector1 = d1;
    c.detector2 = d2;
    c.validate();
    return c;
}

std::string to_string(OperatingPoint op) { return op == OperatingPoint::OP1 ? "OP1" : "OP2"; }

double ProtocolResult::total_success() const {
    return branches[0].success_probability + branches[1].success_probability;
}

void check_no_leakage(const PureState& s, const std::string& a, const std::string& b, double tol) {
    const std::size_t pa = s.modes().shift_of(s.modes().index_of(a));
    const std::size_t pb = s.modes().shift_of(s.modes().index_of(b));
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (((i >> pa) & 1u) && ((i >> pb) & 1u)) {
            const double amp = std::abs(s.amplitudes()(static_cast<Eigen::Index>(i)));
            if (amp >= tol) {
                throw LeakageError("modes " + a + " and " + b + " share two excitations (amplitude " +
                                   std::to_string(amp) + ")");
            }
        }
    }
}

ProtocolResult bell_measure(const PureState& state, const BsmLayout& layout,
                            const DetectorModel& detector1, const DetectorModel& detector2) {
    const Targets measured{layout.first, layout.second};
    ProtocolResult r;
    r.outcomes = detectors::outcome_probabilities(
        state, measured, detectors::joint_observables(detector1, detector2, layout.basis));

    const std::array<Vector, 2> kets{detectors::idle_ket(layout.basis),
                                     detectors::click_ket(layout.basis)};
    Vector zero(2), one(2);
    zero << 1.0, 0.0;
    one << 0.0, 1.0;

    auto node = [&](const std::string& mode, const std::string& companion, int click) {
        PureState k = single_mode(mode, kets[static_cast<std::size_t>(click)]);
        if (!companion.empty()) k = tensor(k, single_mode(companion, click ? zero : one));
        return k;
    };
    auto branch_ket = [&](int l) {
        return contract(state, tensor(node(layout.first, layout.first_companion, l >> 1),
                                      node(layout.second, layout.second_companion, l & 1)));
    };

    constexpr std::array<std::array<int, 2>, 2> pairs{{{0, 3}, {1, 2}}};
    for (std::size_t op = 0; op < 2; ++op) {
        const auto [a, b] = pairs[op];
        const auto& oa = r.outcomes.outcomes[static_cast<std::size_t>(a)];
        const auto& ob = r.outcomes.outcomes[static_cast<std::size_t>(b)];
        Branch& br = r.branches[op];
        br.weight = oa.pattern + ob.pattern;
        br.success_probability = oa.heralded + ob.heralded;
        br.registered_probability = oa.registered + ob.registered;

        PureState combo = branch_ket(a) + branch_ket(b).scaled(layout.relative_sign[op]);
        if (combo.norm_squared() < kZeroBranchTol) continue;
        br.raw = combo.normalized();
        PureState fixed = *br.raw;
        for (const auto& ff : layout.corrections[op]) fixed = apply(ff.op, ff.targets, fixed);
        br.corrected = fixed;
        br.output = partial_trace(fixed, layout.keep.empty() ? fixed.modes().labels() : layout.keep);
    }
    return r;
}

// ------------------------------------------------------------------- scissors

PureState qs_nla_build(const AmplifierConfig& config, double aux_gamma) {
    config.validate();
    PureState sig = channels::adc_beamsplitter(config.gamma, input_qubit(config, "I"), "I", "E");
    check_no_leakage(sig, "I", "E");
    return qs_nla_attach(sig, config.t, aux_gamma);
}

PureState qs_nla_attach(const PureState& lossy, double t, double aux_gamma) {
    require_unit(t, "t");
    require_unit(aux_gamma, "auxiliary survivability");
    PureState aux = PureState::basis(ModeRegister({"A", "F"}), "01");
    aux = apply(gates::beamsplitter(t), {"F", "A"}, aux);
    check_no_leakage(aux, "F", "A");
    if (aux_gamma < 1.0) aux = channels::adc_beamsplitter(aux_gamma, aux, "A", "E'");

    // Balanced splitter; the I slot becomes D+ and the A slot D-. Two photons
    // arriving together stay in |11> and fire both detectors, which is a failure.
    return apply(gates::beamsplitter(0.5), {"A", "I"}, tensor(lossy, aux));
}

ScissorsResult qs_nla_measure(const PureState& state, const DetectorModel& d_plus,
                              const DetectorModel& d_minus, const Targets& keep) {
    using detectors::DetectionBasis;
    const Targets measured{"I", "A"};
    ScissorsResult r;
    r.outcomes = detectors::outcome_probabilities(
        state, measured, detectors::joint_observables(d_plus, d_minus, DetectionBasis::Number));

    auto fill = [&](Branch& br, int pattern, bool flip) {
        const auto& o = r.outcomes.outcomes[static_cast<std::size_t>(pattern)];
        br.weight = o.pattern;
        br.success_probability = o.heralded;
        br.registered_probability = o.registered;
        PureState bra = PureState::basis(ModeRegister({"I", "A"}), pattern == 2 ? "10" : "01");
        PureState phi = contract(state, bra);
        if (phi.norm_squared() < kZeroBranchTol) return;
        br.raw = phi.normalized();
        br.corrected = flip ? apply(gates::pauli_z(), {"F"}, *br.raw) : *br.raw;
        br.output = partial_trace(*br.corrected, keep);
    };
    fill(r.plus, 2, false);
    fill(r.minus, 1, true);
    r.success_probability = r.plus.success_probability + r.minus.success_probability;
    r.weight = r.plus.weight + r.minus.weight;
    return r;
}

ScissorsResult qs_nla_run(const AmplifierConfig& config) {
    PureState state = qs_nla_build(config);
    ScissorsResult r = qs_nla_measure(state, config.detector1, config.detector2, {"F"});
    const double incoming = incoming_photon_weight(
        channels::adc_beamsplitter(config.gamma, input_qubit(config, "I"), "I", "E"), "I");
    attach_gain(r.plus, incoming);
    attach_gain(r.minus, incoming);
    r.gain = r.plus.gain ? r.plus.gain : r.minus.gain;
    return r;
}

// -------------------------------------------------------------------- one-way

PureState oneway_build(const AmplifierConfig& config) {
    config.validate();
    PureState sig = channels::adc_gate_model(config.gamma, input_qubit(config, "I"), "I", "E");

    Vector a(2);
    a << std::sqrt(1.0 - config.t), std::sqrt(config.t);
    Vector plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    PureState res = tensor(single_mode("A", a), single_mode("F", plus));
    res = apply(gates::cz(), {"A", "F"}, res);
    res = apply(gates::hadamard(), {"F"}, res);

    PureState s = tensor(sig, res);
    s = apply(gates::cz(), {"I", "A"}, s);
    s = apply(gates::hadamard(), {"I"}, s);
    return apply(gates::hadamard(), {"A"}, s);
}

BsmLayout oneway_layout() {
    BsmLayout l;
    l.first = "I";
    l.second = "A";
    l.relative_sign = {1.0, -1.0};
    l.corrections[0] = {FeedForward{gates::pauli_z(), {"F"}}};
    l.corrections[1] = {FeedForward{gates::pauli_x(), {"F"}}, FeedForward{gates::pauli_z(), {"F"}}};
    l.keep = {"F"};
    return l;
}

ProtocolResult oneway_measure_and_correct(const PureState& state, const DetectorModel& detector1,
                                          const DetectorModel& detector2) {
    return bell_measure(state, oneway_layout(), detector1, detector2);
}

ProtocolResult oneway_run(const AmplifierConfig& config) {
    ProtocolResult r = oneway_measure_and_correct(oneway_build(config), config.detector1, config.detector2);
    const double incoming = incoming_photon_weight(
        channels::adc_gate_model(config.gamma, input_qubit(config, "I"), "I", "E"), "I");
    for (auto& b : r.branches) attach_gain(b, incoming);
    return r;
}

// --------------------------------------------------------------- closed forms

double branch_norm(const AmplifierConfig& c, OperatingPoint op) {
    const double a2 = c.alpha2(), b2 = c.beta2(), g = c.gamma, t = c.t;
    if (op == OperatingPoint::OP1) return a2 * (1.0 - t) + b2 * (g * t + (1.0 - g) * (1.0 - t));
    return a2 * t + b2 * (g * (1.0 - t) + t * (1.0 - g));
}

double gain_closed_form(const AmplifierConfig& c, OperatingPoint op) {
    c.validate();
    const double n = branch_norm(c, op);
    const double num = op == OperatingPoint::OP1 ? c.t : 1.0 - c.t;
    if (n <= 0.0) return std::numeric_limits<double>::infinity();
    return num / n;
}

std::array<double, 4> herald_probabilities_closed_form(const AmplifierConfig& c) {
    c.validate();
    const double a2 = c.alpha2(), b2 = c.beta2(), g = c.gamma, t = c.t;
    const auto& d1 = c.detector1;
    const auto& d2 = c.detector2;
    const double off1 = 1.0 - d1.mu, off2 = 1.0 - d2.mu;
    const double on1 = d1.mu * (1.0 - d1.eta) + d1.eta;
    const double on2 = d2.mu * (1.0 - d2.eta) + d2.eta;
    const double stay = a2 + b2 * (1.0 - g);
    return {off1 * off2 * (1.0 - t) * stay,
            off1 * on2 * (a2 * t + b2 * t * (1.0 - g)),
            on1 * off2 * b2 * g * (1.0 - t),
            on1 * on2 * b2 * g * t};
}

double success_probability_closed_form(const AmplifierConfig& c, OperatingPoint op) {
    const auto p = herald_probabilities_closed_form(c);
    return op == OperatingPoint::OP1 ? p[0] + p[3] : p[1] + p[2];
}

double qs_success_probability_closed_form(const AmplifierConfig& c) {
    c.validate();
    const double a2 = c.alpha2(), b2 = c.beta2(), g = c.gamma, t = c.t;
    return a2 * (1.0 - t) + b2 * (g * t + (1.0 - g) * (1.0 - t));
}

PureState nla_reference(const PureState& qubit, double g) {
    if (qubit.modes().size() != 1) throw ArityMismatchError("reference gain acts on one mode");
    if (!(g >= 0.0) || !std::isfinite(g)) throw DomainError("gain must be finite and nonnegative");
    Vector v = qubit.amplitudes();
    v(1) *= g;
    return PureState(qubit.modes(), std::move(v)).normalized();
}

}  // namespace nla::protocols
