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

#include "nla/applications.hpp"

#include <cmath>
#include <limits>

#include "nla/gates.hpp"

namespace nla::applications {

namespace {

using protocols::BsmLayout;
using protocols::FeedForward;

void require_unit(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw DomainError(std::string(what) + " must lie in [0, 1], got " + std::to_string(v));
    }
}

// sqrt(1-t)|00> + sqrt(t)|11> on (A, F): a two-node cluster with a Hadamard on F.
PureState cluster_resource(double t) {
    require_unit(t, "t");
    Vector a(2);
    a << std::sqrt(1.0 - t), std::sqrt(t);
    Vector plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    PureState res = tensor(PureState(ModeRegister({"A"}), a), PureState(ModeRegister({"F"}), plus));
    res = apply(gates::cz(), {"A", "F"}, res);
    return apply(gates::hadamard(), {"F"}, res);
}

PureState entangle_and_rotate(PureState s) {
    s = apply(gates::cz(), {"I", "A"}, s);
    s = apply(gates::hadamard(), {"I"}, s);
    return apply(gates::hadamard(), {"A"}, s);
}

BsmLayout signal_idler_layout() {
    BsmLayout l = protocols::oneway_layout();
    l.keep = {"S", "F"};
    return l;
}

}  // namespace

// ----------------------------------------------------------------------- TMSV

void TmsvParams::validate() const {
    if (!(mean_photon_number >= 0.0) || !std::isfinite(mean_photon_number)) {
        throw DomainError("mean photon number must be finite and nonnegative");
    }
}

double TmsvParams::lambda() const { return std::sqrt(lambda2()); }
double TmsvParams::alpha() const { return std::sqrt(1.0 - lambda2()); }
double TmsvParams::beta() const { return lambda() * std::sqrt(1.0 - lambda2()); }
double TmsvParams::truncation_weight() const {
    const double l2 = lambda2();
    return 1.0 - l2 * l2;
}

TruncatedTmsv tmsv_truncated(const TmsvParams& params, double gamma) {
    params.validate();
    require_unit(gamma, "gamma");
    TruncatedTmsv out;
    PureState pair = PureState::from_terms(ModeRegister({"S", "I"}),
                                           {{"00", params.alpha()}, {"11", params.beta()}});
    out.state = channels::adc_beamsplitter(gamma, pair, "I", "E");
    out.weight = params.truncation_weight();
    if (!params.truncation_valid()) {
        out.warnings.push_back("mean photon number " + std::to_string(params.mean_photon_number) +
                               " exceeds 0.1; first-order truncation is unreliable");
    }
    if (1.0 - out.weight > 0.01) {
        out.warnings.push_back("truncation discards " + std::to_string(100.0 * (1.0 - out.weight)) +
                               "% of the pair-source weight");
    }
    return out;
}

// -------------------------------------------------------------------- sensing

SensingResult sensing_restore(const TmsvParams& params, double gamma, double t,
                              const DetectorModel& detector1, const DetectorModel& detector2) {
    SensingResult r;
    r.input = tmsv_truncated(params, gamma);
    PureState s = entangle_and_rotate(tensor(r.input.state, cluster_resource(t)));
    r.protocol = protocols::bell_measure(s, signal_idler_layout(), detector1, detector2);

    const double w = r.input.weight;
    const double lossy_pair = partial_trace(r.input.state.normalized(), {"S", "I"}).population("11");
    for (std::size_t op = 0; op < 2; ++op) {
        const auto& b = r.protocol.branches[op];
        r.success[op] = b.success_probability / w;
        r.ideal_success[op] = b.weight / w;
        if (b.output && lossy_pair >= kZeroBranchTol) {
            r.gain[op] = b.output->population("11") / lossy_pair;
        }
    }
    return r;
}

double full_restoration_t(double alpha2, double gamma, OperatingPoint op) {
    require_unit(alpha2, "alpha^2");
    require_unit(gamma, "gamma");
    auto excess = [&](double t) {
        auto c = protocols::AmplifierConfig::from_alpha2(alpha2, gamma, t);
        const double g = protocols::gain_closed_form(c, op);
        return std::isinf(g) ? 1.0 : gamma * g - 1.0;
    };
    // OP1 gain rises with t, OP2 gain falls; orient the bracket accordingly.
    double lo = 0.0, hi = 1.0;
    const bool rising = op == OperatingPoint::OP1;
    double f_lo = excess(lo), f_hi = excess(hi);
    if (!rising) std::swap(f_lo, f_hi);
    if (f_lo > 0.0 || f_hi < 0.0) {
        throw DomainError("no splitter setting restores the lossless photon weight");
    }
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        const double f = excess(mid);
        if ((f < 0.0) == rising) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double full_restoration_t(const TmsvParams& params, double gamma, OperatingPoint op) {
    params.validate();
    const double a2 = params.alpha() * params.alpha();
    const double b2 = params.beta() * params.beta();
    return full_restoration_t(a2 / (a2 + b2), gamma, op);
}

double required_pairs(double target_pairs, double success_probability) {
    if (!(success_probability > 0.0 && success_probability <= 1.0)) {
        throw DomainError("success probability must lie in (0, 1]");
    }
    if (!(target_pairs >= 0.0)) throw DomainError("target pair count must be nonnegative");
    return target_pairs / success_probability;
}

// ------------------------------------------------------- remote entanglement

PureState remote_pairs_build() {
    const double r = 1.0 / std::sqrt(2.0);
    auto pair = [&](const std::string& photon, const std::string& transmon) {
        return PureState::from_terms(ModeRegister({photon, transmon}), {{"01", r}, {"10", r}});
    };
    PureState s = tensor(tensor(pair("S", "s"), pair("I", "i")), tensor(pair("A", "a"), pair("F", "f")));
    s = apply(gates::cz(), {"S", "I"}, s);
    s = apply(gates::cz(), {"A", "F"}, s);
    return entangle_and_rotate(s);
}

EntanglementResult remote_entangle(const DetectorModel& detector1, const DetectorModel& detector2) {
    BsmLayout l;
    l.first = "I";
    l.second = "A";
    l.first_companion = "i";
    l.second_companion = "a";
    l.relative_sign = {1.0, 1.0};
    l.corrections[1] = {FeedForward{gates::pauli_x(), {"F"}}, FeedForward{gates::pauli_x(), {"f"}},
                        FeedForward{gates::pauli_z(), {"F"}}};
    l.keep = {"S", "F", "s", "f"};

    EntanglementResult r;
    r.protocol = protocols::bell_measure(remote_pairs_build(), l, detector1, detector2);
    const double h = 1.0 / std::sqrt(2.0);
    r.target = PureState::from_terms(ModeRegister({"S", "F", "s", "f"}), {{"0110", h}, {"1001", h}});
    for (std::size_t op = 0; op < 2; ++op) {
        const auto& out = r.protocol.branches[op].output;
        r.fidelity[op] = out ? fidelity(*out, r.target) : 0.0;
    }
    r.mean_success = 0.5 * r.protocol.total_success();
    return r;
}

// ------------------------------------------------------------------------ SKR

void SkrScenario::validate() const {
    link.validate();
    require_unit(t, "t");
    tmsv.validate();
    detector1.validate();
    detector2.validate();
    if (repeater_links != 1 && repeater_links != 2) throw DomainError("K must be 1 or 2");
}

PureState skr_build(const TmsvParams& tmsv, double gamma, double gamma_aux, double t) {
    PureState res = channels::adc_beamsplitter(gamma_aux, cluster_resource(t), "A", "E'");
    return entangle_and_rotate(tensor(tmsv_truncated(tmsv, gamma).state, res));
}

SkrResult skr_protocol(const TmsvParams& tmsv, double gamma, double gamma_aux, double t,
                       const DetectorModel& detector1, const DetectorModel& detector2) {
    require_unit(gamma_aux, "auxiliary survivability");
    SkrResult r;
    r.gamma = gamma;
    r.gamma_aux = gamma_aux;
    r.chi = gamma * gamma_aux;
    r.truncation_weight = tmsv.truncation_weight();
    r.protocol = protocols::bell_measure(skr_build(tmsv, gamma, gamma_aux, t), signal_idler_layout(),
                                         detector1, detector2);
    for (std::size_t op = 0; op < 2; ++op) {
        const auto& b = r.protocol.branches[op];
        r.norm[op] = b.weight;
        r.success[op] = b.success_probability / r.truncation_weight;
        r.skr[op] = skr_from_success(r.success[op]);
        if (b.corrected) {
            const Complex a = b.corrected->reordered({"S", "F", "E", "E'"}).amplitude("1100");
            r.signal[op] = std::norm(a) * b.weight;
        }
    }
    const double a2 = tmsv.alpha() * tmsv.alpha();
    const double b2 = tmsv.beta() * tmsv.beta();
    r.approx_same = a2 * (1.0 - t) + b2 * gamma * gamma_aux * t;
    r.approx_diff = a2 * t * gamma_aux + b2 * gamma * (1.0 - t);

    PureState qs = protocols::qs_nla_attach(tmsv_truncated(tmsv, gamma).state, t, gamma_aux);
    r.qs_success =
        protocols::qs_nla_measure(qs, detector1, detector2, {"S", "F"}).success_probability /
        r.truncation_weight;
    r.plob = r.chi > 0.0 ? plob_bound(r.chi, 1) : 0.0;
    return r;
}

SkrResult skr_protocol(const SkrScenario& scenario) {
    scenario.validate();
    const double chi = channels::transmissivity_from_distance(scenario.link);
    const double g = std::sqrt(chi);
    SkrResult r = skr_protocol(scenario.tmsv, g, g, scenario.t, scenario.detector1, scenario.detector2);
    r.chi = chi;
    r.plob = chi > 0.0 ? plob_bound(chi, scenario.repeater_links) : 0.0;
    return r;
}

double skr_from_success(double success_probability) { return success_probability; }

double plob_bound(double chi, int k) {
    if (k != 1 && k != 2) throw DomainError("K must be 1 or 2");
    if (!(chi > 0.0)) throw DomainError("infinite attenuation: transmissivity is zero");
    if (chi > 1.0) throw DomainError("transmissivity exceeds 1");
    if (chi == 1.0) return std::numeric_limits<double>::infinity();
    return -std::log2(1.0 - std::pow(chi, 1.0 / k));
}

std::optional<double> crossover_distance(const SkrScenario& base, OperatingPoint op,
                                         double max_distance_km, int k) {
    auto margin = [&](double distance) {
        SkrScenario s = base;
        s.link.distance_km = distance;
        s.repeater_links = k;
        const SkrResult r = skr_protocol(s);
        return r.skr[protocols::slot(op)] - r.plob;
    };
    constexpr int kSteps = 1000;
    const double step = max_distance_km / kSteps;
    if (margin(max_distance_km) <= 0.0) return std::nullopt;
    // Walk back from the far end to the last point where the protocol is not ahead.
    double above = max_distance_km;
    double below = -1.0;
    for (int i = kSteps - 1; i >= 0; --i) {
        const double d = step * i;
        if (margin(d) <= 0.0) {
            below = d;
            break;
        }
        above = d;
    }
    if (below < 0.0) return 0.0;
    while (above - below > 1e-6) {
        const double mid = 0.5 * (above + below);
        if (margin(mid) > 0.0) {
            above = mid;
        } else {
            below = mid;
        }
    }
    return above;
}

}  // namespace nla::applications
