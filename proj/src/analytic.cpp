// Copyright 2026 The pblockade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pblockade/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/SVD>

namespace pblockade {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

// Relative size below which a closed-form denominator is treated as zero.
constexpr double kDenominatorTol = 1e-14;
constexpr double kMaxCondition = 1e12;

void require_nonzero(Complex denom, double scale, const char* name) {
    if (std::abs(denom) <= kDenominatorTol * std::max(scale, 1.0)) {
        throw Error(ErrorKind::Singular, std::string("closed form: denominator ") + name + " vanishes",
                    std::abs(denom));
    }
}

double golden_section_min(auto&& f, double a, double b, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

const char* to_string(Detuning d) { return d == Detuning::Delta ? "delta" : "delta_a"; }
const char* to_string(BlockadeKind k) { return k == BlockadeKind::CPB ? "CPB" : "UCPB"; }

ModelParams with_detuning(ModelParams params, Detuning axis, double value) {
    (axis == Detuning::Delta ? params.delta : params.delta_a) = value;
    return params;
}

AmplitudeSet amplitudes_linear_solve(const ModelParams& params) {
    params.validate();
    const Complex dp = params.delta_c();
    const Complex ap = params.delta_a_c();
    const double g = params.g;
    const double e = params.E;

    // Unknowns (c0e, c1g, c1e, c2g); c0g = 1 moves the drive terms to the right.
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    Eigen::Vector4cd rhs = Eigen::Vector4cd::Zero();
    m(0, 0) = dp;
    m(0, 1) = g;
    m(1, 0) = g;
    m(1, 1) = ap;
    rhs(1) = -e;
    m(2, 0) = e;
    m(2, 2) = ap + dp;
    m(2, 3) = kSqrt2 * g;
    m(3, 1) = kSqrt2 * e;
    m(3, 2) = kSqrt2 * g;
    m(3, 3) = 2.0 * ap;
    rhs(3) = -kSqrt2 * params.U;

    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m);
    const auto& sv = svd.singularValues();
    const double cond = sv(3) > 0.0 ? sv(0) / sv(3) : std::numeric_limits<double>::infinity();
    if (!(cond < kMaxCondition)) {
        throw Error(ErrorKind::Singular, "amplitude equations are singular (condition number " +
                                             std::to_string(cond) + ")", cond);
    }
    const Eigen::Vector4cd x = m.fullPivLu().solve(rhs);

    AmplitudeSet out;
    out.c0e = x(0);
    out.c1g = x(1);
    out.c1e = x(2);
    out.c2g = x(3);
    return out;
}

AmplitudeSet amplitudes_closed_form(const ModelParams& params) {
    params.validate();
    const Complex dp = params.delta_c();
    const Complex ap = params.delta_a_c();
    const Complex sum = ap + dp;
    const double g2 = params.g * params.g;
    const double e = params.E;
    const double u = params.U;
    const double scale = std::norm(dp) + std::norm(ap) + g2;

    const Complex d1 = g2 - dp * ap;
    const Complex d2 = ap * sum - g2;
    require_nonzero(d1, scale, "g^2 - delta' delta_a'");
    require_nonzero(d2, scale, "delta_a' (delta_a' + delta') - g^2");
    require_nonzero(sum, std::sqrt(scale), "delta_a' + delta'");

    AmplitudeSet out;
    out.c1g = e * dp / d1;
    out.c2g = (e * e * (g2 + dp * sum) - u * (dp * ap - g2) * sum) / (kSqrt2 * d2 * (-d1));
    out.c0e = -params.g * out.c1g / dp;
    out.c1e = -(kSqrt2 * params.g * out.c2g + e * out.c0e) / sum;
    return out;
}

double g2_weak_drive(const ModelParams& params) {
    const AmplitudeSet a = amplitudes_closed_form(params);
    const double n1 = std::norm(a.c1g);
    if (n1 == 0.0) {
        throw Error(ErrorKind::Undefined, "g2 undefined: one-photon amplitude vanishes");
    }
    return 2.0 * std::norm(a.c2g) / (n1 * n1);
}

double mean_photon_weak_drive(const ModelParams& params) { return std::norm(amplitudes_closed_form(params).c1g); }

double g2_cpb_min(const ModelParams& params) {
    if (!(params.g > 0.0) || !(params.E > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "CPB estimate needs g > 0 and E > 0");
    }
    const double gm2 = params.gamma * params.gamma;
    const double e4 = std::pow(params.E, 4);
    return gm2 / (params.g * params.g) * (1.0 + gm2 * params.U * params.U / e4);
}

double cpb_partner_detuning(double known, double g) {
    if (known == 0.0) {
        throw Error(ErrorKind::InvalidArgument, "delta * delta_a = g^2 has no point with a zero detuning");
    }
    return g * g / known;
}

std::vector<ConditionRoot> ucpb_roots(const ModelParams& params, Detuning free_axis, const RootSearch& search) {
    if (!(search.hi > search.lo) || !std::isfinite(search.lo) || !std::isfinite(search.hi)) {
        throw Error(ErrorKind::InvalidArgument, "root search interval is empty or unbounded");
    }
    if (!(search.grid_step > 0.0) || !(search.tolerance > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "root search step and tolerance must be positive");
    }
    params.validate();

    auto c2 = [&](double x) { return std::norm(amplitudes_closed_form(with_detuning(params, free_axis, x)).c2g); };

    const double fixed = free_axis == Detuning::Delta ? params.delta_a : params.delta;
    const bool has_hyperbola = params.g > 0.0 && fixed != 0.0;
    const double partner = has_hyperbola ? cpb_partner_detuning(fixed, params.g) : 0.0;

    std::vector<ConditionRoot> roots;
    if (has_hyperbola && partner >= search.lo && partner <= search.hi) {
        roots.push_back({free_axis, partner, std::sqrt(c2(partner)), BlockadeKind::CPB});
    }

    const auto n = static_cast<std::size_t>(std::ceil((search.hi - search.lo) / search.grid_step)) + 1;
    std::vector<double> xs(n);
    std::vector<double> fs(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = std::min(search.lo + static_cast<double>(i) * search.grid_step, search.hi);
        fs[i] = c2(xs[i]);
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!(fs[i] <= fs[i - 1] && fs[i] < fs[i + 1])) continue;
        const double x = golden_section_min(c2, xs[i - 1], xs[i + 1], search.tolerance);
        if (has_hyperbola && std::abs(x - partner) < search.cpb_band) continue;
        if (g2_weak_drive(with_detuning(params, free_axis, x)) >= search.ucpb_g2_threshold) continue;
        roots.push_back({free_axis, x, std::sqrt(c2(x)), BlockadeKind::UCPB});
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
    return roots;
}

}  // namespace pblockade
