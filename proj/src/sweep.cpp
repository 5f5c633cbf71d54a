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

#include "pblockade/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

namespace pblockade {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double parse_number(std::string_view text, std::string_view what) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw Error(ErrorKind::InvalidArgument, "cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
    }
    return value;
}

// Runs fn(i) for i in [0, n) on a small pool; the first exception is rethrown.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (std::size_t i = next++; i < n && !failed; i = next++) {
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

PointStatus status_of(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::NoConvergence: return PointStatus::NoConverge;
        case ErrorKind::Singular:
        case ErrorKind::ResidualTooLarge: return PointStatus::Singular;
        default: throw e;
    }
}

SteadyStateResult solve_with(const ModelParams& params, const CutoffPolicy& cutoff) {
    if (cutoff.converge_tol) {
        ConvergencePolicy policy;
        policy.initial_cutoff = cutoff.cutoff;
        policy.rel_tol = *cutoff.converge_tol;
        policy.max_cutoff = cutoff.max_cutoff;
        return converged_solve(params, policy);
    }
    return solve_steady_state(params, HilbertSpace(cutoff.cutoff));
}

std::string format_int(int value) { return std::to_string(value); }

}  // namespace

const char* to_string(Axis axis) {
    switch (axis) {
        case Axis::Delta: return "delta";
        case Axis::DeltaA: return "delta_a";
        case Axis::U: return "U";
        case Axis::G: return "g";
        case Axis::E: return "E";
    }
    return "?";
}

Axis parse_axis_name(std::string_view name) {
    if (name == "delta") return Axis::Delta;
    if (name == "delta_a" || name == "delta-a") return Axis::DeltaA;
    if (name == "U") return Axis::U;
    if (name == "g") return Axis::G;
    if (name == "E") return Axis::E;
    throw Error(ErrorKind::InvalidArgument, "unknown axis '" + std::string(name) + "' (expected delta, delta_a, U, g, E)");
}

ModelParams with_axis(ModelParams params, Axis axis, double value) {
    switch (axis) {
        case Axis::Delta: params.delta = value; break;
        case Axis::DeltaA: params.delta_a = value; break;
        case Axis::U: params.U = value; break;
        case Axis::G: params.g = value; break;
        case Axis::E: params.E = value; break;
    }
    return params;
}

std::vector<double> AxisSpec::values() const {
    std::vector<double> out(static_cast<std::size_t>(std::max(steps, 0)));
    for (int i = 0; i < steps; ++i) {
        // Exact endpoints; interior points by linear interpolation.
        out[i] = i == steps - 1 ? stop : start + (stop - start) * static_cast<double>(i) / (steps - 1);
    }
    return out;
}

AxisSpec parse_axis(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t colon = text.find(':', pos);
        parts.push_back(text.substr(pos, colon == std::string_view::npos ? std::string_view::npos : colon - pos));
        if (colon == std::string_view::npos) break;
        pos = colon + 1;
    }
    if (parts.size() != 4) {
        throw Error(ErrorKind::InvalidArgument, "axis must look like name:start:stop:steps, got '" + std::string(text) + "'");
    }
    AxisSpec axis;
    axis.name = parse_axis_name(parts[0]);
    axis.start = parse_number(parts[1], "axis start");
    axis.stop = parse_number(parts[2], "axis stop");
    const double steps = parse_number(parts[3], "axis steps");
    if (steps != std::floor(steps) || steps > std::numeric_limits<int>::max()) {
        throw Error(ErrorKind::InvalidArgument, "axis steps must be an integer");
    }
    axis.steps = static_cast<int>(steps);
    return axis;
}

Engines parse_engines(std::string_view text) {
    Engines e{false, false};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view item = text.substr(pos, comma - pos);
        if (item == "numeric") {
            e.numeric = true;
        } else if (item == "analytic") {
            e.analytic = true;
        } else {
            throw Error(ErrorKind::InvalidArgument, "unknown engine '" + std::string(item) + "'");
        }
        pos = comma + 1;
    }
    return e;
}

void SweepSpec::validate() const {
    base.validate();
    auto check_axis = [](const AxisSpec& a) {
        if (a.steps < 2) throw Error(ErrorKind::InvalidArgument, "axis needs at least 2 steps");
        if (!(a.start < a.stop)) throw Error(ErrorKind::InvalidArgument, "axis start must be below stop");
        const bool non_negative = a.name == Axis::U || a.name == Axis::G || a.name == Axis::E;
        if (non_negative && a.start < 0.0) {
            throw Error(ErrorKind::InvalidArgument, std::string("axis ") + to_string(a.name) + " must be non-negative");
        }
    };
    check_axis(axis1);
    if (axis2) {
        check_axis(*axis2);
        if (axis2->name == axis1.name) throw Error(ErrorKind::InvalidArgument, "the two axes must differ");
    }
    if (!engines.numeric && !engines.analytic) throw Error(ErrorKind::InvalidArgument, "no engine selected");
    if (cutoff.cutoff < 2) throw Error(ErrorKind::InvalidArgument, "cutoff must be at least 2");
    if (cutoff.converge_tol && !(*cutoff.converge_tol > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "convergence tolerance must be positive");
    }
}

const char* to_string(PointStatus status) {
    switch (status) {
        case PointStatus::Ok: return "ok";
        case PointStatus::Singular: return "singular";
        case PointStatus::NoConverge: return "no_converge";
    }
    return "?";
}

RecordRow evaluate_point(const ModelParams& params, const Engines& engines, const CutoffPolicy& cutoff) {
    RecordRow row{{}, kNaN, kNaN, kNaN, kNaN, 0, kNaN, PointStatus::Ok};
    if (engines.numeric) {
        try {
            const SteadyStateResult r = solve_with(params, cutoff);
            row.g2_numeric = r.g2_zero.value_or(kNaN);
            row.n_a_numeric = r.n_a;
            row.cutoff_used = r.cutoff_used;
            row.residual = r.residual;
        } catch (const Error& e) {
            row.status = status_of(e);
        }
    }
    if (engines.analytic) {
        try {
            row.n_a_analytic = mean_photon_weak_drive(params);
            if (params.E > 0.0) row.g2_analytic = g2_weak_drive(params);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Undefined) row.status = status_of(e);
        }
    }
    return row;
}

std::vector<RecordRow> run_sweep(const SweepSpec& spec, unsigned threads) {
    spec.validate();
    const std::vector<double> xs = spec.axis1.values();
    const std::vector<double> ys = spec.axis2 ? spec.axis2->values() : std::vector<double>{};
    const std::size_t nx = xs.size();
    const std::size_t n = spec.axis2 ? nx * ys.size() : nx;

    std::vector<RecordRow> rows(n);
    parallel_for(n, threads, [&](std::size_t k) {
        ModelParams p = with_axis(spec.base, spec.axis1.name, xs[k % nx]);
        std::vector<double> coords{xs[k % nx]};
        if (spec.axis2) {
            p = with_axis(p, spec.axis2->name, ys[k / nx]);
            coords.push_back(ys[k / nx]);
        }
        rows[k] = evaluate_point(p, spec.engines, spec.cutoff);
        rows[k].axis_values = std::move(coords);
    });
    return rows;
}

std::vector<CompareRow> run_compare(const ModelParams& base, const AxisSpec& axis, const CutoffPolicy& cutoff,
                                   unsigned threads) {
    SweepSpec spec{base, axis, std::nullopt, {true, false}, cutoff};
    spec.validate();
    const std::vector<double> xs = axis.values();
    std::vector<CompareRow> rows(xs.size());
    parallel_for(xs.size(), threads, [&](std::size_t k) {
        const ModelParams p = with_axis(base, axis.name, xs[k]);
        const RecordRow full = evaluate_point(p, spec.engines, cutoff);
        const RecordRow jc = evaluate_point(jc_limit(p), spec.engines, cutoff);
        const RecordRow bi = evaluate_point(bimode_limit(p), spec.engines, cutoff);
        PointStatus status = PointStatus::Ok;
        for (const RecordRow* r : {&full, &jc, &bi}) {
            if (r->status != PointStatus::Ok) status = r->status;
        }
        rows[k] = {xs[k], full.g2_numeric, jc.g2_numeric, bi.g2_numeric,
                   full.n_a_numeric, jc.n_a_numeric, bi.n_a_numeric, status};
    });
    return rows;
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8e", value);
    return buf;
}

void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const std::vector<RecordRow>& rows) {
    out << to_string(spec.axis1.name);
    if (spec.axis2) out << ',' << to_string(spec.axis2->name);
    out << ",g2_numeric,g2_analytic,n_a_numeric,n_a_analytic,cutoff_used,residual,status\n";
    for (const RecordRow& r : rows) {
        for (double v : r.axis_values) out << format_double(v) << ',';
        out << format_double(r.g2_numeric) << ',' << format_double(r.g2_analytic) << ','
            << format_double(r.n_a_numeric) << ',' << format_double(r.n_a_analytic) << ',' << format_int(r.cutoff_used)
            << ',' << format_double(r.residual) << ',' << to_string(r.status) << '\n';
    }
}

void write_compare_csv(std::ostream& out, const AxisSpec& axis, const std::vector<CompareRow>& rows) {
    out << to_string(axis.name) << ",g2_composite,g2_jc,g2_bimode,n_a_composite,n_a_jc,n_a_bimode,status\n";
    for (const CompareRow& r : rows) {
        out << format_double(r.axis_value) << ',' << format_double(r.g2_composite) << ',' << format_double(r.g2_jc)
            << ',' << format_double(r.g2_bimode) << ',' << format_double(r.n_a_composite) << ','
            << format_double(r.n_a_jc) << ',' << format_double(r.n_a_bimode) << ',' << to_string(r.status) << '\n';
    }
}

void write_roots_csv(std::ostream& out, const ModelParams& params, const std::vector<ConditionRoot>& roots) {
    out << "kind,variable,value,residual_c2g,g2_weak_drive\n";
    for (const ConditionRoot& r : roots) {
        double g2 = kNaN;
        try {
            g2 = g2_weak_drive(with_detuning(params, r.variable, r.value));
        } catch (const Error&) {
        }
        out << to_string(r.kind) << ',' << to_string(r.variable) << ',' << format_double(r.value) << ','
            << format_double(r.residual) << ',' << format_double(g2) << '\n';
    }
}

void write_convergence_csv(std::ostream& out, const std::vector<SteadyStateResult>& trace) {
    out << "cutoff,g2_numeric,n_a_numeric,residual\n";
    for (const SteadyStateResult& r : trace) {
        out << r.cutoff_used << ',' << format_double(r.g2_zero.value_or(kNaN)) << ',' << format_double(r.n_a) << ','
            << format_double(r.residual) << '\n';
    }
}

std::string gnuplot_stub(const SweepSpec& spec, const std::string& csv_path) {
    std::ostringstream s;
    s << "set datafile separator ','\n"
      << "set key autotitle columnhead\n"
      << "set xlabel '" << to_string(spec.axis1.name) << "'\n";
    if (spec.axis2) {
        const int g2_col = 3;
        s << "set ylabel '" << to_string(spec.axis2->name) << "'\n"
          << "set view map\nset pm3d at b\n"
          << "splot '" << csv_path << "' using 1:2:(log10($" << g2_col << ")) with pm3d title 'log10 g2(0)'\n";
    } else {
        s << "set ylabel 'log10 g2(0)'\n"
          << "plot '" << csv_path << "' using 1:(log10($2)) with lines title 'numeric', \\\n"
          << "     '' using 1:(log10($3)) with lines dashtype 2 title 'weak drive'\n";
    }
    return s.str();
}

}  // namespace pblockade
