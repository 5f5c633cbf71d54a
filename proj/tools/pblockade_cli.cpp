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

// pblockade: steady-state photon statistics of a quantum dot in a
// parametrically driven cavity.
//
//   pblockade point   --delta -20 --delta-a -20 --g 20 --E 0.1 --U 0.0005
//   pblockade sweep   --axis delta:-60:60:481 --delta-a 20 ... --out cut.csv
//   pblockade sweep2d --axis delta:-60:60:241 --axis2 delta_a:-60:60:241 --out map.csv
//   pblockade compare --axis delta_a:0:60:241 --delta 30 ... --out compare.csv
//   pblockade optimum --free delta_a --from 0 --to 60 --delta 30 ...
//   pblockade convergence --E 2 --delta-a 2 --g 0

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "pblockade/sweep.hpp"

namespace {

using namespace pblockade;

enum Exit : int { kOk = 0, kUsage = 1, kIo = 2, kSolver = 3 };

struct Options {
    ModelParams params{0.0, 0.0, 20.0, 0.1, 0.0005, 1.0, 1.0};
    int cutoff = kDefaultCutoff;
    std::optional<double> converge_tol;
    std::string engines = "numeric,analytic";
    std::string axis;
    std::string axis2;
    std::string out;
    std::string gnuplot;
    std::string config;
    unsigned threads = 0;

    std::string free_axis = "delta_a";
    double from = -60.0;
    double to = 60.0;
    double grid_step = 0.25;
    int max_cutoff = kMaxCutoff;
};

void add_model_flags(CLI::App* app, Options& o) {
    app->add_option("--delta", o.params.delta, "dot-drive detuning (units of gamma)");
    app->add_option("--delta-a", o.params.delta_a, "cavity-drive detuning");
    app->add_option("--g", o.params.g, "dot-cavity coupling");
    app->add_option("--E", o.params.E, "coherent drive strength");
    app->add_option("--U", o.params.U, "effective parametric gain");
    app->add_option("--kappa", o.params.kappa, "cavity decay rate");
    app->add_option("--gamma", o.params.gamma, "dot decay rate; all other rates share its unit");
    app->add_option("--config", o.config, "key=value file supplying defaults; flags override it");
}

void add_solver_flags(CLI::App* app, Options& o) {
    app->add_option("--cutoff", o.cutoff, "photon-number cutoff (initial cutoff with --converge-tol)");
    app->add_option("--converge-tol", o.converge_tol, "raise the cutoff until g2 and n_a change by less than this");
    app->add_option("--engines", o.engines, "numeric,analytic | numeric | analytic");
    app->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    app->add_option("--max-cutoff", o.max_cutoff, "with --converge-tol, give up beyond this cutoff");
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Fills options that were not given on the command line from `path`.
void apply_config(CLI::App* sub, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot read config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw CLI::ValidationError(path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        CLI::Option* opt = sub->get_option_no_throw("--" + key);
        if (opt == nullptr || key == "config") {
            throw CLI::ValidationError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
        if (opt->count() == 0) {
            opt->add_result(value);
            opt->run_callback();
        }
    }
}

CutoffPolicy cutoff_policy(const Options& o) { return {o.cutoff, o.converge_tol, o.max_cutoff}; }

// Opens --out or falls back to stdout.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::ios_base::failure("cannot open " + path + " for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    void finish(const std::string& path) {
        stream().flush();
        if (!stream()) throw std::ios_base::failure("write to " + (path.empty() ? "stdout" : path) + " failed");
    }

private:
    std::ofstream file_;
};

void write_gnuplot(const Options& o, const SweepSpec& spec) {
    if (o.gnuplot.empty()) return;
    std::ofstream gp(o.gnuplot, std::ios::binary);
    gp << gnuplot_stub(spec, o.out.empty() ? "data.csv" : o.out);
    if (!gp) throw std::ios_base::failure("cannot write " + o.gnuplot);
}

int run_point(const Options& o) {
    o.params.validate();
    const Engines engines = parse_engines(o.engines);
    SweepSpec spec{o.params, {}, std::nullopt, engines, cutoff_policy(o)};
    RecordRow row = evaluate_point(o.params, engines, spec.cutoff);
    std::cout << "g2_numeric,g2_analytic,n_a_numeric,n_a_analytic,cutoff_used,residual,status\n"
              << format_double(row.g2_numeric) << ',' << format_double(row.g2_analytic) << ','
              << format_double(row.n_a_numeric) << ',' << format_double(row.n_a_analytic) << ',' << row.cutoff_used
              << ',' << format_double(row.residual) << ',' << to_string(row.status) << '\n';
    if (row.status != PointStatus::Ok) {
        std::cerr << "pblockade: solver failed at this point (" << to_string(row.status) << ")\n";
        return kSolver;
    }
    return kOk;
}

int run_sweep_cmd(const Options& o, bool two_d) {
    SweepSpec spec{o.params, parse_axis(o.axis), std::nullopt, parse_engines(o.engines), cutoff_policy(o)};
    if (two_d) spec.axis2 = parse_axis(o.axis2);
    spec.validate();
    Output out(o.out);
    const auto rows = run_sweep(spec, o.threads);
    write_sweep_csv(out.stream(), spec, rows);
    out.finish(o.out);
    write_gnuplot(o, spec);
    return kOk;
}

int run_compare_cmd(const Options& o) {
    const AxisSpec axis = parse_axis(o.axis);
    Output out(o.out);
    const auto rows = run_compare(o.params, axis, cutoff_policy(o), o.threads);
    write_compare_csv(out.stream(), axis, rows);
    out.finish(o.out);
    return kOk;
}

int run_optimum(const Options& o) {
    const Detuning free = parse_axis_name(o.free_axis) == Axis::Delta ? Detuning::Delta : Detuning::DeltaA;
    if (o.free_axis != "delta" && o.free_axis != "delta_a" && o.free_axis != "delta-a") {
        throw Error(ErrorKind::InvalidArgument, "--free must be delta or delta_a");
    }
    RootSearch search;
    search.lo = o.from;
    search.hi = o.to;
    search.grid_step = o.grid_step;
    const auto roots = ucpb_roots(o.params, free, search);
    Output out(o.out);
    write_roots_csv(out.stream(), o.params, roots);
    out.finish(o.out);
    if (roots.empty()) std::cerr << "pblockade: no blockade conditions in [" << o.from << ", " << o.to << "]\n";
    return kOk;
}

int run_convergence(const Options& o) {
    ConvergencePolicy policy;
    policy.initial_cutoff = o.cutoff;
    policy.rel_tol = o.converge_tol.value_or(1e-6);
    policy.max_cutoff = o.max_cutoff;
    Output out(o.out);
    try {
        write_convergence_csv(out.stream(), convergence_trace(o.params, policy));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoConvergence) throw;
        std::cerr << "pblockade: " << e.what() << '\n';
        return kSolver;
    }
    out.finish(o.out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Photon statistics of a quantum dot in a parametrically driven nonlinear cavity"};
    app.require_subcommand(1);
    Options o;

    CLI::App* point = app.add_subcommand("point", "steady state at one parameter point");
    CLI::App* sweep = app.add_subcommand("sweep", "1-D sweep to CSV");
    CLI::App* sweep2d = app.add_subcommand("sweep2d", "2-D sweep to CSV (axis2-major rows)");
    CLI::App* compare = app.add_subcommand("compare", "full model vs U=0 and g=0 limits along one axis");
    CLI::App* optimum = app.add_subcommand("optimum", "locate blockade conditions along a detuning");
    CLI::App* convergence = app.add_subcommand("convergence", "g2 and n_a against the photon cutoff");

    for (CLI::App* sub : {point, sweep, sweep2d, compare, optimum, convergence}) add_model_flags(sub, o);
    for (CLI::App* sub : {point, sweep, sweep2d, compare}) add_solver_flags(sub, o);
    convergence->add_option("--max-cutoff", o.max_cutoff, "give up beyond this cutoff");
    for (CLI::App* sub : {sweep, sweep2d, compare, optimum, convergence}) {
        sub->add_option("--out", o.out, "output CSV (default: stdout)");
    }
    for (CLI::App* sub : {sweep, sweep2d, compare}) sub->add_option("--axis", o.axis, "name:start:stop:steps")->required();
    sweep2d->add_option("--axis2", o.axis2, "name:start:stop:steps")->required();
    for (CLI::App* sub : {sweep, sweep2d}) sub->add_option("--gnuplot", o.gnuplot, "also write a gnuplot script");
    optimum->add_option("--free", o.free_axis, "detuning to solve for: delta or delta_a");
    optimum->add_option("--from", o.from, "interval start");
    optimum->add_option("--to", o.to, "interval end");
    optimum->add_option("--grid-step", o.grid_step, "coarse grid spacing before refinement");
    convergence->add_option("--cutoff", o.cutoff, "first cutoff");
    convergence->add_option("--converge-tol", o.converge_tol, "relative tolerance (default 1e-6)");

    try {
        app.parse(argc, argv);
        CLI::App* active = app.get_subcommands().front();
        if (!o.config.empty()) apply_config(active, o.config);
        if (active == point) return run_point(o);
        if (active == sweep) return run_sweep_cmd(o, false);
        if (active == sweep2d) return run_sweep_cmd(o, true);
        if (active == compare) return run_compare_cmd(o);
        if (active == optimum) return run_optimum(o);
        return run_convergence(o);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "pblockade: " << e.what() << '\n';
        return kIo;
    } catch (const Error& e) {
        std::cerr << "pblockade: " << e.what() << '\n';
        return e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::DimensionMismatch ? kUsage : kSolver;
    }
}
