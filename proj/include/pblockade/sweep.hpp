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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pblockade/analytic.hpp"
#include "pblockade/steady_state.hpp"

namespace pblockade {

enum class Axis { Delta, DeltaA, U, G, E };

const char* to_string(Axis axis);
Axis parse_axis_name(std::string_view name);
ModelParams with_axis(ModelParams params, Axis axis, double value);

struct AxisSpec {
    Axis name = Axis::Delta;
    double start = -60.0;
    double stop = 60.0;
    int steps = 481;

    // Evenly spaced, endpoints included.
    std::vector<double> values() const;
};

// "name:start:stop:steps", e.g. "delta:-60:60:481".
AxisSpec parse_axis(std::string_view text);

struct Engines {
    bool numeric = true;
    bool analytic = true;
};

// "numeric,analytic", "numeric" or "analytic".
Engines parse_engines(std::string_view text);

struct CutoffPolicy {
    int cutoff = kDefaultCutoff;
    // When set, converged_solve starting at `cutoff` with this tolerance.
    std::optional<double> converge_tol;
    int max_cutoff = kMaxCutoff;
};

struct SweepSpec {
    ModelParams base;
    AxisSpec axis1;
    std::optional<AxisSpec> axis2;
    Engines engines;
    CutoffPolicy cutoff;

    // Throws Error(InvalidArgument): steps < 2, start >= stop, repeated axis.
    void validate() const;
};

enum class PointStatus { Ok, Singular, NoConverge };
const char* to_string(PointStatus status);

// Values an engine did not produce, or that are undefined (g2 of an empty
// cavity), are NaN.
struct RecordRow {
    std::vector<double> axis_values;
    double g2_numeric;
    double g2_analytic;
    double n_a_numeric;
    double n_a_analytic;
    int cutoff_used;
    double residual;
    PointStatus status;
};

RecordRow evaluate_point(const ModelParams& params, const Engines& engines, const CutoffPolicy& cutoff);

// Rows ordered axis2-major. Solver failures are recorded per row. Points are
// spread over `threads` workers (0 = hardware concurrency).
std::vector<RecordRow> run_sweep(const SweepSpec& spec, unsigned threads = 0);

struct CompareRow {
    double axis_value;
    double g2_composite;
    double g2_jc;
    double g2_bimode;
    double n_a_composite;
    double n_a_jc;
    double n_a_bimode;
    PointStatus status;
};

// Numeric g2 and n_a of the full model and its U = 0 and g = 0 limits along one axis.
std::vector<CompareRow> run_compare(const ModelParams& base, const AxisSpec& axis, const CutoffPolicy& cutoff,
                                   unsigned threads = 0);

// 9 significant digits in scientific notation; NaN prints as "nan".
std::string format_double(double value);

void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const std::vector<RecordRow>& rows);
void write_compare_csv(std::ostream& out, const AxisSpec& axis, const std::vector<CompareRow>& rows);
void write_roots_csv(std::ostream& out, const ModelParams& params, const std::vector<ConditionRoot>& roots);
void write_convergence_csv(std::ostream& out, const std::vector<SteadyStateResult>& trace);

// Minimal gnuplot script plotting log10(g2_numeric) from `csv_path`.
std::string gnuplot_stub(const SweepSpec& spec, const std::string& csv_path);

}  // namespace pblockade
