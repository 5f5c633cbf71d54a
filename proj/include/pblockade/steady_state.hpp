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

#include <optional>
#include <vector>

#include <Eigen/SparseCore>

#include "pblockade/model.hpp"

namespace pblockade {

struct SteadyStateResult {
    DensityMatrix rho;
    std::optional<double> g2_zero;  // empty when the cavity is empty
    double n_a;
    int cutoff_used;
    double residual;  // max |L vec(rho)|
};

using SparseMatrix = Eigen::SparseMatrix<Complex>;

// Same generator as build_liouvillian, assembled without dense intermediates.
SparseMatrix build_liouvillian_sparse(const ModelParams& params, const HilbertSpace& space);

inline constexpr double kResidualTol = 1e-9;
inline constexpr int kDefaultCutoff = 10;
inline constexpr int kMaxCutoff = 40;

// Steady state from L vec(rho) = 0 with one row replaced by the trace
// condition. Throws Error(Singular) if the replaced system is rank deficient
// and Error(ResidualTooLarge) if the solution misses kResidualTol.
SteadyStateResult solve_steady_state(const ModelParams& params, const HilbertSpace& space);

// Tr(rho a+a+aa) / Tr(rho a+a)^2; throws Error(Undefined) when Tr(rho a+a) <= 0.
double g2_zero_delay(const DensityMatrix& rho);
double mean_photon(const DensityMatrix& rho);

struct ConvergencePolicy {
    int initial_cutoff = 6;
    int step = 4;
    int max_cutoff = kMaxCutoff;
    double rel_tol = 1e-6;
};

// Raises the cutoff until g2 and n_a move by less than rel_tol between
// consecutive solves. Throws Error(NoConvergence) past max_cutoff.
SteadyStateResult converged_solve(const ModelParams& params, const ConvergencePolicy& policy = {});

// Every intermediate solve of converged_solve, for convergence studies.
std::vector<SteadyStateResult> convergence_trace(const ModelParams& params, const ConvergencePolicy& policy = {});

}  // namespace pblockade
