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

#include "pblockade/steady_state.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/SparseLU>
#include <unsupported/Eigen/KroneckerProduct>

namespace pblockade {

namespace {

SparseMatrix sparse_of(const Matrix& m) { return m.sparseView(); }

SparseMatrix sparse_identity(int n) {
    SparseMatrix id(n, n);
    id.setIdentity();
    return id;
}

}  // namespace

SparseMatrix build_liouvillian_sparse(const ModelParams& params, const HilbertSpace& space) {
    const int d = space.dim();
    const SparseMatrix id = sparse_identity(d);
    const SparseMatrix h = sparse_of(build_hamiltonian(params, space).entries());
    const Complex i(0.0, 1.0);

    SparseMatrix l = -i * (SparseMatrix(Eigen::kroneckerProduct(id, h)) -
                           SparseMatrix(Eigen::kroneckerProduct(SparseMatrix(h.transpose()), id)));

    auto add_dissipator = [&](const Matrix& dense_o, double rate) {
        const SparseMatrix o = sparse_of(dense_o);
        const SparseMatrix ono = sparse_of(dense_o.adjoint() * dense_o);
        const SparseMatrix jump = Eigen::kroneckerProduct(SparseMatrix(o.conjugate()), o);
        const SparseMatrix left = Eigen::kroneckerProduct(id, ono);
        const SparseMatrix right = Eigen::kroneckerProduct(SparseMatrix(ono.transpose()), id);
        l += Complex(rate / 2.0) * (Complex(2.0) * jump - left - right);
    };
    add_dissipator(annihilation_op(space).entries(), params.kappa);
    add_dissipator(qd_lowering_op(space).entries(), params.gamma);
    l.makeCompressed();
    return l;
}

SteadyStateResult solve_steady_state(const ModelParams& params, const HilbertSpace& space) {
    const int d = space.dim();
    const Eigen::Index d2 = static_cast<Eigen::Index>(d) * d;
    const SparseMatrix l = build_liouvillian_sparse(params, space);

    // Row 0 (the <g,0|.|g,0> equation) is redundant given trace preservation;
    // swap it for Tr rho = 1.
    std::vector<Eigen::Triplet<Complex>> triplets;
    triplets.reserve(static_cast<std::size_t>(l.nonZeros()) + static_cast<std::size_t>(d));
    for (Eigen::Index col = 0; col < l.outerSize(); ++col) {
        for (SparseMatrix::InnerIterator it(l, col); it; ++it) {
            if (it.row() != 0) triplets.emplace_back(it.row(), it.col(), it.value());
        }
    }
    for (int k = 0; k < d; ++k) triplets.emplace_back(0, static_cast<Eigen::Index>(k) * d + k, 1.0);
    SparseMatrix system(d2, d2);
    system.setFromTriplets(triplets.begin(), triplets.end());
    system.makeCompressed();

    Vector rhs = Vector::Zero(d2);
    rhs(0) = 1.0;

    Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(system);
    if (lu.info() != Eigen::Success) {
        throw Error(ErrorKind::Singular,
                    "steady-state system is rank deficient: the steady state is not unique (" + lu.lastErrorMessage() +
                        ")");
    }
    Vector x = lu.solve(rhs);
    // One step of iterative refinement against the same factorisation.
    x += lu.solve(rhs - system * x);
    if (!x.allFinite()) {
        throw Error(ErrorKind::Singular, "steady-state solve produced non-finite entries");
    }

    const double residual = (l * x).cwiseAbs().maxCoeff();
    if (!(residual < kResidualTol)) {
        throw Error(ErrorKind::ResidualTooLarge,
                    "steady-state residual " + std::to_string(residual) + " exceeds tolerance", residual);
    }

    DensityMatrix rho(space, unvec(x, d));
    const double n = mean_photon(rho);
    std::optional<double> g2;
    // Below this the numerator is pure round-off.
    if (n > 1e-20) g2 = g2_zero_delay(rho);
    return {std::move(rho), g2, n, space.photon_cutoff(), residual};
}

double mean_photon(const DensityMatrix& rho) {
    return expectation(rho, number_op(rho.space())).real();
}

double g2_zero_delay(const DensityMatrix& rho) {
    const HilbertSpace& space = rho.space();
    const OperatorMatrix a = annihilation_op(space);
    const OperatorMatrix ad = a.dagger();
    const double n = expectation(rho, ad * a).real();
    if (!(n > 0.0)) {
        throw Error(ErrorKind::Undefined, "g2(0) undefined for zero mean photon number", n);
    }
    const double pairs = expectation(rho, ad * ad * a * a).real();
    return pairs / (n * n);
}

std::vector<SteadyStateResult> convergence_trace(const ModelParams& params, const ConvergencePolicy& policy) {
    if (!(policy.rel_tol > 0.0) || policy.step < 1) {
        throw Error(ErrorKind::InvalidArgument, "convergence policy needs rel_tol > 0 and step >= 1");
    }
    auto rel_change = [](double prev, double cur) {
        const double scale = std::max(std::abs(prev), std::abs(cur));
        return scale == 0.0 ? 0.0 : std::abs(cur - prev) / scale;
    };

    std::vector<SteadyStateResult> trace;
    for (int cutoff = policy.initial_cutoff; cutoff <= policy.max_cutoff; cutoff += policy.step) {
        trace.push_back(solve_steady_state(params, HilbertSpace(cutoff)));
        const SteadyStateResult& cur = trace.back();
        if (cur.n_a == 0.0 || !cur.g2_zero) return trace;
        if (trace.size() < 2) continue;
        const SteadyStateResult& prev = trace[trace.size() - 2];
        if (!prev.g2_zero) continue;
        if (rel_change(prev.n_a, cur.n_a) < policy.rel_tol && rel_change(*prev.g2_zero, *cur.g2_zero) < policy.rel_tol) {
            return trace;
        }
    }
    const double last = trace.empty() ? 0.0 : trace.back().cutoff_used;
    throw Error(ErrorKind::NoConvergence,
                "no convergence up to cutoff " + std::to_string(policy.max_cutoff), last);
}

SteadyStateResult converged_solve(const ModelParams& params, const ConvergencePolicy& policy) {
    return std::move(convergence_trace(params, policy).back());
}

}  // namespace pblockade
