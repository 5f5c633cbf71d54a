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

#include "pblockade/fock_algebra.hpp"

namespace pblockade {

// Parameters of the effective Hamiltonian and the two decay channels.
// Everything is measured in units of the dot decay rate, so gamma = 1 by
// convention; it is kept as a field so results can be rescaled.
struct ModelParams {
    double delta = 0.0;    // dot-drive detuning
    double delta_a = 0.0;  // cavity-drive detuning
    double g = 0.0;        // dot-cavity coupling
    double E = 0.0;        // coherent drive strength
    double U = 0.0;        // effective two-photon (parametric) gain
    double kappa = 1.0;    // cavity decay
    double gamma = 1.0;    // dot decay

    // delta - i gamma / 2
    Complex delta_c() const { return {delta, -gamma / 2.0}; }
    // delta_a - i kappa / 2
    Complex delta_a_c() const { return {delta_a, -kappa / 2.0}; }

    // Throws Error(InvalidArgument) on kappa <= 0, gamma <= 0, or negative E, U, g.
    void validate() const;

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

// Pump side of the full two-mode model, before the second-harmonic mode is
// eliminated.
struct PumpParams {
    double F = 0.0;
    double chi = 0.0;
    double delta_b = 0.0;
    double kappa_b = 1.0;
};

// U = F chi / sqrt(delta_b^2 + kappa_b^2 / 4)
double effective_gain(const PumpParams& pump);

// Copy with U = 0: the Jaynes-Cummings model.
ModelParams jc_limit(const ModelParams& params);
// Copy with g = 0: a cavity with one- and two-photon drives.
ModelParams bimode_limit(const ModelParams& params);

// H = delta s+s- + delta_a a+a + g (s+ a + s- a+) + E (a + a+) + U (a^2 + a+^2)
OperatorMatrix build_hamiltonian(const ModelParams& params, const HilbertSpace& space);

// Generator acting on column-stacked density matrices:
//   vec(d rho / dt) = L vec(rho)
// with vec(A X B) = (B^T (x) A) vec(X). The dissipators are assembled as
// (kappa / 2) D[a] + (gamma / 2) D[s-], D[o] rho = 2 o rho o+ - o+o rho - rho o+o,
// which is the standard Lindblad form with rates kappa and gamma.
class Superoperator {
public:
    Superoperator(HilbertSpace space, Matrix entries);

    const HilbertSpace& space() const noexcept { return space_; }
    const Matrix& entries() const noexcept { return entries_; }

    Vector apply(const Vector& vec_rho) const { return entries_ * vec_rho; }
    Matrix apply(const Matrix& rho) const;

    // max_k |sum_i L(ii, k)|: how far the trace functional is from being a left null vector.
    double trace_leak() const;

private:
    HilbertSpace space_;
    Matrix entries_;
};

Superoperator build_liouvillian(const ModelParams& params, const HilbertSpace& space);

Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, Eigen::Index dim);

}  // namespace pblockade
