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

#include <vector>

#include "pblockade/model.hpp"

namespace pblockade {

// Weak-drive wavefunction amplitudes with the ground-state amplitude pinned
// to one.
struct AmplitudeSet {
    Complex c0g{1.0, 0.0};
    Complex c0e;
    Complex c1g;
    Complex c1e;
    Complex c2g;
};

enum class Detuning { Delta, DeltaA };
enum class BlockadeKind { CPB, UCPB };

const char* to_string(Detuning d);
const char* to_string(BlockadeKind k);

struct ConditionRoot {
    Detuning variable;
    double value;     // location of the root along `variable`
    double residual;  // |c2g| there
    BlockadeKind kind;
};

// Steady state of the four truncated amplitude equations, solved as a dense
// 4x4 linear system. Independent of the closed forms below.
AmplitudeSet amplitudes_linear_solve(const ModelParams& params);

// Closed-form c1g and c2g, with c0e and c1e by back-substitution.
AmplitudeSet amplitudes_closed_form(const ModelParams& params);

// 2 |c2g|^2 / |c1g|^4
double g2_weak_drive(const ModelParams& params);

// |c1g|^2; contains no U.
double mean_photon_weak_drive(const ModelParams& params);

// (gamma^2 / g^2) (1 + gamma^2 U^2 / E^4): depth estimate of the trough on the
// delta * delta_a = g^2 hyperbola.
double g2_cpb_min(const ModelParams& params);

// Other detuning on the hyperbola delta * delta_a = g^2.
double cpb_partner_detuning(double known, double g);

struct RootSearch {
    double lo;
    double hi;
    double grid_step = 0.25;
    double tolerance = 1e-4;
    // A |c2g| minimum away from the hyperbola counts as UCPB only when the
    // weak-drive g2 there is below this.
    double ucpb_g2_threshold = 0.1;
    // Minima closer than this to the hyperbola are reported as CPB.
    double cpb_band = 0.5;
};

// Locates blockade conditions along `free_axis`, holding the other parameters
// of `params` fixed (the value of the free detuning in `params` is ignored).
// UCPB roots are local minimisers of |c2g|^2 found on a grid and refined by
// golden-section search; CPB roots come from the hyperbola. Sorted by value.
std::vector<ConditionRoot> ucpb_roots(const ModelParams& params, Detuning free_axis, const RootSearch& search);

ModelParams with_detuning(ModelParams params, Detuning axis, double value);

}  // namespace pblockade
