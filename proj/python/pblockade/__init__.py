# Copyright 2026 The pblockade Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Photon blockade in a driven quantum-dot cavity system.

Steady-state master-equation solves, weak-drive amplitudes and parameter
sweeps; the heavy lifting is done in the compiled ``_core`` module.
"""

from ._core import (
    AmplitudeSet,
    AxisSpec,
    CompareRow,
    ConditionRoot,
    Error,
    ModelParams,
    SteadyState,
    SweepRow,
    amplitudes_closed_form,
    amplitudes_linear_solve,
    bimode_limit,
    blockade_roots,
    compare,
    converged_steady_state,
    g2_cpb_min,
    g2_weak_drive,
    hamiltonian,
    jc_limit,
    liouvillian,
    mean_photon_weak_drive,
    steady_state,
    sweep,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
