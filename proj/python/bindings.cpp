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

// Python module pblockade._core.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pblockade/analytic.hpp"
#include "pblockade/error.hpp"
#include "pblockade/model.hpp"
#include "pblockade/steady_state.hpp"
#include "pblockade/sweep.hpp"

namespace py = pybind11;
using namespace pblockade;

namespace {

AxisSpec axis_from(py::object obj) {
    if (py::isinstance<py::str>(obj)) return parse_axis(obj.cast<std::string>());
    return obj.cast<AxisSpec>();
}

CutoffPolicy cutoff_from(int cutoff, std::optional<double> converge_tol, int max_cutoff) {
    CutoffPolicy c;
    c.cutoff = cutoff;
    c.converge_tol = converge_tol;
    c.max_cutoff = max_cutoff;
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Photon blockade in a driven quantum-dot cavity system";

    // Error carries the failure category in `.kind`.
    static PyObject* error_type = py::exception<Error>(m, "Error", PyExc_RuntimeError).release().ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object err = py::reinterpret_borrow<py::object>(error_type)(e.what());
            err.attr("kind") = to_string(e.kind());
            PyErr_SetObject(error_type, err.ptr());
        }
    });

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init([](double delta, double delta_a, double g, double E, double U, double kappa, double gamma) {
                 return ModelParams{delta, delta_a, g, E, U, kappa, gamma};
             }),
             py::arg("delta") = 0.0, py::arg("delta_a") = 0.0, py::arg("g") = 0.0, py::arg("E") = 0.0,
             py::arg("U") = 0.0, py::arg("kappa") = 1.0, py::arg("gamma") = 1.0)
        .def_readwrite("delta", &ModelParams::delta)
        .def_readwrite("delta_a", &ModelParams::delta_a)
        .def_readwrite("g", &ModelParams::g)
        .def_readwrite("E", &ModelParams::E)
        .def_readwrite("U", &ModelParams::U)
        .def_readwrite("kappa", &ModelParams::kappa)
        .def_readwrite("gamma", &ModelParams::gamma)
        .def("validate", &ModelParams::validate)
        .def(py::self == py::self)
        .def("__repr__", [](const ModelParams& p) {
            return "ModelParams(delta=" + std::to_string(p.delta) + ", delta_a=" + std::to_string(p.delta_a) +
                   ", g=" + std::to_string(p.g) + ", E=" + std::to_string(p.E) + ", U=" + std::to_string(p.U) +
                   ", kappa=" + std::to_string(p.kappa) + ", gamma=" + std::to_string(p.gamma) + ")";
        });

    m.def("jc_limit", &jc_limit, py::arg("params"));
    m.def("bimode_limit", &bimode_limit, py::arg("params"));
    m.def(
        "hamiltonian",
        [](const ModelParams& p, int cutoff) { return build_hamiltonian(p, HilbertSpace(cutoff)).entries(); },
        py::arg("params"), py::arg("cutoff") = kDefaultCutoff);
    m.def(
        "liouvillian",
        [](const ModelParams& p, int cutoff) { return build_liouvillian(p, HilbertSpace(cutoff)).entries(); },
        py::arg("params"), py::arg("cutoff") = kDefaultCutoff);

    // Weak-drive amplitudes.
    py::class_<AmplitudeSet>(m, "AmplitudeSet")
        .def_readonly("c0g", &AmplitudeSet::c0g)
        .def_readonly("c0e", &AmplitudeSet::c0e)
        .def_readonly("c1g", &AmplitudeSet::c1g)
        .def_readonly("c1e", &AmplitudeSet::c1e)
        .def_readonly("c2g", &AmplitudeSet::c2g);
    m.def("amplitudes_linear_solve", &amplitudes_linear_solve, py::arg("params"));
    m.def("amplitudes_closed_form", &amplitudes_closed_form, py::arg("params"));
    m.def("g2_weak_drive", &g2_weak_drive, py::arg("params"));
    m.def("mean_photon_weak_drive", &mean_photon_weak_drive, py::arg("params"));
    m.def("g2_cpb_min", &g2_cpb_min, py::arg("params"));

    py::class_<ConditionRoot>(m, "ConditionRoot")
        .def_property_readonly("variable", [](const ConditionRoot& r) { return to_string(r.variable); })
        .def_readonly("value", &ConditionRoot::value)
        .def_readonly("residual", &ConditionRoot::residual)
        .def_property_readonly("kind", [](const ConditionRoot& r) { return to_string(r.kind); });
    m.def(
        "blockade_roots",
        [](const ModelParams& p, const std::string& free, double lo, double hi, double grid_step) {
            const Detuning axis = parse_axis_name(free) == Axis::DeltaA ? Detuning::DeltaA : Detuning::Delta;
            RootSearch search{lo, hi};
            search.grid_step = grid_step;
            return ucpb_roots(p, axis, search);
        },
        py::arg("params"), py::arg("free") = "delta", py::arg("lo") = -60.0, py::arg("hi") = 60.0,
        py::arg("grid_step") = 0.25);

    // Master-equation steady state.
    py::class_<SteadyStateResult>(m, "SteadyState")
        .def_property_readonly("rho", [](const SteadyStateResult& r) { return r.rho.entries(); })
        .def_readonly("g2", &SteadyStateResult::g2_zero)
        .def_readonly("n_a", &SteadyStateResult::n_a)
        .def_readonly("cutoff", &SteadyStateResult::cutoff_used)
        .def_readonly("residual", &SteadyStateResult::residual);
    m.def(
        "steady_state", [](const ModelParams& p, int cutoff) { return solve_steady_state(p, HilbertSpace(cutoff)); },
        py::arg("params"), py::arg("cutoff") = kDefaultCutoff, py::call_guard<py::gil_scoped_release>());
    m.def(
        "converged_steady_state",
        [](const ModelParams& p, int initial_cutoff, double rel_tol, int max_cutoff) {
            ConvergencePolicy policy;
            policy.initial_cutoff = initial_cutoff;
            policy.rel_tol = rel_tol;
            policy.max_cutoff = max_cutoff;
            return converged_solve(p, policy);
        },
        py::arg("params"), py::arg("initial_cutoff") = 6, py::arg("rel_tol") = 1e-6, py::arg("max_cutoff") = kMaxCutoff,
        py::call_guard<py::gil_scoped_release>());

    // Sweeps.
    py::class_<AxisSpec>(m, "AxisSpec")
        .def(py::init([](const std::string& name, double start, double stop, int steps) {
                 return AxisSpec{parse_axis_name(name), start, stop, steps};
             }),
             py::arg("name"), py::arg("start"), py::arg("stop"), py::arg("steps"))
        .def_property_readonly("name", [](const AxisSpec& a) { return to_string(a.name); })
        .def_readonly("start", &AxisSpec::start)
        .def_readonly("stop", &AxisSpec::stop)
        .def_readonly("steps", &AxisSpec::steps)
        .def("values", &AxisSpec::values);

    py::class_<RecordRow>(m, "SweepRow")
        .def_readonly("axis_values", &RecordRow::axis_values)
        .def_readonly("g2_numeric", &RecordRow::g2_numeric)
        .def_readonly("g2_analytic", &RecordRow::g2_analytic)
        .def_readonly("n_a_numeric", &RecordRow::n_a_numeric)
        .def_readonly("n_a_analytic", &RecordRow::n_a_analytic)
        .def_readonly("cutoff_used", &RecordRow::cutoff_used)
        .def_readonly("residual", &RecordRow::residual)
        .def_property_readonly("status", [](const RecordRow& r) { return to_string(r.status); });
    m.def(
        "sweep",
        [](const ModelParams& base, py::object axis1, py::object axis2, const std::string& engines, int cutoff,
           std::optional<double> converge_tol, int max_cutoff, unsigned threads) {
            SweepSpec spec;
            spec.base = base;
            spec.axis1 = axis_from(axis1);
            if (!axis2.is_none()) spec.axis2 = axis_from(axis2);
            spec.engines = parse_engines(engines);
            spec.cutoff = cutoff_from(cutoff, converge_tol, max_cutoff);
            py::gil_scoped_release release;
            return run_sweep(spec, threads);
        },
        py::arg("base"), py::arg("axis"), py::arg("axis2") = py::none(), py::arg("engines") = "numeric,analytic",
        py::arg("cutoff") = kDefaultCutoff, py::arg("converge_tol") = py::none(), py::arg("max_cutoff") = kMaxCutoff,
        py::arg("threads") = 0);

    py::class_<CompareRow>(m, "CompareRow")
        .def_readonly("axis_value", &CompareRow::axis_value)
        .def_readonly("g2_composite", &CompareRow::g2_composite)
        .def_readonly("g2_jc", &CompareRow::g2_jc)
        .def_readonly("g2_bimode", &CompareRow::g2_bimode)
        .def_readonly("n_a_composite", &CompareRow::n_a_composite)
        .def_readonly("n_a_jc", &CompareRow::n_a_jc)
        .def_readonly("n_a_bimode", &CompareRow::n_a_bimode)
        .def_property_readonly("status", [](const CompareRow& r) { return to_string(r.status); });
    m.def(
        "compare",
        [](const ModelParams& base, py::object axis, int cutoff, std::optional<double> converge_tol, int max_cutoff,
           unsigned threads) {
            const AxisSpec spec = axis_from(axis);
            const CutoffPolicy policy = cutoff_from(cutoff, converge_tol, max_cutoff);
            py::gil_scoped_release release;
            return run_compare(base, spec, policy, threads);
        },
        py::arg("base"), py::arg("axis"), py::arg("cutoff") = kDefaultCutoff, py::arg("converge_tol") = py::none(),
        py::arg("max_cutoff") = kMaxCutoff, py::arg("threads") = 0);
}
