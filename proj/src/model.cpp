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

#include "pblockade/model.hpp"

#include <cmath>
#include <string>

namespace pblockade {

void ModelParams::validate() const {
    auto fail = [](const std::string& msg) { throw Error(ErrorKind::InvalidArgument, msg); };
    if (!(kappa > 0.0)) fail("kappa must be positive, got " + std::to_string(kappa));
    if (!(gamma > 0.0)) fail("gamma must be positive, got " + std::to_string(gamma));
    if (!(E >= 0.0)) fail("E must be non-negative, got " + std::to_string(E));
    if (!(U >= 0.0)) fail("U must be non-negative, got " + std::to_string(U));
    if (!(g >= 0.0)) fail("g must be non-negative, got " + std::to_string(g));
    if (!std::isfinite(delta) || !std::isfinite(delta_a)) fail("detunings must be finite");
}

double effective_gain(const PumpParams& pump) {
    if (!(pump.kappa_b > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "kappa_b must be positive, got " + std::to_string(pump.kappa_b));
    }
    return pump.F * pump.chi / std::hypot(pump.delta_b, pump.kappa_b / 2.0);
}

ModelParams jc_limit(const ModelParams& params) {
    ModelParams out = params;
    out.U = 0.0;
    return out;
}

ModelParams bimode_limit(const ModelParams& params) {
    ModelParams out = params;
    out.g = 0.0;
    return out;
}

OperatorMatrix build_hamiltonian(const ModelParams& params, const HilbertSpace& space) {
    params.validate();
    const OperatorMatrix a = annihilation_op(space);
    const OperatorMatrix ad = a.dagger();
    const OperatorMatrix sm = qd_lowering_op(space);
    const OperatorMatrix sp = sm.dagger();

    return Complex(params.delta) * (sp * sm) + Complex(params.delta_a) * (ad * a) +
           Complex(params.g) * (sp * a + sm * ad) + Complex(params.E) * (a + ad) +
           Complex(params.U) * (a * a + ad * ad);
}

Superoperator::Superoperator(HilbertSpace space, Matrix entries) : space_(space), entries_(std::move(entries)) {
    const Eigen::Index d2 = static_cast<Eigen::Index>(space_.dim()) * space_.dim();
    if (entries_.rows() != d2 || entries_.cols() != d2) {
        throw Error(ErrorKind::DimensionMismatch, "Superoperator: expected " + std::to_string(d2) + "x" +
                                                      std::to_string(d2) + " entries");
    }
}

Matrix Superoperator::apply(const Matrix& rho) const { return unvec(entries_ * vec(rho), space_.dim()); }

double Superoperator::trace_leak() const {
    const int d = space_.dim();
    Eigen::RowVectorXcd tr = Eigen::RowVectorXcd::Zero(entries_.rows());
    for (int i = 0; i < d; ++i) tr(i * d + i) = 1.0;
    return (tr * entries_).cwiseAbs().maxCoeff();
}

Superoperator build_liouvillian(const ModelParams& params, const HilbertSpace& space) {
    const int d = space.dim();
    const Matrix id = Matrix::Identity(d, d);
    const Matrix h = build_hamiltonian(params, space).entries();
    const Matrix a = annihilation_op(space).entries();
    const Matrix sm = qd_lowering_op(space).entries();

    const Complex i(0.0, 1.0);
    Matrix l = -i * (kron(id, h) - kron(h.transpose(), id));

    auto add_dissipator = [&](const Matrix& o, double rate) {
        const Matrix ono = o.adjoint() * o;
        // rate/2 * (2 o rho o+ - o+o rho - rho o+o)
        l += (rate / 2.0) * (2.0 * kron(o.conjugate(), o) - kron(id, ono) - kron(ono.transpose(), id));
    };
    add_dissipator(a, params.kappa);
    add_dissipator(sm, params.gamma);
    return {space, std::move(l)};
}

Vector vec(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

Matrix unvec(const Vector& v, Eigen::Index dim) {
    if (v.size() != dim * dim) {
        throw Error(ErrorKind::DimensionMismatch, "unvec: length " + std::to_string(v.size()) +
                                                      " is not " + std::to_string(dim) + "^2");
    }
    return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

}  // namespace pblockade
