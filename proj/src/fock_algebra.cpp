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

#include "pblockade/fock_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace pblockade {

namespace {

void require_same_space(const HilbertSpace& a, const HilbertSpace& b, const char* where) {
    if (!(a == b)) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(where) + ": operands live on spaces of dimension " + std::to_string(a.dim()) +
                        " and " + std::to_string(b.dim()));
    }
}

void require_square(const HilbertSpace& space, const Matrix& m, const char* what) {
    if (m.rows() != space.dim() || m.cols() != space.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(what) + ": expected " + std::to_string(space.dim()) + "x" +
                        std::to_string(space.dim()) + " entries, got " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()));
    }
}

}  // namespace

HilbertSpace::HilbertSpace(int photon_cutoff) : cutoff_(photon_cutoff) {
    // Two-photon states must be representable.
    if (photon_cutoff < 2) {
        throw Error(ErrorKind::InvalidArgument,
                    "photon cutoff must be at least 2, got " + std::to_string(photon_cutoff));
    }
}

int HilbertSpace::index(int photons, bool excited) const {
    if (photons < 0 || photons > cutoff_) {
        throw Error(ErrorKind::InvalidArgument, "photon number " + std::to_string(photons) + " outside [0, " +
                                                    std::to_string(cutoff_) + "]");
    }
    return (excited ? 1 : 0) * fock_dim() + photons;
}

OperatorMatrix::OperatorMatrix(HilbertSpace space, Matrix entries) : space_(space), entries_(std::move(entries)) {
    require_square(space_, entries_, "OperatorMatrix");
}

OperatorMatrix OperatorMatrix::dagger() const { return {space_, entries_.adjoint()}; }

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_space(a.space_, b.space_, "operator product");
    return {a.space_, a.entries_ * b.entries_};
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_space(a.space_, b.space_, "operator sum");
    return {a.space_, a.entries_ + b.entries_};
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_space(a.space_, b.space_, "operator difference");
    return {a.space_, a.entries_ - b.entries_};
}

OperatorMatrix operator*(Complex s, const OperatorMatrix& a) { return {a.space_, s * a.entries_}; }

DensityMatrix::DensityMatrix(HilbertSpace space, Matrix entries) : space_(space), entries_(std::move(entries)) {
    require_square(space_, entries_, "DensityMatrix");
}

DensityMatrix DensityMatrix::pure(HilbertSpace space, const Vector& state) {
    if (state.size() != space.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "state vector length " + std::to_string(state.size()) +
                                                      " does not match dim " + std::to_string(space.dim()));
    }
    const double norm = state.norm();
    if (norm == 0.0) {
        throw Error(ErrorKind::InvalidArgument, "cannot build a density matrix from the zero vector");
    }
    const Vector psi = state / norm;
    return {space, psi * psi.adjoint()};
}

DensityMatrix DensityMatrix::basis_state(HilbertSpace space, int photons, bool excited) {
    Vector psi = Vector::Zero(space.dim());
    psi(space.index(photons, excited)) = 1.0;
    return pure(space, psi);
}

DensityMatrix DensityMatrix::maximally_mixed(HilbertSpace space) {
    return {space, Matrix::Identity(space.dim(), space.dim()) / static_cast<double>(space.dim())};
}

DensityCheck DensityMatrix::validate() const {
    DensityCheck check{};
    check.hermiticity_error = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    check.trace_error = std::abs(entries_.trace() - Complex(1.0, 0.0));
    const Matrix herm = 0.5 * (entries_ + entries_.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
    check.min_eigenvalue = solver.eigenvalues().minCoeff();
    return check;
}

bool DensityMatrix::is_valid(double herm_tol, double trace_tol, double psd_tol) const {
    const DensityCheck c = validate();
    return c.hermiticity_error <= herm_tol && c.trace_error <= trace_tol && c.min_eigenvalue >= -psd_tol;
}

Matrix fock_annihilation(int photon_cutoff) {
    const int n = photon_cutoff + 1;
    Matrix a = Matrix::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    return a;
}

Matrix qd_lowering_factor() {
    Matrix s = Matrix::Zero(kQdLevels, kQdLevels);
    s(0, 1) = 1.0;  // |g><e|
    return s;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

OperatorMatrix tensor(const Matrix& qd_factor, const Matrix& fock_factor, const HilbertSpace& space) {
    if (qd_factor.rows() != kQdLevels || qd_factor.cols() != kQdLevels || fock_factor.rows() != space.fock_dim() ||
        fock_factor.cols() != space.fock_dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "tensor: factors " + std::to_string(qd_factor.rows()) + "x" + std::to_string(qd_factor.cols()) +
                        " and " + std::to_string(fock_factor.rows()) + "x" + std::to_string(fock_factor.cols()) +
                        " do not compose to dim " + std::to_string(space.dim()));
    }
    return {space, kron(qd_factor, fock_factor)};
}

OperatorMatrix identity_op(const HilbertSpace& space) {
    return {space, Matrix::Identity(space.dim(), space.dim())};
}

OperatorMatrix annihilation_op(const HilbertSpace& space) {
    return tensor(Matrix::Identity(kQdLevels, kQdLevels), fock_annihilation(space.photon_cutoff()), space);
}

OperatorMatrix qd_lowering_op(const HilbertSpace& space) {
    return tensor(qd_lowering_factor(), Matrix::Identity(space.fock_dim(), space.fock_dim()), space);
}

OperatorMatrix number_op(const HilbertSpace& space) {
    const OperatorMatrix a = annihilation_op(space);
    return a.dagger() * a;
}

Complex expectation(const DensityMatrix& rho, const OperatorMatrix& op) {
    require_same_space(rho.space(), op.space(), "expectation");
    // Tr(rho O) = sum_ij rho_ij O_ji
    return (rho.entries().transpose().cwiseProduct(op.entries())).sum();
}

}  // namespace pblockade
