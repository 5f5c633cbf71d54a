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

#include <complex>

#include <Eigen/Dense>

#include "pblockade/error.hpp"

namespace pblockade {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kQdLevels = 2;

// Quantum dot (two levels) tensored with a Fock space truncated at
// `photon_cutoff`. Basis index = qd_index * (N + 1) + fock_index with
// qd_index 0 = |g>, 1 = |e>.
class HilbertSpace {
public:
    explicit HilbertSpace(int photon_cutoff);

    int photon_cutoff() const noexcept { return cutoff_; }
    int fock_dim() const noexcept { return cutoff_ + 1; }
    int dim() const noexcept { return kQdLevels * (cutoff_ + 1); }

    // Composite basis index of |n, qd>.
    int index(int photons, bool excited) const;

    friend bool operator==(const HilbertSpace&, const HilbertSpace&) = default;

private:
    int cutoff_;
};

class OperatorMatrix {
public:
    OperatorMatrix(HilbertSpace space, Matrix entries);

    const HilbertSpace& space() const noexcept { return space_; }
    const Matrix& entries() const noexcept { return entries_; }
    Complex operator()(Eigen::Index row, Eigen::Index col) const { return entries_(row, col); }

    OperatorMatrix dagger() const;

    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator*(Complex s, const OperatorMatrix& a);

private:
    HilbertSpace space_;
    Matrix entries_;
};

struct DensityCheck {
    double hermiticity_error;  // max |rho - rho^dagger|
    double trace_error;        // |Tr rho - 1|
    double min_eigenvalue;
};

// Density matrix on the composite space. Construction only checks the shape;
// validate() reports how far the invariants are from holding.
class DensityMatrix {
public:
    DensityMatrix(HilbertSpace space, Matrix entries);

    static DensityMatrix pure(HilbertSpace space, const Vector& state);
    static DensityMatrix basis_state(HilbertSpace space, int photons, bool excited);
    static DensityMatrix maximally_mixed(HilbertSpace space);

    const HilbertSpace& space() const noexcept { return space_; }
    const Matrix& entries() const noexcept { return entries_; }

    DensityCheck validate() const;
    bool is_valid(double herm_tol = 1e-10, double trace_tol = 1e-10, double psd_tol = 1e-9) const;

private:
    HilbertSpace space_;
    Matrix entries_;
};

// Single-factor matrices.
Matrix fock_annihilation(int photon_cutoff);
Matrix qd_lowering_factor();

// Kronecker product A (QD factor) x B (Fock factor) placed on `space`.
OperatorMatrix tensor(const Matrix& qd_factor, const Matrix& fock_factor, const HilbertSpace& space);

// Plain Kronecker product of two arbitrary matrices, first factor major.
Matrix kron(const Matrix& a, const Matrix& b);

OperatorMatrix identity_op(const HilbertSpace& space);
OperatorMatrix annihilation_op(const HilbertSpace& space);
OperatorMatrix qd_lowering_op(const HilbertSpace& space);
OperatorMatrix number_op(const HilbertSpace& space);

// Tr(rho O).
Complex expectation(const DensityMatrix& rho, const OperatorMatrix& op);

}  // namespace pblockade
