// Copyright 2026 The gqd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gqd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gqd/error.hpp"

namespace gqd {
namespace {

template <int N>
double hermiticity_defect_impl(const ComplexMatrix<N> &m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <int N>
void require_hermitian(const ComplexMatrix<N> &m) {
    double defect = hermiticity_defect_impl<N>(m);
    if (!(defect <= kHermitianTolerance)) {
        std::ostringstream os;
        os << "matrix is not Hermitian (max |M - M^dagger| = " << defect << ")";
        throw Error(ErrorCode::NonHermitianInput, os.str());
    }
}

template <int N>
EigenDecomposition<N> eig_impl(const ComplexMatrix<N> &m) {
    require_hermitian<N>(m);
    ComplexMatrix<N> h = (m + m.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix<N>> solver(h);
    // Eigen sorts ascending; flip to non-increasing.
    EigenDecomposition<N> out;
    for (int k = 0; k < N; ++k) {
        out.values[k] = solver.eigenvalues()[N - 1 - k];
        out.vectors.col(k) = solver.eigenvectors().col(N - 1 - k);
    }
    return out;
}

template <int N>
ComplexMatrix<N> sqrt_psd_impl(const ComplexMatrix<N> &m) {
    EigenDecomposition<N> e = eig_impl<N>(m);
    RealVector<N> roots;
    for (int k = 0; k < N; ++k) {
        double lambda = e.values[k];
        if (lambda < -kPsdFloor) {
            std::ostringstream os;
            os << "eigenvalue " << lambda << " is below the PSD floor -" << kPsdFloor;
            throw Error(ErrorCode::NotPositiveSemiDefinite, os.str());
        }
        roots[k] = std::sqrt(std::max(lambda, 0.0));
    }
    ComplexMatrix<N> r = e.vectors * roots.asDiagonal() * e.vectors.adjoint();
    return (r + r.adjoint()) * 0.5;
}

template <int N>
double trace_norm_impl(const ComplexMatrix<N> &m) {
    return eig_impl<N>(m).values.cwiseAbs().sum();
}

}  // namespace

double hermiticity_defect(const Mat2 &m) { return hermiticity_defect_impl<2>(m); }
double hermiticity_defect(const Mat4 &m) { return hermiticity_defect_impl<4>(m); }

EigenDecomposition<2> hermitian_eig(const Mat2 &m) { return eig_impl<2>(m); }
EigenDecomposition<4> hermitian_eig(const Mat4 &m) { return eig_impl<4>(m); }

RealVector<4> hermitian_eigenvalues_unchecked(const Mat4 &m) {
    Eigen::SelfAdjointEigenSolver<Mat4> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().reverse();
}

Mat2 sqrt_psd(const Mat2 &m) { return sqrt_psd_impl<2>(m); }
Mat4 sqrt_psd(const Mat4 &m) { return sqrt_psd_impl<4>(m); }

double trace_norm(const Mat2 &m) { return trace_norm_impl<2>(m); }
double trace_norm(const Mat4 &m) { return trace_norm_impl<4>(m); }

double frobenius_norm(const Mat2 &m) { return m.norm(); }
double frobenius_norm(const Mat4 &m) { return m.norm(); }

Mat2 pauli(int i) {
    const Complex I(0.0, 1.0);
    Mat2 s;
    switch (i) {
        case 0:
            s << 1, 0, 0, 1;
            break;
        case 1:
            s << 0, 1, 1, 0;
            break;
        case 2:
            s << 0, -I, I, 0;
            break;
        case 3:
            s << 1, 0, 0, -1;
            break;
        default:
            throw Error(ErrorCode::DomainError, "Pauli index must be in 0..3");
    }
    return s;
}

Mat4 kron(const Mat2 &a, const Mat2 &b) {
    Mat4 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

DensityMatrix4 DensityMatrix4::from_matrix(const Mat4 &m) {
    if (!m.allFinite()) {
        throw Error(ErrorCode::InvalidState, "density matrix has non-finite entries");
    }
    double defect = hermiticity_defect_impl<4>(m);
    if (defect > kHermitianTolerance) {
        std::ostringstream os;
        os << "density matrix is not Hermitian (max |M - M^dagger| = " << defect << ")";
        throw Error(ErrorCode::InvalidState, os.str());
    }
    Mat4 h = (m + m.adjoint()) * 0.5;
    double trace = h.trace().real();
    if (std::abs(trace - 1.0) > kTraceTolerance) {
        std::ostringstream os;
        os << "density matrix trace is " << trace << ", expected 1";
        throw Error(ErrorCode::InvalidState, os.str());
    }
    Eigen::SelfAdjointEigenSolver<Mat4> solver(h, Eigen::EigenvaluesOnly);
    double lowest = solver.eigenvalues()[0];
    if (lowest < -kPsdFloor) {
        std::ostringstream os;
        os << "density matrix is not positive semidefinite (eigenvalue " << lowest << ")";
        throw Error(ErrorCode::InvalidState, os.str());
    }
    return DensityMatrix4(h);
}

double uhlmann_fidelity(const DensityMatrix4 &rho, const DensityMatrix4 &chi) {
    Mat4 s = sqrt_psd(rho.matrix());
    Mat4 inner = s * chi.matrix() * s;
    inner = (inner + inner.adjoint()) * 0.5;
    RealVector<4> lambda = hermitian_eigenvalues_unchecked(inner);
    double root_sum = 0.0;
    for (int k = 0; k < 4; ++k) {
        root_sum += std::sqrt(std::max(lambda[k], 0.0));
    }
    return root_sum * root_sum;
}

PauliCoefficients pauli_decompose(const Mat4 &m) {
    PauliCoefficients out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            // tr(M sigma_i (x) sigma_j) / 2 == tr(M X_i (x) Y_j) with X = sigma/sqrt(2)
            out.c(i, j) = (m * kron(pauli(i), pauli(j))).trace().real() * 0.5;
        }
    }
    return out;
}

Mat4 pauli_reconstruct(const PauliCoefficients &coefficients) {
    Mat4 out = Mat4::Zero();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out += coefficients.c(i, j) * 0.5 * kron(pauli(i), pauli(j));
        }
    }
    return out;
}

}  // namespace gqd
