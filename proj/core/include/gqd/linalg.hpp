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

#ifndef GQD_LINALG_HPP
#define GQD_LINALG_HPP

// Fixed-size complex linear algebra for single-qubit (2x2) and two-qubit (4x4)
// operators. Everything here is a pure function of its inputs.
//
// Basis convention: a single qubit is expanded in (|1>, |0>), so sigma_z is
// diag(+1, -1) and |1> is the +z Bloch pole. Two-qubit operators use the
// tensor order A (x) B, i.e. (|11>, |10>, |01>, |00>) with qubit A first.

#include <Eigen/Dense>
#include <complex>

namespace gqd {

using Complex = std::complex<double>;

template <int N>
using ComplexMatrix = Eigen::Matrix<Complex, N, N>;
using Mat2 = ComplexMatrix<2>;
using Mat4 = ComplexMatrix<4>;

template <int N>
using RealVector = Eigen::Matrix<double, N, 1>;

/// Inputs whose anti-Hermitian part exceeds this are rejected.
inline constexpr double kHermitianTolerance = 1e-10;
/// Eigenvalues in [-kPsdFloor, 0) are treated as round-off and clamped to zero.
inline constexpr double kPsdFloor = 1e-10;

template <int N>
struct EigenDecomposition {
    RealVector<N> values;     // non-increasing
    ComplexMatrix<N> vectors; // column k belongs to values[k]
};

double hermiticity_defect(const Mat2 &m);
double hermiticity_defect(const Mat4 &m);

EigenDecomposition<2> hermitian_eig(const Mat2 &m);
EigenDecomposition<4> hermitian_eig(const Mat4 &m);

/// Eigenvalues only, non-increasing. Skips the eigenvector accumulation and
/// the Hermiticity check; used in inner optimization loops.
RealVector<4> hermitian_eigenvalues_unchecked(const Mat4 &m);

Mat2 sqrt_psd(const Mat2 &m);
Mat4 sqrt_psd(const Mat4 &m);

double trace_norm(const Mat2 &m);
double trace_norm(const Mat4 &m);

double frobenius_norm(const Mat2 &m);
double frobenius_norm(const Mat4 &m);

/// Pauli matrix sigma_i in the (|1>, |0>) basis; i = 0 is the identity.
Mat2 pauli(int i);

Mat4 kron(const Mat2 &a, const Mat2 &b);

/// A validated two-qubit state: Hermitian, unit trace, positive semidefinite.
/// Construction is the only place the checks run, so holding one is proof of
/// validity.
class DensityMatrix4 {
  public:
    static constexpr double kHermitianTolerance = 1e-12;
    static constexpr double kTraceTolerance = 1e-12;

    /// Throws Error(InvalidState) naming the violated condition.
    static DensityMatrix4 from_matrix(const Mat4 &m);

    const Mat4 &matrix() const noexcept { return m_; }

    /// Zero-based element access, (0,0) is <11|rho|11>.
    Complex operator()(int row, int col) const { return m_(row, col); }

  private:
    explicit DensityMatrix4(const Mat4 &m) : m_(m) {}
    Mat4 m_;
};

/// F = [tr sqrt(sqrt(rho) chi sqrt(rho))]^2.
double uhlmann_fidelity(const DensityMatrix4 &rho, const DensityMatrix4 &chi);

/// Expansion coefficients in the orthonormal product basis sigma_i/sqrt(2) (x)
/// sigma_j/sqrt(2): c(i, j) = tr(M X_i (x) Y_j). Imaginary parts, which vanish
/// for Hermitian M, are dropped.
struct PauliCoefficients {
    Eigen::Matrix4d c;
};

PauliCoefficients pauli_decompose(const Mat4 &m);
Mat4 pauli_reconstruct(const PauliCoefficients &coefficients);

}  // namespace gqd

#endif  // GQD_LINALG_HPP
