#pragma once

#include <array>
#include <stdexcept>

#include "heosc/linalg.hpp"
#include "heosc/spectrum.hpp"

namespace heosc {

class NonSymmetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AmbiguousPairingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigen-decomposition of a symmetric 4x4 matrix.
struct NumericEigenResult {
  std::array<double, 4> eigenvalues;   // ascending
  std::array<Vec4, 4> eigenvectors;    // orthonormal, aligned with eigenvalues
  int sweeps;
};

/// Cyclic-by-row Jacobi with threshold skipping; fixed sweep order makes the
/// result bit-stable across platforms. Converges when the off-diagonal
/// Frobenius norm falls below 1e-14 * ||input||_F; throws NoConvergenceError
/// after 50 sweeps and NonSymmetricError when the input is asymmetric beyond
/// 1e-12 relative.
NumericEigenResult symmetric_eigen_4x4(const Mat4& matrix);

/// Pairing of the analytic spectrum (slots 0..2 = modes, 3 = zero mode)
/// with numeric eigenpairs.
struct SpectrumMatch {
  std::array<int, 4> pairing;        // analytic slot -> numeric column
  double max_eigenvalue_deviation;   // max |lambda_hat - lambda_numeric|
  double max_angle_sine;             // max sin of angle between paired vectors
};

/// Greedy pairing by maximal |eigenvector dot product|. When a pairing dot
/// falls below 0.9 the match retries within the numeric eigenvalue cluster
/// nearest the analytic eigenvalue (degenerate spectra compress near the
/// rho -> 0 corner) and measures the angle against that subspace; if the
/// subspace projection is still below 0.9, AmbiguousPairingError is thrown.
SpectrumMatch match_spectra(const ModeSpectrum& analytic,
                            const NumericEigenResult& numeric);

}  // namespace heosc
