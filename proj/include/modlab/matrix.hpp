#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "modlab/config.hpp"
#include "modlab/errors.hpp"

namespace modlab {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

/// Spectral data of a Hermitian block: A = U diag(eigenvalues) U^*.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;  // ascending
  Mat eigenvectors;             // unitary, columns are eigenvectors
  int support_rank = 0;         // eigenvalues above support_cutoff * max
};

double hermiticity_defect(const Mat& a);
bool is_hermitian(const Mat& a, double tol = default_tol().hermitian_tol);

/// Eigendecomposition of a Hermitian matrix; throws NotHermitian when the
/// input violates the tolerance and NumericalFailure if the solver fails.
SpectralDecomposition eigh(const Mat& a, const Tolerances& tol = default_tol());

/// rho^z on the support of a PSD matrix: zero eigenvalues map to zero, so
/// rho^{it} is a partial isometry with initial/final projection [rho].
Mat complex_power(const Mat& rho, cd z, const Tolerances& tol = default_tol());
Mat complex_power(const SpectralDecomposition& d, cd z,
                  const Tolerances& tol = default_tol());

/// Support projection [rho] of a PSD matrix.
Mat support_projection(const Mat& rho, const Tolerances& tol = default_tol());
Mat support_projection(const SpectralDecomposition& d,
                       const Tolerances& tol = default_tol());

struct Norms {
  double op = 0;     // largest singular value
  double hs = 0;     // Frobenius
  double trace = 0;  // nuclear
};

Norms norms(const Mat& a);

/// PSD check via the spectrum, relative to the largest eigenvalue.
bool is_psd(const Mat& a, const Tolerances& tol = default_tol());

}  // namespace modlab
