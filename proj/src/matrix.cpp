#include "modlab/matrix.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace modlab {

double hermiticity_defect(const Mat& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Mat& a, double tol) {
  if (a.size() == 0) return true;
  return hermiticity_defect(a) <= tol;
}

SpectralDecomposition eigh(const Mat& a, const Tolerances& tol) {
  if (a.rows() != a.cols()) throw NotHermitian("eigh: matrix not square");
  if (!is_hermitian(a, tol.hermitian_tol))
    throw NotHermitian("eigh: Hermitian tolerance violated");
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (a + a.adjoint()));
  if (es.info() != Eigen::Success)
    throw NumericalFailure("eigh: eigensolver did not converge");
  SpectralDecomposition d;
  d.eigenvalues = es.eigenvalues();
  d.eigenvectors = es.eigenvectors();
  const double top = d.eigenvalues.size() ? d.eigenvalues.maxCoeff() : 0.0;
  const double cut = tol.support_cutoff * std::max(top, 0.0);
  d.support_rank = 0;
  for (int i = 0; i < d.eigenvalues.size(); ++i)
    if (d.eigenvalues[i] > cut) ++d.support_rank;
  return d;
}

static void require_psd(const SpectralDecomposition& d, const Tolerances& tol) {
  if (d.eigenvalues.size() == 0) return;
  const double top = std::max(d.eigenvalues.maxCoeff(), 0.0);
  if (d.eigenvalues.minCoeff() < -tol.support_cutoff * std::max(top, 1.0))
    throw NotPSD("complex_power: significantly negative eigenvalue");
}

Mat complex_power(const SpectralDecomposition& d, cd z, const Tolerances& tol) {
  require_psd(d, tol);
  const int n = static_cast<int>(d.eigenvalues.size());
  const double top = n ? std::max(d.eigenvalues.maxCoeff(), 0.0) : 0.0;
  const double cut = tol.support_cutoff * top;
  Eigen::VectorXcd f(n);
  for (int i = 0; i < n; ++i) {
    const double lam = d.eigenvalues[i];
    f[i] = (lam > cut && lam > 0.0) ? std::exp(z * std::log(lam)) : cd(0, 0);
  }
  return d.eigenvectors * f.asDiagonal() * d.eigenvectors.adjoint();
}

Mat complex_power(const Mat& rho, cd z, const Tolerances& tol) {
  return complex_power(eigh(rho, tol), z, tol);
}

Mat support_projection(const SpectralDecomposition& d, const Tolerances& tol) {
  return complex_power(d, cd(0, 0), tol);
}

Mat support_projection(const Mat& rho, const Tolerances& tol) {
  return complex_power(rho, cd(0, 0), tol);
}

Norms norms(const Mat& a) {
  Norms r;
  if (a.size() == 0) return r;
  Eigen::JacobiSVD<Mat> svd(a);
  const auto& s = svd.singularValues();
  r.op = s.size() ? s.maxCoeff() : 0.0;
  r.hs = s.norm();
  r.trace = s.sum();
  return r;
}

bool is_psd(const Mat& a, const Tolerances& tol) {
  if (!is_hermitian(a, tol.hermitian_tol)) return false;
  auto d = eigh(a, tol);
  if (d.eigenvalues.size() == 0) return true;
  const double top = std::max(d.eigenvalues.maxCoeff(), 0.0);
  return d.eigenvalues.minCoeff() >= -tol.support_cutoff * std::max(top, 1.0);
}

}  // namespace modlab
