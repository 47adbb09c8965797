#include "modlab/standard_form.hpp"

#include <cmath>

namespace modlab {

L2Vector L2Vector::zero(const FiniteAlgebra& alg) {
  return L2Vector(AlgebraElement::zero(alg));
}

L2Vector L2Vector::star() const {
  std::vector<Mat> b;
  b.reserve(blocks.size());
  for (const Mat& m : blocks) b.push_back(m.adjoint());
  return L2Vector(std::move(b));
}

L2Vector L2Vector::operator+(const L2Vector& o) const {
  std::vector<Mat> b;
  b.reserve(blocks.size());
  for (size_t k = 0; k < blocks.size(); ++k) b.push_back(blocks[k] + o.blocks[k]);
  return L2Vector(std::move(b));
}

L2Vector L2Vector::operator-(const L2Vector& o) const {
  std::vector<Mat> b;
  b.reserve(blocks.size());
  for (size_t k = 0; k < blocks.size(); ++k) b.push_back(blocks[k] - o.blocks[k]);
  return L2Vector(std::move(b));
}

L2Vector L2Vector::operator*(cd s) const {
  std::vector<Mat> b;
  b.reserve(blocks.size());
  for (const Mat& m : blocks) b.push_back(s * m);
  return L2Vector(std::move(b));
}

double L2Vector::norm() const { return std::sqrt(std::abs(inner(*this, *this))); }

cd inner(const L2Vector& xi, const L2Vector& eta) {
  if (xi.blocks.size() != eta.blocks.size())
    throw AlgebraMismatch("inner: block count mismatch");
  cd v = 0;
  for (size_t k = 0; k < xi.blocks.size(); ++k)
    v += (xi.blocks[k].adjoint() * eta.blocks[k]).trace();
  return v;
}

L2Vector gns_vector(const Functional& phi, const Tolerances& tol) {
  return L2Vector(phi.power(0.5, tol));
}

L2Vector act(const AlgebraElement& a, const L2Vector& xi, Side side) {
  if (a.blocks.size() != xi.blocks.size())
    throw AlgebraMismatch("act: block count mismatch");
  std::vector<Mat> b;
  b.reserve(xi.blocks.size());
  for (size_t k = 0; k < xi.blocks.size(); ++k)
    b.push_back(side == Side::Left ? Mat(a.blocks[k] * xi.blocks[k])
                                   : Mat(xi.blocks[k] * a.blocks[k]));
  return L2Vector(std::move(b));
}

static void require_compressed(const Functional& phi, const Functional& psi,
                               const AlgebraElement& a, const Tolerances& tol) {
  AlgebraElement c = support(phi, tol) * a * support(psi, tol);
  if ((c - a).op_norm() > tol.power_tol)
    throw NotCompressed("element is not [phi]-[psi] compressed");
}

AlgebraElement relative_modular_flow(const Functional& phi, const Functional& psi,
                                     const AlgebraElement& a, cd z,
                                     const Tolerances& tol) {
  if (!(phi.algebra() == psi.algebra()) || !a.compatible_with(phi.algebra()))
    throw AlgebraMismatch("relative_modular_flow: algebra mismatch");
  require_compressed(phi, psi, a, tol);
  const cd iz = cd(0, 1) * z;
  return phi.power(iz, tol) * a * psi.power(-iz, tol);
}

AlgebraElement modular_extension(const Functional& phi, const Functional& psi,
                                 const AlgebraElement& a, cd z,
                                 const Tolerances& tol) {
  if (!(phi.algebra() == psi.algebra()) || !a.compatible_with(phi.algebra()))
    throw AlgebraMismatch("modular_extension: algebra mismatch");
  if (z.imag() < -1.0 - 1e-12 || z.imag() > 1e-12)
    throw OutOfStrip("modular_extension: Im z outside [-1, 0]");
  const cd iz = cd(0, 1) * z;
  return phi.power(iz, tol) * a * psi.power(cd(1, 0) - iz, tol);
}

std::pair<double, double> modular_extension_bound(const Functional& phi,
                                                  const Functional& psi,
                                                  const AlgebraElement& a, cd z,
                                                  const Tolerances& tol) {
  const double r = -z.imag();
  AlgebraElement v = modular_extension(phi, psi, a, z, tol);
  double lhs = v.norms().trace;
  double left = (AlgebraElement(phi.density()) * a).norms().trace;
  double right = (a * AlgebraElement(psi.density())).norms().trace;
  double rhs = std::pow(left, r) * std::pow(right, 1.0 - r);
  return {lhs, rhs};
}

double kms_check(const Functional& phi, const Functional& psi,
                 const AlgebraElement& a, double t, const Tolerances& tol) {
  require_compressed(phi, psi, a, tol);
  // value of phi^{iz} a psi^{-iz+1/2} at z = t - i/2
  const cd z(t, -0.5);
  const cd iz = cd(0, 1) * z;
  AlgebraElement analytic =
      phi.power(iz, tol) * a * psi.power(cd(0.5, 0) - iz, tol);
  AlgebraElement flow = relative_modular_flow(phi, psi, a, t, tol);
  AlgebraElement ref = phi.power(0.5, tol) * flow;
  L2Vector diff = L2Vector(analytic) - L2Vector(ref);
  return diff.norm();
}

}  // namespace modlab
