#pragma once

#include "modlab/algebra.hpp"

namespace modlab {

/// Element of the standard form L^2(M), modeled as a Hilbert-Schmidt matrix
/// per block.
struct L2Vector {
  std::vector<Mat> blocks;

  L2Vector() = default;
  explicit L2Vector(std::vector<Mat> b) : blocks(std::move(b)) {}
  explicit L2Vector(const AlgebraElement& a) : blocks(a.blocks) {}

  static L2Vector zero(const FiniteAlgebra& alg);

  L2Vector star() const;  // xi* = entrywise adjoint
  L2Vector operator+(const L2Vector& o) const;
  L2Vector operator-(const L2Vector& o) const;
  L2Vector operator*(cd s) const;
  friend L2Vector operator*(cd s, const L2Vector& v) { return v * s; }

  double norm() const;
};

/// <xi|eta> = sum_k trace(xi_k^* eta_k), conjugate-linear in the first slot.
cd inner(const L2Vector& xi, const L2Vector& eta);

enum class Side { Left, Right };

L2Vector gns_vector(const Functional& phi, const Tolerances& tol = default_tol());
L2Vector act(const AlgebraElement& a, const L2Vector& xi, Side side);

/// sigma^{phi,psi}_z(a) = rho_phi^{iz} a rho_psi^{-iz}; requires a = [phi]a[psi].
AlgebraElement relative_modular_flow(const Functional& phi, const Functional& psi,
                                     const AlgebraElement& a, cd z,
                                     const Tolerances& tol = default_tol());

/// phi^{iz} a psi^{1-iz} on the strip -1 <= Im z <= 0 (trace pairing element).
AlgebraElement modular_extension(const Functional& phi, const Functional& psi,
                                 const AlgebraElement& a, cd z,
                                 const Tolerances& tol = default_tol());

/// The interpolation bound ||phi^{it+r} a psi^{-it+1-r}||_tr <=
/// ||phi a||_tr^r ||a psi||_tr^{1-r}; returns (lhs, rhs).
std::pair<double, double> modular_extension_bound(const Functional& phi,
                                                  const Functional& psi,
                                                  const AlgebraElement& a, cd z,
                                                  const Tolerances& tol = default_tol());

/// L^2 residual of the KMS boundary identity at z = t - i/2.
double kms_check(const Functional& phi, const Functional& psi,
                 const AlgebraElement& a, double t,
                 const Tolerances& tol = default_tol());

}  // namespace modlab
