#include "modlab/algebra.hpp"

#include <cmath>
#include <numbers>

namespace modlab {

FiniteAlgebra::FiniteAlgebra(std::vector<int> dims) : blocks(std::move(dims)) {
  if (blocks.empty()) throw AlgebraMismatch("FiniteAlgebra: no blocks");
  for (int d : blocks)
    if (d < 1) throw AlgebraMismatch("FiniteAlgebra: block dim < 1");
}

AlgebraElement AlgebraElement::zero(const FiniteAlgebra& alg) {
  std::vector<Mat> b;
  b.reserve(alg.blocks.size());
  for (int d : alg.blocks) b.push_back(Mat::Zero(d, d));
  return AlgebraElement(std::move(b));
}

AlgebraElement AlgebraElement::identity(const FiniteAlgebra& alg) {
  std::vector<Mat> b;
  b.reserve(alg.blocks.size());
  for (int d : alg.blocks) b.push_back(Mat::Identity(d, d));
  return AlgebraElement(std::move(b));
}

AlgebraElement AlgebraElement::matrix_unit(const FiniteAlgebra& alg, int k, int i,
                                           int j) {
  AlgebraElement e = zero(alg);
  e.blocks.at(k)(i, j) = 1.0;
  return e;
}

bool AlgebraElement::compatible_with(const FiniteAlgebra& alg) const {
  if (blocks.size() != alg.blocks.size()) return false;
  for (size_t k = 0; k < blocks.size(); ++k)
    if (blocks[k].rows() != alg.blocks[k] || blocks[k].cols() != alg.blocks[k])
      return false;
  return true;
}

bool AlgebraElement::same_shape(const AlgebraElement& o) const {
  if (blocks.size() != o.blocks.size()) return false;
  for (size_t k = 0; k < blocks.size(); ++k)
    if (blocks[k].rows() != o.blocks[k].rows()) return false;
  return true;
}

static void check_shape(const AlgebraElement& a, const AlgebraElement& b) {
  if (!a.same_shape(b)) throw AlgebraMismatch("algebra element shape mismatch");
}

AlgebraElement AlgebraElement::adjoint() const {
  std::vector<Mat> b;
  b.reserve(blocks.size());
  for (const Mat& m : blocks) b.push_back(m.adjoint());
  return AlgebraElement(std::move(b));
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  check_shape(*this, o);
  std::vector<Mat> b;
  b.reserve(blocks.size());
  for (size_t k = 0; k < blocks.size(); ++k) b.push_back(blocks[k] + o.blocks[k]);
  return AlgebraElement(std::move(b));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  check_shape(*this, o);
  std::vector<Mat> b;
  b.reserve(blocks.size());
  for (size_t k = 0; k < blocks.size(); ++k) b.push_back(blocks[k] - o.blocks[k]);
  return AlgebraElement(std::move(b));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  check_shape(*this, o);
  std::vector<Mat> b;
  b.reserve(blocks.size());
  for (size_t k = 0; k < blocks.size(); ++k) b.push_back(blocks[k] * o.blocks[k]);
  return AlgebraElement(std::move(b));
}

AlgebraElement AlgebraElement::operator*(cd s) const {
  std::vector<Mat> b;
  b.reserve(blocks.size());
  for (const Mat& m : blocks) b.push_back(s * m);
  return AlgebraElement(std::move(b));
}

cd AlgebraElement::trace() const {
  cd t = 0;
  for (const Mat& m : blocks) t += m.trace();
  return t;
}

Norms AlgebraElement::norms() const {
  Norms r;
  for (const Mat& m : blocks) {
    Norms n = modlab::norms(m);
    r.op = std::max(r.op, n.op);
    r.hs = std::hypot(r.hs, n.hs);
    r.trace += n.trace;
  }
  return r;
}

bool AlgebraElement::is_hermitian(double tol) const {
  for (const Mat& m : blocks)
    if (!modlab::is_hermitian(m, tol)) return false;
  return true;
}

Functional::Functional(FiniteAlgebra alg, AlgebraElement density,
                       const Tolerances& tol)
    : algebra_(std::move(alg)), density_(std::move(density)) {
  if (!density_.compatible_with(algebra_))
    throw AlgebraMismatch("Functional: density does not match algebra");
  spectral_.reserve(density_.blocks.size());
  for (const Mat& rho : density_.blocks) {
    auto d = eigh(rho, tol);
    if (d.eigenvalues.size()) {
      const double top = std::max(d.eigenvalues.maxCoeff(), 0.0);
      if (d.eigenvalues.minCoeff() < -tol.support_cutoff * std::max(top, 1.0))
        throw NotPSD("Functional: density has a negative eigenvalue");
    }
    spectral_.push_back(std::move(d));
  }
  total_mass_ = density_.trace().real();
}

bool Functional::faithful(const Tolerances& tol) const {
  for (size_t k = 0; k < spectral_.size(); ++k)
    if (spectral_[k].support_rank < algebra_.blocks[k]) return false;
  (void)tol;
  return true;
}

AlgebraElement Functional::power(cd z, const Tolerances& tol) const {
  std::vector<Mat> b;
  b.reserve(spectral_.size());
  for (const auto& d : spectral_) b.push_back(complex_power(d, z, tol));
  return AlgebraElement(std::move(b));
}

Functional Functional::scaled(double s, const Tolerances& tol) const {
  return Functional(algebra_, density_ * cd(s, 0), tol);
}

Weight::Weight(std::vector<Functional> parts, const Tolerances& tol)
    : summands(std::move(parts)) {
  if (summands.empty()) throw AlgebraMismatch("Weight: empty sum");
  for (size_t i = 0; i < summands.size(); ++i)
    for (size_t j = i + 1; j < summands.size(); ++j) {
      if (!(summands[i].algebra() == summands[j].algebra()))
        throw AlgebraMismatch("Weight: summands on different algebras");
      AlgebraElement p = support(summands[i], tol) * support(summands[j], tol);
      if (p.op_norm() > tol.power_tol)
        throw AlgebraMismatch("Weight: supports not orthogonal");
    }
}

double Weight::total_mass() const {
  double m = 0;
  for (const auto& f : summands) m += f.total_mass();
  return m;
}

bool Weight::faithful(const Tolerances& tol) const {
  AlgebraElement s = AlgebraElement::zero(summands.front().algebra());
  for (const auto& f : summands) s = s + support(f, tol);
  return (s - AlgebraElement::identity(summands.front().algebra())).op_norm() <=
         tol.power_tol;
}

cd evaluate(const Functional& phi, const AlgebraElement& x) {
  if (!x.compatible_with(phi.algebra()))
    throw AlgebraMismatch("evaluate: element does not match algebra");
  cd v = 0;
  for (size_t k = 0; k < x.blocks.size(); ++k)
    v += (phi.density().blocks[k] * x.blocks[k]).trace();
  return v;
}

AlgebraElement support(const Functional& phi, const Tolerances& tol) {
  return phi.power(cd(0, 0), tol);
}

MajorizationResult majorization_check(const Functional& phi, const Functional& psi,
                                      const Tolerances& tol) {
  if (!(phi.algebra() == psi.algebra()))
    throw AlgebraMismatch("majorization_check: different algebras");
  MajorizationResult r;
  AlgebraElement diff = psi.density() - phi.density();
  bool psd = true;
  for (const Mat& m : diff.blocks)
    if (!is_psd(m, tol)) {
      psd = false;
      break;
    }
  r.holds = psd;
  if (psd) {
    AlgebraElement c = phi.power(0.5, tol) * psi.power(-0.5, tol);
    r.witness = c;
  }
  return r;
}

std::uint64_t Rng::next_u64() {
  // splitmix64; stable across platforms
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  double u1 = uniform(), u2 = uniform();
  while (u1 <= 1e-300) u1 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

cd Rng::cnormal() {
  double a = normal(), b = normal();
  return cd(a, b) / std::sqrt(2.0);
}

Mat Rng::gaussian_matrix(int n) {
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = cnormal();
  return g;
}

Mat random_hermitian(Rng& rng, int n) {
  Mat g = rng.gaussian_matrix(n);
  return 0.5 * (g + g.adjoint());
}

Mat random_density(Rng& rng, int n, double mass, int rank) {
  if (rank < 0 || rank > n) rank = n;
  Mat g = rng.gaussian_matrix(n).leftCols(rank).eval();
  Mat rho = g * g.adjoint();
  double tr = rho.trace().real();
  if (tr <= 0) {
    rho = Mat::Identity(n, n);
    tr = n;
  }
  return rho * (mass / tr);
}

Functional random_state(Rng& rng, const FiniteAlgebra& alg, double mass,
                        int rank) {
  std::vector<Mat> b;
  b.reserve(alg.blocks.size());
  double per = mass / alg.blocks.size();
  for (int d : alg.blocks) b.push_back(random_density(rng, d, per, rank));
  return Functional(alg, AlgebraElement(std::move(b)));
}

AlgebraElement random_element(Rng& rng, const FiniteAlgebra& alg) {
  std::vector<Mat> b;
  b.reserve(alg.blocks.size());
  for (int d : alg.blocks) b.push_back(rng.gaussian_matrix(d));
  return AlgebraElement(std::move(b));
}

}  // namespace modlab
