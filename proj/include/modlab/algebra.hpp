#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modlab/matrix.hpp"

namespace modlab {

/// The finite-dimensional W*-algebra M = ⊕_k M_{n_k}(C), given by its block
/// dimensions.
struct FiniteAlgebra {
  std::vector<int> blocks;

  FiniteAlgebra() = default;
  explicit FiniteAlgebra(std::vector<int> dims);

  int block_count() const { return static_cast<int>(blocks.size()); }
  bool operator==(const FiniteAlgebra&) const = default;
};

/// An element of M: one dense matrix per block.
struct AlgebraElement {
  std::vector<Mat> blocks;

  AlgebraElement() = default;
  explicit AlgebraElement(std::vector<Mat> b) : blocks(std::move(b)) {}

  static AlgebraElement zero(const FiniteAlgebra& alg);
  static AlgebraElement identity(const FiniteAlgebra& alg);
  /// Matrix unit E_{ij} in block k, zero elsewhere.
  static AlgebraElement matrix_unit(const FiniteAlgebra& alg, int k, int i, int j);

  bool compatible_with(const FiniteAlgebra& alg) const;
  bool same_shape(const AlgebraElement& o) const;

  AlgebraElement adjoint() const;
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator*(cd s) const;
  friend AlgebraElement operator*(cd s, const AlgebraElement& a) { return a * s; }

  cd trace() const;
  Norms norms() const;  // op = max over blocks, hs/trace aggregated
  double op_norm() const { return norms().op; }
  bool is_hermitian(double tol = default_tol().hermitian_tol) const;
};

/// A positive normal functional phi(x) = sum_k trace(rho_k x_k), kept
/// unnormalized. The spectral data of the density is cached at construction.
class Functional {
 public:
  Functional() = default;
  Functional(FiniteAlgebra alg, AlgebraElement density,
             const Tolerances& tol = default_tol());

  const FiniteAlgebra& algebra() const { return algebra_; }
  const AlgebraElement& density() const { return density_; }
  const std::vector<SpectralDecomposition>& spectral() const { return spectral_; }

  double total_mass() const { return total_mass_; }
  bool faithful(const Tolerances& tol = default_tol()) const;

  /// rho_phi^z blockwise via the cached decomposition; z = 0 gives [phi].
  AlgebraElement power(cd z, const Tolerances& tol = default_tol()) const;

  Functional scaled(double s, const Tolerances& tol = default_tol()) const;

 private:
  FiniteAlgebra algebra_;
  AlgebraElement density_;
  std::vector<SpectralDecomposition> spectral_;
  double total_mass_ = 0;
};

/// Finite orthogonal sum of positive functionals (the paper-restricted weight).
struct Weight {
  std::vector<Functional> summands;

  Weight() = default;
  Weight(std::vector<Functional> parts, const Tolerances& tol = default_tol());

  double total_mass() const;
  bool faithful(const Tolerances& tol = default_tol()) const;
};

cd evaluate(const Functional& phi, const AlgebraElement& x);
AlgebraElement support(const Functional& phi, const Tolerances& tol = default_tol());

struct MajorizationResult {
  bool holds = false;
  std::optional<AlgebraElement> witness;  // c with phi^{1/2} = c psi^{1/2}
};

/// Tests psi - phi >= 0 and, when it holds, produces the contraction witness
/// c = rho_phi^{1/2} rho_psi^{-1/2} (pseudo-inverse on the support).
MajorizationResult majorization_check(const Functional& phi, const Functional& psi,
                                      const Tolerances& tol = default_tol());

/// Deterministic generators for property suites (hand-rolled Box-Muller on
/// top of mt19937_64 so reports are reproducible across standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  double uniform();            // [0,1)
  double normal();             // N(0,1)
  cd cnormal();                // complex standard normal
  Mat gaussian_matrix(int n);  // iid complex Gaussian entries

 private:
  std::uint64_t next_u64();
  std::uint64_t state_;
};

Mat random_hermitian(Rng& rng, int n);
/// Density G^* G normalized to the requested mass; rank < n compresses G.
Mat random_density(Rng& rng, int n, double mass = 1.0, int rank = -1);
Functional random_state(Rng& rng, const FiniteAlgebra& alg, double mass = 1.0,
                        int rank = -1);
AlgebraElement random_element(Rng& rng, const FiniteAlgebra& alg);

}  // namespace modlab
