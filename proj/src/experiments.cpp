#include "modlab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <thread>

namespace modlab {

namespace {

constexpr double kPi = std::numbers::pi;

Functional two_level_state(double p = 0.75, double mass = 1.0) {
  FiniteAlgebra alg({2});
  AlgebraElement rho = AlgebraElement::zero(alg);
  rho.blocks[0](0, 0) = mass * p;
  rho.blocks[0](1, 1) = mass * (1 - p);
  return Functional(alg, rho);
}

Functional random_faithful(Rng& rng, const FiniteAlgebra& alg,
                           double mass = 1.0) {
  return random_state(rng, alg, mass, -1);
}

Envelope random_gaussian_env(Rng& rng) {
  const double alpha = 0.6 + 0.8 * rng.uniform();
  const cd beta(0.8 * (rng.uniform() - 0.5), 0.8 * (rng.uniform() - 0.5));
  const cd amp = cd(0.5, 0) + cd(rng.uniform(), rng.uniform());
  std::vector<cd> poly{cd(1, 0)};
  if (rng.uniform() < 0.5) poly.push_back(0.3 * rng.cnormal());
  return Envelope::gaussian(alpha, beta, amp, poly);
}

InterpolatorSpec random_gaussian_spec(Rng& rng, const Functional& state,
                                      int terms) {
  InterpolatorSpec spec;
  for (int i = 0; i < terms; ++i)
    spec.terms.push_back({random_gaussian_env(rng),
                          random_element(rng, state.algebra()), state,
                          random_element(rng, state.algebra())});
  return spec;
}

double rel_diff(cd a, cd b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

// ---------------------------------------------------------------- suite 1

std::vector<ReportRow> suite_haagerup_trace(const ExperimentConfig& cfg,
                                            const json& params) {
  std::vector<double> mus{0.0, 0.5, 1.0, 2.0};
  if (params.contains("mu_values"))
    mus = params["mu_values"].get<std::vector<double>>();
  const Functional omega = two_level_state();
  const AlgebraElement one = AlgebraElement::identity(omega.algebra());
  std::vector<ReportRow> rows;
  for (double mu : mus) {
    auto r = haagerup_trace(one, omega, mu, cfg.grid, cfg.lgrid, cfg.tol);
    rows.push_back(make_row("haagerup_trace:grid", r.grid_route, r.closed_form,
                            cfg.tol.haagerup_tol, json{{"mu", mu}}));
    rows.push_back(make_row("haagerup_trace:spectral", r.spectral_route,
                            r.closed_form, 1e-6 * cfg.tol.haagerup_tol / 1e-5,
                            json{{"mu", mu}}));
  }
  bool diverged = false;
  try {
    haagerup_trace(one, omega, -1.5, cfg.grid, cfg.lgrid, cfg.tol);
  } catch (const DivergentTrace&) {
    diverged = true;
  }
  rows.push_back(make_flag_row("haagerup_trace:divergence_flag", diverged,
                               diverged ? 0.0 : 1.0, 0.5,
                               json{{"mu", -1.5}}));
  return rows;
}

// ---------------------------------------------------------------- suite 2

std::vector<ReportRow> suite_haagerup_xform(const ExperimentConfig& cfg,
                                            const json&) {
  const Functional omega = two_level_state();
  const FiniteAlgebra& alg = omega.algebra();
  Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::pair<std::string, AlgebraElement>> xs;
  xs.emplace_back("E11", AlgebraElement::matrix_unit(alg, 0, 0, 0));
  xs.emplace_back("E12+E21",
                  AlgebraElement::matrix_unit(alg, 0, 0, 1) +
                      AlgebraElement::matrix_unit(alg, 0, 1, 0));
  AlgebraElement h = AlgebraElement::zero(alg);
  h.blocks[0] = random_hermitian(rng, 2);
  xs.emplace_back("random_hermitian", h);

  std::vector<ReportRow> rows;
  for (const auto& [label, x] : xs) {
    for (cd mu : {cd(0.5, 0), cd(1, 0), cd(-0.5, 0)}) {
      auto r = haagerup_trace(x, omega, mu, cfg.grid, cfg.lgrid, cfg.tol);
      json p{{"x", label}, {"mu", {mu.real(), mu.imag()}}};
      rows.push_back(make_row("haagerup_xform:grid", r.grid_route,
                              r.closed_form, cfg.tol.haagerup_tol, p));
      rows.push_back(make_row("haagerup_xform:spectral", r.spectral_route,
                              r.closed_form, cfg.tol.haagerup_tol, p));
    }
  }
  return rows;
}

// ---------------------------------------------------------------- suite 3

std::vector<ReportRow> suite_trace_formula_residue(const ExperimentConfig& cfg,
                                                   const json&) {
  std::vector<ReportRow> rows;
  for (auto [beta, mass] : {std::pair{-0.3, 1.0}, {-0.25, 1.0}, {-0.25, 2.0}}) {
    const Functional phi = two_level_state(0.75, mass);
    auto spec = scalar_spec(Envelope::rational(cd(beta, 0), cd(1, 0)), phi,
                            AlgebraElement::identity(phi.algebra()),
                            AlgebraElement::identity(phi.algebra()));
    auto chk = trace_formula_theorem_check(spec, cfg.grid, cfg.lgrid, cfg.tol);
    const cd closed = 2 * kPi * mass / (2 * beta + 1);
    json p{{"beta", beta}, {"phi_mass", mass}};
    rows.push_back(make_row("trace_formula:spectral_route", chk.lhs, closed,
                            cfg.tol.haagerup_tol, p));
    rows.push_back(make_row("trace_formula:grid_route", chk.rhs, closed,
                            cfg.tol.haagerup_tol, p));
    rows.push_back(make_row("trace_formula:routes_agree", chk.lhs, chk.rhs,
                            2 * cfg.tol.haagerup_tol, p));
  }
  return rows;
}

// ---------------------------------------------------------------- suite 4

std::vector<ReportRow> suite_boundary_catalogue(const ExperimentConfig& cfg,
                                                const json&) {
  const Functional phi = two_level_state();
  const AlgebraElement one = AlgebraElement::identity(phi.algebra());
  std::vector<ReportRow> rows;
  for (double mu : {1.0, 0.5, 0.0, -0.3}) {
    auto spec =
        scalar_spec(Envelope::rational(cd(mu, 0), cd(1, 0)), phi, one, one);
    const LambdaFunction m =
        boundary_operator(spec, cfg.lgrid, cfg.grid, cfg.tol);
    const LambdaFunction ref =
        mu >= 0
            ? LambdaFunction::indicator_exp(cfg.lgrid, mu, 2 * kPi, true)
            : LambdaFunction::indicator_exp(cfg.lgrid, mu, -2 * kPi, false);
    const double sup = m.sup_distance(ref);
    rows.push_back(make_flag_row("boundary_catalogue:sup_error", sup <= 1e-8,
                                 sup, 1e-8, json{{"mu", mu}}));
  }
  for (double beta : {-0.3, -0.25}) {
    auto spec =
        scalar_spec(Envelope::rational(cd(beta, 0), cd(1, 0)), phi, one, one);
    const LambdaFunction r = residue_operator(spec, cfg.lgrid, cfg.tol);
    double worst = 0;
    for (int j = 0; j < cfg.lgrid.size(); ++j) {
      const cd ref = 2 * kPi * std::exp(beta * cfg.lgrid.lambda(j));
      worst = std::max(worst, std::abs(r.values[j] - ref) / std::abs(ref));
    }
    rows.push_back(make_flag_row("boundary_catalogue:residue_rel_error",
                                 worst <= 1e-8, worst, 1e-8,
                                 json{{"beta", beta}}));
  }
  return rows;
}

// ---------------------------------------------------------------- suite 5

std::vector<ReportRow> suite_hilbert_algebra_axioms(const ExperimentConfig& cfg,
                                                    const json& params) {
  int count = params.value("count", 50);
  Rng rng(cfg.seed ^ 0xd1b54a32d192ed03ULL);
  double worst_symmetry = 0, worst_positivity = 0, worst_l1 = 0;
  double worst_assoc = 0, worst_cauchy = 0, worst_theta = 0;

  for (int i = 0; i < count; ++i) {
    const int n = 2 + i % 3;
    const FiniteAlgebra alg({n});
    const Functional state = random_faithful(rng, alg);
    const InterpolatorSpec f = random_gaussian_spec(rng, state, 1 + i % 2);
    const InterpolatorSpec g = random_gaussian_spec(rng, state, 1);
    const InterpolatorSpec h = random_gaussian_spec(rng, state, 1);

    const HilbertVector bf = boundary_vector(f, cfg.grid, cfg.tol);
    const HilbertVector bg = boundary_vector(g, cfg.grid, cfg.tol);
    const HilbertVector bfs =
        boundary_vector(star_spec(f), cfg.grid, cfg.tol);
    const HilbertVector bgs =
        boundary_vector(star_spec(g), cfg.grid, cfg.tol);

    // (f*|g*) = (g|f)
    worst_symmetry = std::max(
        worst_symmetry, rel_diff(hilbert_inner(bfs, bgs, cfg.tol),
                                 hilbert_inner(bg, bf, cfg.tol)));
    // tau(f*f) >= 0
    worst_positivity =
        std::min(worst_positivity, hilbert_inner(bf, bf, cfg.tol).real());

    // sections: submultiplicative l1 norm and associativity
    const GridSection sf = to_section(f, cfg.grid, cfg.tol);
    const GridSection sg = to_section(g, cfg.grid, cfg.tol);
    const GridSection sh = to_section(h, cfg.grid, cfg.tol);
    auto cache = TwistCache::build(state, cfg.grid, cfg.tol);
    const GridSection fg = convolve(sf, sg, cache, cfg.tol);
    worst_l1 = std::max(worst_l1, fg.l1_norm() - sf.l1_norm() * sg.l1_norm());
    const GridSection left = convolve(fg, sh, cache, cfg.tol);
    const GridSection right =
        convolve(sf, convolve(sg, sh, cache, cfg.tol), cache, cfg.tol);
    double assoc = 0, scale = std::max(left.linf_norm(), 1e-300);
    for (int j = 0; j < cfg.grid.size(); ++j)
      assoc = std::max(assoc,
                       (left.values[j] - right.values[j]).op_norm() / scale);
    worst_assoc = std::max(worst_assoc, assoc);

    // contour-shift (Cauchy) identity
    const auto p1 = pair_profile(f, g, 0.0, 0.5, cfg.grid, cfg.tol);
    const auto p2 = pair_profile(f, g, 0.5, 0.0, cfg.grid, cfg.tol);
    double pscale = 1e-300, pdiff = 0;
    for (int j = 0; j < cfg.grid.size(); ++j)
      pscale = std::max(pscale, p1[j].op_norm());
    for (int j = 0; j < cfg.grid.size(); ++j)
      pdiff = std::max(pdiff, (p1[j] - p2[j]).op_norm() / pscale);
    worst_cauchy = std::max(worst_cauchy, pdiff);

    // tau(theta_s(f*f)) = e^{-s} tau(f*f)
    const cd tff = hilbert_inner(bf, bf, cfg.tol);
    for (double s : {-1.0, 1.0}) {
      const HilbertVector bts =
          boundary_vector(theta_spec(f, s), cfg.grid, cfg.tol);
      worst_theta = std::max(
          worst_theta,
          rel_diff(hilbert_inner(bts, bts, cfg.tol), std::exp(-s) * tff));
    }
  }

  const json p{{"count", count}};
  std::vector<ReportRow> rows;
  rows.push_back(make_flag_row("hilbert_axioms:star_symmetry",
                               worst_symmetry <= cfg.tol.axiom_tol,
                               worst_symmetry, cfg.tol.axiom_tol, p));
  rows.push_back(make_flag_row("hilbert_axioms:positivity",
                               worst_positivity >= -cfg.tol.axiom_tol,
                               std::max(0.0, -worst_positivity),
                               cfg.tol.axiom_tol, p));
  rows.push_back(make_flag_row("hilbert_axioms:l1_submultiplicative",
                               worst_l1 <= cfg.tol.axiom_tol,
                               std::max(0.0, worst_l1), cfg.tol.axiom_tol, p));
  rows.push_back(make_flag_row("hilbert_axioms:associativity",
                               worst_assoc <= 1e-7, worst_assoc, 1e-7, p));
  rows.push_back(make_flag_row("hilbert_axioms:cauchy_shift",
                               worst_cauchy <= 1e-7, worst_cauchy, 1e-7, p));
  rows.push_back(make_flag_row("hilbert_axioms:theta_scaling",
                               worst_theta <= cfg.tol.conv_tol, worst_theta,
                               cfg.tol.conv_tol, p));
  return rows;
}

// ---------------------------------------------------------------- suite 6

std::vector<ReportRow> suite_modular_analytic(const ExperimentConfig& cfg,
                                              const json& params) {
  int count = params.value("count", 100);
  Rng rng(cfg.seed ^ 0xa0761d6478bd642fULL);
  double worst_kms = 0, worst_me = 0;
  for (int i = 0; i < count; ++i) {
    const int n = 2 + i % 2;
    const FiniteAlgebra alg({n});
    const Functional phi = random_faithful(rng, alg);
    const Functional psi = random_faithful(rng, alg);
    const AlgebraElement a = random_element(rng, alg);
    const double t = 4 * (rng.uniform() - 0.5);
    const double r = 0.05 + 0.9 * rng.uniform();

    worst_kms = std::max(worst_kms, kms_check(phi, psi, a, t, cfg.tol));
    auto [lhs, rhs] = modular_extension_bound(phi, psi, a, cd(t, -r), cfg.tol);
    worst_me = std::max(worst_me, lhs - rhs);
  }

  int counterexamples = 0;
  double worst_witness = 0;
  for (int i = 0; i < count; ++i) {
    const int n = 2 + i % 3;
    const FiniteAlgebra alg({n});
    Functional phi = random_faithful(rng, alg);
    Functional psi;
    if (i % 2 == 0) {
      // psi = phi + psd bump: majorized by construction
      Mat G = rng.gaussian_matrix(n);
      AlgebraElement bump = AlgebraElement::zero(alg);
      bump.blocks[0] = 0.3 * (G * G.adjoint());
      psi = Functional(alg, phi.density() + bump, cfg.tol);
    } else {
      psi = random_faithful(rng, alg);
    }
    // independent PSD oracle for (i)
    const auto dec = eigh(psi.density().blocks[0] - phi.density().blocks[0]);
    const bool psd = dec.eigenvalues.minCoeff() >= -cfg.tol.majorize_tol;
    const auto res = majorization_check(phi, psi, cfg.tol);
    if (res.holds != psd) {
      ++counterexamples;
      continue;
    }
    if (res.holds) {
      const AlgebraElement& c = *res.witness;
      worst_witness = std::max(worst_witness, c.op_norm() - 1.0);
      const double rec =
          (c * psi.power(cd(0.5, 0), cfg.tol) - phi.power(cd(0.5, 0), cfg.tol))
              .op_norm();
      if (rec > cfg.tol.majorize_tol) ++counterexamples;
    }
  }

  const json p{{"count", count}};
  std::vector<ReportRow> rows;
  rows.push_back(make_flag_row("modular:kms_residual",
                               worst_kms <= cfg.tol.kms_tol, worst_kms,
                               cfg.tol.kms_tol, p));
  rows.push_back(make_flag_row("modular:three_lines_bound",
                               worst_me <= cfg.tol.bound_tol,
                               std::max(0.0, worst_me), cfg.tol.bound_tol, p));
  rows.push_back(make_flag_row(
      "modular:majorization_equivalence", counterexamples == 0,
      static_cast<double>(counterexamples), 0.5,
      json{{"count", count}, {"worst_witness_excess", worst_witness}}));
  return rows;
}

// ---------------------------------------------------------------- suite 7

std::vector<ReportRow> suite_correspondence(const ExperimentConfig& cfg,
                                            const json& params) {
  std::vector<ReportRow> rows;
  const Functional phi = two_level_state();
  const FiniteAlgebra& alg = phi.algebra();
  const RelInvariantOperator h = build_h(phi);

  // recovery on the matrix-unit basis
  double worst_recovery = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const AlgebraElement e = AlgebraElement::matrix_unit(alg, 0, i, j);
      const cd got = recover_functional(h, e, cfg.grid, cfg.tol);
      const cd want = evaluate(phi, e);
      const double err = std::abs(got - want) /
                         std::max(std::abs(want), 1.0);
      worst_recovery = std::max(worst_recovery, err);
    }
  rows.push_back(make_flag_row("correspondence:recovery_basis",
                               worst_recovery <= cfg.tol.corr_tol,
                               worst_recovery, cfg.tol.corr_tol));

  // additivity / conjugation / covariance / positivity on seeded vectors
  const int nvec = params.value("vectors", 20);
  Rng rng(cfg.seed ^ 0xe7037ed1a0b428dbULL);
  const FiniteAlgebra alg2({2});
  const Functional p1 = random_faithful(rng, alg2);
  const Functional p2 = random_faithful(rng, alg2);
  AlgebraElement u = AlgebraElement::zero(alg2);
  u.blocks[0] = eigh(random_hermitian(rng, 2)).eigenvectors;  // unitary
  std::vector<HilbertVector> vectors;
  for (int i = 0; i < nvec; ++i) {
    const Functional s = random_faithful(rng, alg2);
    vectors.push_back(
        boundary_vector(random_gaussian_spec(rng, s, 1), cfg.grid, cfg.tol));
  }
  const double lin = verify_linearity(p1, p2, u, vectors, cfg.tol);
  rows.push_back(make_flag_row("correspondence:additivity_conjugation",
                               lin <= cfg.tol.conv_tol, lin, cfg.tol.conv_tol,
                               json{{"vectors", nvec}}));

  const RelInvariantOperator h1 = build_h(p1);
  double worst_theta = 0, worst_pos = 0, worst_group = 0;
  for (const auto& xi : vectors) {
    const HilbertVector hxi = h1.apply(xi, cfg.tol);
    const double scale = std::max(hxi.norm(cfg.tol), 1e-300);
    const HilbertVector conj = apply_dual_action(
        1.0, h1.apply(apply_dual_action(-1.0, xi), cfg.tol));
    worst_theta = std::max(
        worst_theta, (conj - hxi * std::exp(-1.0)).norm(cfg.tol) / scale);
    worst_pos = std::min(worst_pos, hilbert_inner(xi, hxi, cfg.tol).real() /
                                        std::pow(xi.norm(cfg.tol), 2));
    // group law vs the direct 2i-shift oracle
    const AlgebraElement rho2 = p1.density() * p1.density();
    auto base = xi.sampler;
    const HilbertVector oracle = HilbertVector::from_sampler(
        xi.grid,
        [rho2, base](cd z) {
          return act(rho2, base(z + cd(0, 2)), Side::Left);
        },
        xi.slow_decay);
    const HilbertVector twice = h1.apply(hxi, cfg.tol);
    worst_group = std::max(worst_group,
                           (twice - oracle).norm(cfg.tol) /
                               std::max(oracle.norm(cfg.tol), 1e-300));
  }
  rows.push_back(make_flag_row("correspondence:theta_covariance",
                               worst_theta <= cfg.tol.conv_tol, worst_theta,
                               cfg.tol.conv_tol));
  rows.push_back(make_flag_row("correspondence:positivity",
                               worst_pos >= -cfg.tol.corr_tol,
                               std::max(0.0, -worst_pos), cfg.tol.corr_tol));
  rows.push_back(make_flag_row("correspondence:group_law",
                               worst_group <= cfg.tol.conv_tol, worst_group,
                               cfg.tol.conv_tol));

  // averaging lemma
  const AlgebraElement one2 = AlgebraElement::identity(alg);
  auto avg1 = verify_averaging(phi, phi, one2, 1.0, cfg.grid, cfg.tol);
  rows.push_back(make_row("correspondence:averaging[mu=1]", avg1.lhs, avg1.rhs,
                          cfg.tol.corr_tol));
  auto avg2 = verify_averaging(phi, phi, one2, 2.0, cfg.grid, cfg.tol);
  rows.push_back(make_row("correspondence:averaging[mu=2]", avg2.lhs, avg2.rhs,
                          cfg.tol.corr_tol));
  rows.push_back(make_row("correspondence:averaging_mu_scaling", avg2.lhs,
                          avg1.lhs * 0.5, cfg.tol.corr_tol));
  {
    const Functional pr = random_faithful(rng, alg2);
    const AlgebraElement x = random_element(rng, alg2);
    auto avg = verify_averaging(pr, pr, x, 0.5, cfg.grid, cfg.tol);
    rows.push_back(make_row("correspondence:averaging[random]", avg.lhs,
                            avg.rhs, cfg.tol.corr_tol));
  }

  // inner lemma
  {
    const Functional pr = random_faithful(rng, alg2);
    const Functional om = random_faithful(rng, alg2);
    const AlgebraElement x = random_element(rng, alg2);
    for (double t : {0.0, 1.0, -1.0}) {
      auto inn = verify_inner_lemma(pr, om, x, t, cfg.grid, cfg.tol);
      rows.push_back(make_row("correspondence:inner_lemma", inn.lhs, inn.rhs,
                              cfg.tol.corr_tol, json{{"t", t}}));
    }
    auto inn = verify_inner_lemma(phi, phi, one2, 1.0, cfg.grid, cfg.tol);
    const cd want = evaluate(phi, one2) / (2 * kPi * cd(1, -1));
    rows.push_back(make_row("correspondence:inner_lemma_closed_form", inn.lhs,
                            want, cfg.tol.corr_tol, json{{"t", 1.0}}));
  }

  // tau(e): grid route vs spectral model
  {
    const HilbertVector e = support_vector(phi, cfg.grid, cfg.tol);
    const cd grid_route = hilbert_inner(e, e, cfg.tol);
    const LambdaFunction m =
        LambdaFunction::indicator_exp(cfg.lgrid, cd(0, 0), cd(1, 0), true);
    const cd spectral = spectral_model(
        phi, m, AlgebraElement::identity(alg), cfg.tol);
    rows.push_back(make_row("correspondence:support_trace_consistency",
                            grid_route, spectral, 1e-6));
  }
  return rows;
}

// ---------------------------------------------------------------- suite 8

std::vector<ReportRow> suite_spectral_unitarity(const ExperimentConfig& cfg,
                                                const json&) {
  const Functional phi = two_level_state(0.75, 1.3);
  const AlgebraElement one = AlgebraElement::identity(phi.algebra());
  std::vector<ReportRow> rows;
  int idx = 0;
  for (const Envelope& env :
       {Envelope::gaussian(1.0, cd(0, 0)),
        Envelope::gaussian(0.7, cd(0.3, 0.2)),
        Envelope::gaussian(1.4, cd(-0.2, 0.5), cd(0.8, 0.3))}) {
    auto spec = scalar_spec(env, phi, one, one);
    const HilbertVector g = boundary_vector(spec, cfg.grid, cfg.tol);
    const cd lhs = hilbert_inner(g, g, cfg.tol);
    const LambdaFunction ghat =
        boundary_operator(spec, cfg.lgrid, cfg.grid, cfg.tol);
    const LambdaFunction m2 = abs_squared(ghat, 1e-12);
    const cd rhs = spectral_model(phi, m2, one, cfg.tol);
    rows.push_back(make_row("spectral_unitarity", lhs, rhs,
                            cfg.tol.haagerup_tol, json{{"envelope", idx++}}));
  }
  return rows;
}

// ---------------------------------------------------------------- suite 9

std::vector<ReportRow> suite_grid_convergence(const ExperimentConfig& cfg,
                                              const json&) {
  const Functional omega = two_level_state();
  const AlgebraElement one = AlgebraElement::identity(omega.algebra());
  const double mu = 1.0;
  auto err_at = [&](double T, double dt) {
    const TimeGrid grid(T, dt);
    auto r = haagerup_trace(one, omega, mu, grid, cfg.lgrid, cfg.tol);
    return std::abs(r.grid_route - r.closed_form) / std::abs(r.closed_form);
  };
  const double e_20_02 = err_at(20, 0.02);
  const double e_40_02 = err_at(40, 0.02);
  const double e_20_01 = err_at(20, 0.01);
  const double e_40_01 = err_at(40, 0.01);
  const double floor = 1e-12;
  auto row = [&](const char* name, double coarse, double fine) {
    return make_flag_row(name, fine <= coarse + floor,
                         std::max(0.0, fine - coarse), floor,
                         json{{"coarse_err", coarse}, {"fine_err", fine}});
  };
  std::vector<ReportRow> rows;
  rows.push_back(row("grid_convergence:T_20_to_40[dt=0.02]", e_20_02, e_40_02));
  rows.push_back(row("grid_convergence:T_20_to_40[dt=0.01]", e_20_01, e_40_01));
  rows.push_back(row("grid_convergence:dt_0.02_to_0.01[T=20]", e_20_02, e_20_01));
  rows.push_back(row("grid_convergence:dt_0.02_to_0.01[T=40]", e_40_02, e_40_01));
  return rows;
}

using SuiteFn = std::vector<ReportRow> (*)(const ExperimentConfig&,
                                           const json&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"haagerup_trace", suite_haagerup_trace},
      {"haagerup_xform", suite_haagerup_xform},
      {"trace_formula_residue", suite_trace_formula_residue},
      {"boundary_catalogue", suite_boundary_catalogue},
      {"hilbert_algebra_axioms", suite_hilbert_algebra_axioms},
      {"modular_analytic", suite_modular_analytic},
      {"correspondence", suite_correspondence},
      {"spectral_unitarity", suite_spectral_unitarity},
      {"grid_convergence", suite_grid_convergence},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& registered_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suite_table()) v.push_back(name);
    return v;
  }();
  return names;
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig cfg;
  try {
    if (j.contains("algebra"))
      cfg.algebra = FiniteAlgebra(j["algebra"].get<std::vector<int>>());
    if (j.contains("grid"))
      cfg.grid = TimeGrid(j["grid"].value("T", 40.0),
                          j["grid"].value("dt", 0.01));
    if (j.contains("lambda_grid"))
      cfg.lgrid = LambdaGrid(j["lambda_grid"].value("L", 60.0),
                             j["lambda_grid"].value("dlambda", 0.01));
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("tol_scale"))
      cfg.tol = default_tol().scaled(j["tol_scale"].get<double>());
    if (j.contains("states")) {
      for (auto it = j["states"].begin(); it != j["states"].end(); ++it) {
        const json& s = it.value();
        if (s.contains("random")) {
          if (!s["random"].contains("seed"))
            throw ConfigInvalid("states." + it.key() +
                                ".random.seed: required for reproducibility");
          Rng rng(s["random"]["seed"].get<std::uint64_t>());
          cfg.states.emplace(
              it.key(),
              random_state(rng, cfg.algebra, s["random"].value("mass", 1.0),
                           s["random"].value("rank", -1)));
        } else {
          cfg.states.emplace(it.key(), functional_from_json(s, cfg.tol));
        }
      }
    }
    if (j.contains("experiments")) {
      int i = 0;
      for (const auto& e : j["experiments"]) {
        ExperimentRequest req;
        if (e.is_string()) {
          req.name = e.get<std::string>();
        } else {
          req.name = e.at("name").get<std::string>();
          req.params = e.value("params", json::object());
        }
        const auto& names = registered_suites();
        if (std::find(names.begin(), names.end(), req.name) == names.end())
          throw ConfigInvalid("experiments[" + std::to_string(i) +
                              "].name: unknown suite '" + req.name + "'");
        cfg.experiments.push_back(std::move(req));
        ++i;
      }
    }
  } catch (const json::exception& e) {
    throw ConfigInvalid(std::string("config: ") + e.what());
  }
  return cfg;
}

ExperimentConfig default_acceptance_config() {
  ExperimentConfig cfg;
  cfg.seed = 20260824;
  for (const auto& name : registered_suites())
    cfg.experiments.push_back({name, json::object()});
  return cfg;
}

std::vector<ReportRow> run_suite(const ExperimentConfig& cfg, int jobs) {
  const auto& table = suite_table();
  std::vector<std::vector<ReportRow>> buckets(cfg.experiments.size());

  auto run_one = [&](size_t idx) {
    const auto& req = cfg.experiments[idx];
    const auto start = std::chrono::steady_clock::now();
    std::vector<ReportRow> rows;
    try {
      for (const auto& [name, fn] : table)
        if (name == req.name) {
          rows = fn(cfg, req.params);
          break;
        }
    } catch (const std::exception& e) {
      rows = {make_flag_row(req.name + ":error", false, 1.0, 0.5,
                            json{{"error", e.what()}})};
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    for (auto& r : rows) r.wall_time_ms = ms / rows.size();
    buckets[idx] = std::move(rows);
  };

  jobs = std::max(1, jobs);
  if (jobs == 1 || cfg.experiments.size() < 2) {
    for (size_t i = 0; i < cfg.experiments.size(); ++i) run_one(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    const size_t nthreads =
        std::min<size_t>(jobs, cfg.experiments.size());
    for (size_t w = 0; w < nthreads; ++w)
      workers.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < cfg.experiments.size();
             i = next.fetch_add(1))
          run_one(i);
      });
    for (auto& t : workers) t.join();
  }

  std::vector<ReportRow> out;
  for (auto& b : buckets)
    for (auto& r : b) out.push_back(std::move(r));
  return out;
}

}  // namespace modlab
