#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "modlab/experiments.hpp"

namespace {

using namespace modlab;

struct Overrides {
  double grid_T = -1;
  double grid_dt = -1;
  double tol_scale = -1;
  std::int64_t seed = -1;
  int jobs = 1;
};

void add_common(CLI::App* sub, Overrides& ov) {
  sub->add_option("--grid-T", ov.grid_T, "half-width of the time grid");
  sub->add_option("--grid-dt", ov.grid_dt, "time grid step");
  sub->add_option("--seed", ov.seed, "seed for randomized instances");
  sub->add_option("--tol-scale", ov.tol_scale, "scale all tolerances");
  sub->add_option("--jobs", ov.jobs, "worker threads (order-stable output)");
}

void apply(ExperimentConfig& cfg, const Overrides& ov) {
  double T = cfg.grid.T, dt = cfg.grid.dt;
  if (ov.grid_T > 0) T = ov.grid_T;
  if (ov.grid_dt > 0) dt = ov.grid_dt;
  cfg.grid = TimeGrid(T, dt);
  if (ov.seed >= 0) cfg.seed = static_cast<std::uint64_t>(ov.seed);
  if (ov.tol_scale > 0) cfg.tol = cfg.tol.scaled(ov.tol_scale);
}

int finish(const std::vector<ReportRow>& rows) {
  int failures = 0;
  for (const auto& r : rows) {
    if (!r.pass) ++failures;
    std::printf("%-45s %s  rel_err=%.3e  tol=%.1e\n", r.identity_name.c_str(),
                r.pass ? "pass" : "FAIL", r.rel_err, r.tol);
  }
  std::printf("%zu checks, %d failed\n", rows.size(), failures);
  return failures == 0 ? 0 : 1;
}

int run_verify(const std::string& path, const Overrides& ov) {
  ExperimentConfig cfg = path.empty() ? default_acceptance_config()
                                      : config_from_json(load_json_file(path));
  apply(cfg, ov);
  return finish(run_suite(cfg, ov.jobs));
}

int run_report(const std::string& path, const std::string& format,
               const std::string& out, const Overrides& ov) {
  ExperimentConfig cfg = path.empty() ? default_acceptance_config()
                                      : config_from_json(load_json_file(path));
  apply(cfg, ov);
  const auto rows = run_suite(cfg, ov.jobs);
  if (format == "csv")
    write_text_file(out, report_to_csv(rows));
  else
    save_json_file(out, report_to_json(rows));
  std::printf("wrote %zu rows to %s\n", rows.size(), out.c_str());
  int failures = 0;
  for (const auto& r : rows)
    if (!r.pass) ++failures;
  return failures == 0 ? 0 : 1;
}

int run_trace(const std::string& path, const std::string& plot_out,
              const Overrides& ov) {
  ExperimentConfig cfg;
  apply(cfg, ov);
  const InterpolatorSpec spec = spec_from_json(load_json_file(path), cfg.tol);
  std::vector<ReportRow> rows;
  if (spec.gaussian_class()) {
    const cd tau = trace_of_product(spec, spec, cfg.grid, cfg.tol);
    rows.push_back(make_row("trace:tau_fstar_f_positive", cd(std::min(0.0, tau.real()), 0),
                            cd(0, 0), cfg.tol.axiom_tol));
    std::printf("tau(f* f) = %.12g + %.12gi\n", tau.real(), tau.imag());
  } else {
    const auto chk =
        trace_formula_theorem_check(spec, cfg.grid, cfg.lgrid, cfg.tol);
    rows.push_back(make_row("trace:trace_formula_routes", chk.lhs, chk.rhs,
                            2 * cfg.tol.haagerup_tol));
    std::printf("spectral route = %.12g + %.12gi\n", chk.lhs.real(),
                chk.lhs.imag());
    std::printf("grid route     = %.12g + %.12gi\n", chk.rhs.real(),
                chk.rhs.imag());
  }
  if (!plot_out.empty()) {
    const HilbertVector bv = boundary_vector(spec, cfg.grid, cfg.tol);
    PlotSeries series;
    series.name = "boundary_norm_sq";
    series.x_label = "t";
    for (int j = 0; j < cfg.grid.size(); ++j) {
      series.x.push_back(cfg.grid.t(j));
      series.y.push_back(std::norm(bv.values[j].norm()));
    }
    write_text_file(plot_out, plot_to_csv(series));
  }
  return finish(rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical checks for modular flows, crossed-product traces, "
               "and the functional/operator correspondence"};
  app.require_subcommand(1);
  Overrides ov;

  std::string verify_config;
  auto* verify = app.add_subcommand("verify", "run configured identity suites");
  verify->add_option("config", verify_config, "config JSON (omit for the full default run)");
  add_common(verify, ov);

  std::string trace_spec, trace_plot;
  auto* trace = app.add_subcommand("trace", "trace checks for one interpolator");
  trace->add_option("spec", trace_spec, "interpolator JSON")->required();
  trace->add_option("--plot-out", trace_plot, "boundary profile CSV path");
  add_common(trace, ov);

  std::string report_config, report_format = "json", report_out = "report.json";
  auto* report = app.add_subcommand("report", "run suites and write a report file");
  report->add_option("config", report_config, "config JSON (omit for the full default run)");
  report->add_option("--format", report_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  report->add_option("--out", report_out, "output path");
  add_common(report, ov);

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return run_verify(verify_config, ov);
    if (trace->parsed()) return run_trace(trace_spec, trace_plot, ov);
    return run_report(report_config, report_format, report_out, ov);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const modlab::ConfigInvalid& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const modlab::IoFailure& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
