// Acceptance gate: runs the nine verification suites at the default grids and
// prints one line per criterion. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "modlab/experiments.hpp"

using namespace modlab;

namespace {

struct Criterion {
  const char* prefix;  // identity_name prefix produced by the suite
  const char* label;
};

const Criterion kCriteria[] = {
    {"haagerup_trace", "1 haagerup trace formula (grid/spectral/divergence)"},
    {"haagerup_xform", "2 x-form trace formula"},
    {"trace_formula", "3 trace formula theorem with residue"},
    {"boundary_catalogue", "4 boundary-object catalogue"},
    {"hilbert_axioms", "5 hilbert-algebra axiom suite"},
    {"modular", "6 modular analytic suite"},
    {"correspondence", "7 correspondence suite"},
    {"spectral_unitarity", "8 spectral-model unitarity"},
    {"grid_convergence", "9 grid-convergence evidence"},
};

bool matches(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix, 0) != 0) return false;
  return name.size() == prefix.size() || name[prefix.size()] == ':';
}

}  // namespace

int main() {
  const int jobs =
      std::max(1u, std::min(4u, std::thread::hardware_concurrency()));
  const auto rows = run_suite(default_acceptance_config(), jobs);

  int failures = 0;
  for (const auto& c : kCriteria) {
    int total = 0, failed = 0;
    double worst = 0;
    for (const auto& row : rows) {
      if (!matches(row.identity_name, c.prefix)) continue;
      ++total;
      if (!row.pass) ++failed;
      worst = std::max(worst, row.rel_err);
    }
    const bool ok = total > 0 && failed == 0;
    if (!ok) ++failures;
    std::printf("[%s] criterion %s: %d/%d checks, worst rel_err %.3e\n",
                ok ? "PASS" : "FAIL", c.label, total - failed, total, worst);
  }
  return failures == 0 ? 0 : 1;
}
