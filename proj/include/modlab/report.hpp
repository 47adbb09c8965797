#pragma once

#include <string>
#include <vector>

#include "modlab/serialization.hpp"

namespace modlab {

struct ReportRow {
  std::string identity_name;
  json params = json::object();
  cd lhs{0, 0};
  cd rhs{0, 0};
  double abs_err = 0;
  double rel_err = 0;
  double tol = 0;
  bool pass = false;
  double wall_time_ms = 0;
};

/// Builds a row with abs/rel errors filled in; pass means rel_err <= tol,
/// falling back to abs_err <= tol when rhs = 0.
ReportRow make_row(std::string name, cd lhs, cd rhs, double tol,
                   json params = json::object());

/// A row for a check that is itself a boolean (residual already folded in).
ReportRow make_flag_row(std::string name, bool ok, double residual, double tol,
                        json params = json::object());

json report_to_json(const std::vector<ReportRow>& rows);
std::vector<ReportRow> report_from_json(const json& j);

/// CSV with the fixed header
/// identity_name,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tol,pass,wall_time_ms
std::string report_to_csv(const std::vector<ReportRow>& rows);
std::vector<ReportRow> report_from_csv(const std::string& text);

struct PlotSeries {
  std::string name;
  std::string x_label;  // "t" or "lambda"
  std::vector<double> x;
  std::vector<double> y;
};

std::string plot_to_csv(const PlotSeries& series);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace modlab
