#include "modlab/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace modlab {

ReportRow make_row(std::string name, cd lhs, cd rhs, double tol, json params) {
  ReportRow r;
  r.identity_name = std::move(name);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.tol = tol;
  r.abs_err = std::abs(lhs - rhs);
  if (std::abs(rhs) > 0) {
    r.rel_err = r.abs_err / std::abs(rhs);
    r.pass = r.rel_err <= tol;
  } else {
    r.rel_err = r.abs_err;
    r.pass = r.abs_err <= tol;
  }
  return r;
}

ReportRow make_flag_row(std::string name, bool ok, double residual, double tol,
                        json params) {
  ReportRow r;
  r.identity_name = std::move(name);
  r.params = std::move(params);
  r.lhs = cd(residual, 0);
  r.rhs = cd(0, 0);
  r.abs_err = residual;
  r.rel_err = residual;
  r.tol = tol;
  r.pass = ok;
  return r;
}

json report_to_json(const std::vector<ReportRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back(json{{"identity_name", r.identity_name},
                       {"params", r.params},
                       {"lhs", {r.lhs.real(), r.lhs.imag()}},
                       {"rhs", {r.rhs.real(), r.rhs.imag()}},
                       {"abs_err", r.abs_err},
                       {"rel_err", r.rel_err},
                       {"tol", r.tol},
                       {"pass", r.pass},
                       {"wall_time_ms", r.wall_time_ms}});
  return out;
}

std::vector<ReportRow> report_from_json(const json& j) {
  std::vector<ReportRow> rows;
  for (const auto& e : j) {
    ReportRow r;
    r.identity_name = e.at("identity_name").get<std::string>();
    r.params = e.value("params", json::object());
    r.lhs = cd(e.at("lhs")[0].get<double>(), e.at("lhs")[1].get<double>());
    r.rhs = cd(e.at("rhs")[0].get<double>(), e.at("rhs")[1].get<double>());
    r.abs_err = e.at("abs_err").get<double>();
    r.rel_err = e.at("rel_err").get<double>();
    r.tol = e.at("tol").get<double>();
    r.pass = e.at("pass").get<bool>();
    r.wall_time_ms = e.at("wall_time_ms").get<double>();
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{})
    throw IoFailure("CSV: bad numeric field '" + s + "'");
  return v;
}

}  // namespace

std::string report_to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "identity_name,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tol,pass,"
         "wall_time_ms\n";
  for (const auto& r : rows)
    out << r.identity_name << ',' << fmt(r.lhs.real()) << ','
        << fmt(r.lhs.imag()) << ',' << fmt(r.rhs.real()) << ','
        << fmt(r.rhs.imag()) << ',' << fmt(r.abs_err) << ',' << fmt(r.rel_err)
        << ',' << fmt(r.tol) << ',' << (r.pass ? "true" : "false") << ','
        << fmt(r.wall_time_ms) << '\n';
  return out.str();
}

std::vector<ReportRow> report_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw IoFailure("CSV: empty input");
  std::vector<ReportRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    if (fields.size() != 10) throw IoFailure("CSV: expected 10 fields");
    ReportRow r;
    r.identity_name = fields[0];
    r.lhs = cd(parse_double(fields[1]), parse_double(fields[2]));
    r.rhs = cd(parse_double(fields[3]), parse_double(fields[4]));
    r.abs_err = parse_double(fields[5]);
    r.rel_err = parse_double(fields[6]);
    r.tol = parse_double(fields[7]);
    r.pass = fields[8] == "true";
    r.wall_time_ms = parse_double(fields[9]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string plot_to_csv(const PlotSeries& series) {
  std::ostringstream out;
  out << series.x_label << ',' << series.name << '\n';
  for (size_t i = 0; i < series.x.size(); ++i)
    out << fmt(series.x[i]) << ',' << fmt(series.y[i]) << '\n';
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoFailure("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoFailure("write failed: " + path);
}

}  // namespace modlab
