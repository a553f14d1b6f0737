#include "report.hpp"

#include "cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace ghyp::cli {

namespace {

using json = nlohmann::ordered_json;

json header(const OptionsEcho& echo) {
  json j;
  j["schema"] = 1;
  j["tool"] = "ghyp";
  j["version"] = version();
  j["command"] = echo.command;
  if (const char* ts = std::getenv("GHYP_TIMESTAMP")) j["timestamp"] = ts;
  json opts;
  if (!echo.spec_path.empty()) opts["spec"] = echo.spec_path;
  opts["cutoff"] = echo.cutoff;
  for (const auto& [k, v] : echo.extra) std::visit([&](const auto& x) { opts[k] = x; }, v);
  j["options"] = opts;
  return j;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index p = 0; p < m.rows(); ++p) {
    json row = json::array();
    for (Eigen::Index q = 0; q < m.cols(); ++q) row.push_back({m(p, q).real(), m(p, q).imag()});
    rows.push_back(row);
  }
  return rows;
}

std::string number17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_profile_csv(std::ostream& out, const Profile& p) {
  out << "xi,eig,dim,value\n";
  for (const auto& e : p.entries)
    out << e.xi.label() << ',' << number17(e.eig) << ',' << e.dim << ',' << number17(e.value) << '\n';
}

std::string report_json(const OptionsEcho& echo, const AnalysisSpec& spec, const Profile& p, const AnalysisReport& r,
                        const std::optional<SubellipticBoundResult>& bound,
                        const std::optional<DominationCheck>& domination) {
  json j = header(echo);
  json s;
  s["group"] = spec.group.name();
  if (spec.op) {
    s["symbol"] = spec.op->kind;
    if (spec.op->kind == "neutral_plus_c") s["c"] = {spec.op->c.real(), spec.op->c.imag()};
    if (spec.op->kind == "bessel_potential") s["s"] = spec.op->s;
    if (spec.op->kind == "su2_sublaplacian_model") s["kappa"] = spec.op->kappa;
    if (spec.op->kind == "diagonal_formula") s["expression"] = spec.op->expression;
  }
  if (spec.bundle) {
    s["bundle"] = {{"d_tau", spec.bundle->d_tau}, {"d_omega", spec.bundle->d_omega}};
  }
  if (spec.homogeneous) s["space"] = "s2";
  j["spec"] = s;

  j["profile"] = {{"kind", to_string(p.kind)}, {"entries", p.entries.size()}};
  j["verdict"] = to_string(r.verdict);
  j["reason"] = r.reason;
  j["fitted_k"] = r.fitted_k;
  j["fitted_C"] = r.fitted_C;
  j["residual"] = r.residual;
  j["min_value"] = r.min_value;
  j["zero_tol"] = r.zero_tol;
  j["fit_points"] = r.fit_points;
  json exc = json::array();
  for (const auto& xi : r.exceptional) exc.push_back(xi.label());
  j["exceptional"] = exc;
  json trend = json::array();
  for (const auto& z : r.zero_count_trend) trend.push_back({{"cutoff", z.cutoff}, {"count", z.count}});
  j["zero_count_trend"] = trend;

  if (bound) {
    json b;
    b["C"] = bound->C;
    b["r"] = bound->r;
    json rows = json::array();
    for (const auto& e : bound->entries) {
      json row = {{"xi", e.xi.label()}, {"eig", e.eig}};
      row["bound"] = e.bound ? json(*e.bound) : json(nullptr);
      rows.push_back(row);
    }
    b["entries"] = rows;
    if (domination) {
      json v = json::array();
      for (const auto& xi : domination->violations) v.push_back(xi.label());
      b["domination"] = {{"compared", domination->compared}, {"violations", v}};
    }
    j["subelliptic"] = b;
  }
  json w = json::array();
  for (const auto& msg : spec.warnings) w.push_back(msg);
  j["warnings"] = w;
  return j.dump(2) + "\n";
}

std::string counterexample_json(const OptionsEcho& echo, const Counterexample& c) {
  json j = header(echo);
  json coeffs = json::array();
  for (std::size_t i = 0; i < c.coefficients.size(); ++i)
    for (const auto& [xi, m] : c.coefficients[i].stored())
      coeffs.push_back({{"component", i + 1}, {"xi", xi.label()}, {"matrix", matrix_json(m)}});
  j["coefficients"] = coeffs;
  json cert = json::array();
  for (const auto& e : c.certificate)
    cert.push_back({{"k", e.k},
                    {"xi", e.xi.label()},
                    {"lambda", e.lambda},
                    {"bound", e.bound},
                    {"coeff_hs", e.coeff_hs},
                    {"image_hs", e.image_hs},
                    {"verified", e.image_hs < e.bound}});
  j["certificate"] = cert;
  return j.dump(2) + "\n";
}

std::string transform_json(const OptionsEcho& echo, double roundtrip_residual, double plancherel_residual,
                           double grid_norm, double fourier_norm, std::size_t nodes, std::size_t duals) {
  json j = header(echo);
  j["nodes"] = nodes;
  j["duals"] = duals;
  j["roundtrip_residual"] = roundtrip_residual;
  j["grid_l2_norm"] = grid_norm;
  j["plancherel_norm"] = fourier_norm;
  j["plancherel_residual"] = plancherel_residual;
  return j.dump(2) + "\n";
}

}  // namespace ghyp::cli
