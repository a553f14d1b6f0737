#include "ghyp/spec_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ghyp {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& ptr, const std::string& what) {
  throw ParseError("spec " + (ptr.empty() ? std::string("/") : ptr) + ": " + what);
}

const json& field(const json& obj, const std::string& ptr, const char* key) {
  if (!obj.contains(key)) fail(ptr, std::string("missing field '") + key + "'");
  return obj.at(key);
}

double number(const json& v, const std::string& ptr) {
  if (!v.is_number()) fail(ptr, "expected a number");
  return v.get<double>();
}

int integer(const json& v, const std::string& ptr) {
  if (!v.is_number_integer()) fail(ptr, "expected an integer");
  return v.get<int>();
}

Complex complex_value(const json& v, const std::string& ptr) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  fail(ptr, "expected a number or a [re, im] pair");
}

DualIndex dual_index(const GroupId& group, const json& v, const std::string& ptr) {
  try {
    if (v.is_string()) return DualIndex::parse(group, v.get<std::string>());
    if (v.is_number_integer() && group.is_torus()) return DualIndex::parse(group, std::to_string(v.get<int>()));
    if (v.is_number() && group.is_su2()) {
      const double twice = 2.0 * v.get<double>();
      if (twice != std::round(twice) || twice < 0) fail(ptr, "ell must be a nonnegative half-integer");
      return DualIndex::su2_twice(static_cast<int>(twice));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(ptr, e.what());
  }
  fail(ptr, "expected a dual index label such as \"3/2\" or \"1:-2\"");
}

Matrix matrix_value(const json& v, int dim, const std::string& ptr) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    fail(ptr, "expected " + std::to_string(dim) + " rows");
  Matrix m(dim, dim);
  for (int p = 0; p < dim; ++p) {
    const std::string rp = ptr + "/" + std::to_string(p);
    const json& row = v[static_cast<std::size_t>(p)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      fail(rp, "expected " + std::to_string(dim) + " entries");
    for (int q = 0; q < dim; ++q) m(p, q) = complex_value(row[static_cast<std::size_t>(q)], rp + "/" + std::to_string(q));
  }
  return m;
}

OperatorSpec operator_spec(const GroupId& group, const json& s, std::vector<std::string>& warnings) {
  const std::string ptr = "/symbol";
  if (!s.is_object()) fail(ptr, "expected an object");
  OperatorSpec op;
  op.group = group;
  if (s.contains("builtin")) {
    if (!s["builtin"].is_string()) fail(ptr + "/builtin", "expected a string");
    op.kind = s["builtin"].get<std::string>();
    json params = s.value("params", json::object());
    if (!params.is_object()) fail(ptr + "/params", "expected an object");
    const std::string pp = ptr + "/params";
    if (op.kind == "neutral_plus_c") op.c = complex_value(field(params, pp, "c"), pp + "/c");
    else if (op.kind == "bessel_potential") op.s = number(field(params, pp, "s"), pp + "/s");
    else if (op.kind == "su2_sublaplacian_model") {
      op.kappa = number(field(params, pp, "kappa"), pp + "/kappa");
      if (!(op.kappa >= 1.0)) fail(pp + "/kappa", "kappa must be at least 1");
    } else if (op.kind == "diagonal_formula") {
      const json& e = field(params, pp, "expression");
      if (!e.is_string()) fail(pp + "/expression", "expected a string");
      op.expression = e.get<std::string>();
    } else if (op.kind != "identity" && op.kind != "laplacian" && op.kind != "s2_laplacian_lift") {
      fail(ptr + "/builtin", "unknown builtin '" + op.kind + "'");
    }
    return op;
  }
  if (s.contains("explicit")) {
    op.kind = "explicit";
    const json& list = s["explicit"];
    if (!list.is_array()) fail(ptr + "/explicit", "expected an array");
    for (std::size_t n = 0; n < list.size(); ++n) {
      const std::string ep = ptr + "/explicit/" + std::to_string(n);
      if (!list[n].is_object()) fail(ep, "expected an object");
      const DualIndex xi = dual_index(group, field(list[n], ep, "xi"), ep + "/xi");
      if (op.explicit_entries.count(xi)) fail(ep + "/xi", "duplicate index " + xi.label());
      op.explicit_entries.emplace(xi, matrix_value(field(list[n], ep, "matrix"), xi.dim(), ep + "/matrix"));
    }
    warnings.push_back("explicit symbol: indices not listed are taken as the zero matrix");
    return op;
  }
  fail(ptr, "expected 'builtin' or 'explicit'");
}

BundleSymbol bundle_spec(const GroupId& group, const json& b) {
  const std::string ptr = "/bundle";
  if (!b.is_object()) fail(ptr, "expected an object");
  const int d_tau = integer(field(b, ptr, "d_tau"), ptr + "/d_tau");
  const int d_omega = integer(field(b, ptr, "d_omega"), ptr + "/d_omega");
  if (d_tau < 1) fail(ptr + "/d_tau", "must be positive");
  if (d_omega < 1) fail(ptr + "/d_omega", "must be positive");
  const json& blocks = field(b, ptr, "blocks");
  if (!blocks.is_array()) fail(ptr + "/blocks", "expected an array");
  std::vector<BundleBlock> list;
  for (std::size_t n = 0; n < blocks.size(); ++n) {
    const std::string bp = ptr + "/blocks/" + std::to_string(n);
    const json& e = blocks[n];
    if (!e.is_object()) fail(bp, "expected an object");
    const DualIndex xi = dual_index(group, field(e, bp, "xi"), bp + "/xi");
    const int i = integer(field(e, bp, "i"), bp + "/i");
    const int r = integer(field(e, bp, "r"), bp + "/r");
    if (i < 1 || i > d_tau) fail(bp + "/i", "must lie in 1.." + std::to_string(d_tau));
    if (r < 1 || r > d_omega) fail(bp + "/r", "must lie in 1.." + std::to_string(d_omega));
    list.push_back({xi, i - 1, r - 1, matrix_value(field(e, bp, "matrix"), xi.dim(), bp + "/matrix")});
  }
  std::optional<std::vector<DualIndex>> support;
  if (b.contains("support")) {
    const json& s = b["support"];
    if (!s.is_array()) fail(ptr + "/support", "expected an array");
    support.emplace();
    for (std::size_t n = 0; n < s.size(); ++n) support->push_back(dual_index(group, s[n], ptr + "/support/" + std::to_string(n)));
  }
  return explicit_bundle(group, d_tau, d_omega, std::move(list), std::move(support));
}

}  // namespace

AnalysisSpec parse_analysis_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("spec: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("", "expected a JSON object");

  AnalysisSpec spec;
  const json& g = field(doc, "", "group");
  if (!g.is_string()) fail("/group", "expected a string");
  try {
    spec.group = GroupId::parse(g.get<std::string>());
  } catch (const Error& e) {
    fail("/group", e.what());
  }

  const bool has_symbol = doc.contains("symbol"), has_bundle = doc.contains("bundle");
  if (has_symbol == has_bundle) fail("", "exactly one of 'symbol' and 'bundle' is required");
  try {
    if (has_symbol) {
      spec.op = operator_spec(spec.group, doc["symbol"], spec.warnings);
      spec.symbol = builtin_symbol(*spec.op);
    } else {
      spec.bundle = bundle_spec(spec.group, doc["bundle"]);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(has_symbol ? "/symbol" : "/bundle", e.what());
  }

  if (doc.contains("space")) {
    const json& s = doc["space"];
    if (!s.is_string() || s.get<std::string>() != "s2") fail("/space", "only \"s2\" is supported");
    if (!spec.group.is_su2() || !spec.symbol) fail("/space", "the s2 analysis needs an SU(2) symbol");
    spec.homogeneous = true;
  }
  if (doc.contains("estimate")) {
    const json& e = doc["estimate"];
    if (!e.is_object()) fail("/estimate", "expected an object");
    EstimateSpec est{number(field(e, "/estimate", "C"), "/estimate/C"), number(field(e, "/estimate", "r"), "/estimate/r")};
    if (!(est.C > 0.0)) fail("/estimate/C", "must be positive");
    if (!(est.r >= 1.0)) fail("/estimate/r", "must be at least 1");
    spec.estimate = est;
  }
  for (const auto& [key, value] : doc.items())
    if (key != "group" && key != "symbol" && key != "bundle" && key != "space" && key != "estimate")
      fail("/" + key, "unknown field");
  return spec;
}

AnalysisSpec load_analysis_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_analysis_spec(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace ghyp
