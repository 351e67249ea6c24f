#include "nodalq/io.hpp"

#include <fstream>
#include <sstream>

namespace nodalq::io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::string require_string(const json& j) {
  if (!j.is_string()) throw ParseError("expected a decimal string, got " + j.dump());
  return j.get<std::string>();
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  return parse_rational(require_string(j));
}

long long integer_from_json(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<long long>();
}

}  // namespace

json to_json(const HomogPoly& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms())
    terms.push_back({{"exp", m}, {"num", numerator(c).str()}, {"den", denominator(c).str()}});
  return {{"degree", f.degree()}, {"terms", terms}};
}

HomogPoly poly_from_json(const json& j) {
  const long long degree = integer_from_json(require(j, "degree"), "degree");
  if (degree < 0 || degree > 64) throw ParseError("degree out of range");
  const json& terms = require(j, "terms");
  if (!terms.is_array()) throw ParseError("'terms' must be an array");
  std::vector<std::pair<Monomial, Rational>> parsed;
  for (const auto& t : terms) {
    const json& e = require(t, "exp");
    if (!e.is_array() || e.size() != 4) throw ParseError("'exp' must hold four exponents");
    Monomial m;
    for (std::size_t i = 0; i < 4; ++i) m[i] = static_cast<int>(integer_from_json(e[i], "exponent"));
    const Integer num = parse_integer(require_string(require(t, "num")));
    const Integer den = parse_integer(require_string(require(t, "den")));
    if (den <= 0) throw ParseError("denominators must be positive");
    parsed.emplace_back(m, Rational(num) / Rational(den));
  }
  try {
    return HomogPoly(static_cast<int>(degree), parsed);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

json to_json(const ProjPointQ& p) {
  json coords = json::array();
  for (const auto& c : p.coords()) coords.push_back(c.str());
  return {{"coords", coords}};
}

ProjPointQ point_from_json(const json& j) {
  const json& c = require(j, "coords");
  if (!c.is_array() || c.size() != 4) throw ParseError("'coords' must hold four integers");
  std::array<Integer, 4> ints;
  for (std::size_t i = 0; i < 4; ++i) ints[i] = parse_integer(require_string(c[i]));
  try {
    return ProjPointQ(ints);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

json points_to_json(const std::vector<ProjPointQ>& points) {
  json out = json::array();
  for (const auto& p : points) out.push_back(to_json(p));
  return out;
}

std::vector<ProjPointQ> points_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("point file must be a JSON list");
  std::vector<ProjPointQ> out;
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

json to_json(const SearchConfig& c) {
  return {{"seed_count", c.seed_count},
          {"max_newton_steps", c.max_newton_steps},
          {"tolerance", c.tolerance},
          {"cluster_radius", c.cluster_radius},
          {"max_height", c.max_height}};
}

SearchConfig search_config_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("search config must be an object");
  SearchConfig c;
  try {
    if (j.contains("seed_count")) c.seed_count = j.at("seed_count").get<int>();
    if (j.contains("max_newton_steps")) c.max_newton_steps = j.at("max_newton_steps").get<int>();
    if (j.contains("tolerance")) c.tolerance = j.at("tolerance").get<double>();
    if (j.contains("cluster_radius")) c.cluster_radius = j.at("cluster_radius").get<double>();
    if (j.contains("max_height")) c.max_height = j.at("max_height").get<std::int64_t>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("search config: ") + e.what());
  }
  if (c.seed_count < 0 || c.max_newton_steps < 1 || !(c.tolerance > 0) || !(c.cluster_radius > 0) ||
      c.max_height < 1)
    throw ParseError("search config values out of range");
  return c;
}

json matrix_to_json(const MatrixXq& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

MatrixXq matrix_from_json(const json& j, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    throw ParseError("expected a matrix with " + std::to_string(rows) + " rows");
  MatrixXq m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw ParseError("expected matrix rows of length " + std::to_string(cols));
    for (Index k = 0; k < cols; ++k) m(i, k) = rational_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

json vector_to_json(const VectorXq& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

VectorXq vector_from_json(const json& j, Index size) {
  if (!j.is_array() || static_cast<Index>(j.size()) != size)
    throw ParseError("expected a vector of length " + std::to_string(size));
  VectorXq v(size);
  for (Index i = 0; i < size; ++i) v(i) = rational_from_json(j[static_cast<std::size_t>(i)]);
  return v;
}

json to_json(const OperatorFamily& f) {
  json ops = json::array();
  for (const auto& n : f.operators) ops.push_back(matrix_to_json(n));
  json out = {{"dim", f.ambient_dim}, {"operators", ops}};
  if (!f.label.empty()) out["label"] = f.label;
  return out;
}

OperatorFamily family_from_json(const json& j) {
  OperatorFamily f;
  f.ambient_dim = integer_from_json(require(j, "dim"), "dim");
  if (f.ambient_dim <= 0 || f.ambient_dim > 4096) throw ParseError("'dim' out of range");
  const json& ops = require(j, "operators");
  if (!ops.is_array()) throw ParseError("'operators' must be a list of matrices");
  for (const auto& op : ops) f.operators.push_back(matrix_from_json(op, f.ambient_dim, f.ambient_dim));
  if (j.contains("label") && j.at("label").is_string()) f.label = j.at("label").get<std::string>();
  return f;
}

json to_json(const CycleConfiguration& c) {
  json sigmas = json::array();
  for (const auto& s : c.sigmas) sigmas.push_back(vector_to_json(s));
  json out = {{"dim", c.space.dim()}, {"gram", matrix_to_json(c.space.gram())}, {"sigmas", sigmas}};
  if (c.polarization) out["h"] = vector_to_json(*c.polarization);
  return out;
}

CycleConfiguration configuration_from_json(const json& j) {
  const long long dim = integer_from_json(require(j, "dim"), "dim");
  if (dim <= 0 || dim > 4096) throw ParseError("'dim' out of range");
  const Index n = static_cast<Index>(dim);
  const json& sigmas = require(j, "sigmas");
  if (!sigmas.is_array()) throw ParseError("'sigmas' must be a list of vectors");
  CycleConfiguration c{QuadraticSpace(matrix_from_json(require(j, "gram"), n, n)), {}, {}};
  for (const auto& s : sigmas) c.sigmas.push_back(vector_from_json(s, n));
  if (j.contains("h") && !j.at("h").is_null()) c.polarization = vector_from_json(j.at("h"), n);
  return c;
}

json to_json(const SingularPointReport& r) {
  return {{"point", to_json(r.point)},
          {"on_surface", r.on_surface},
          {"gradient_vanishes", r.gradient_vanishes},
          {"hessian_rank", r.hessian_rank},
          {"classification", to_string(r.classification)},
          {"mode", to_string(r.mode)}};
}

SingularPointReport report_from_json(const json& j) {
  try {
    SingularPointReport r{point_from_json(require(j, "point"))};
    r.on_surface = require(j, "on_surface").get<bool>();
    r.gradient_vanishes = require(j, "gradient_vanishes").get<bool>();
    r.hessian_rank = require(j, "hessian_rank").get<int>();
    r.classification = parse_classification(require(j, "classification").get<std::string>());
    const std::string mode = require(j, "mode").get<std::string>();
    if (mode != "Exact" && mode != "Numerical") throw ParseError("unknown mode '" + mode + "'");
    r.mode = mode == "Exact" ? CertificationMode::Exact : CertificationMode::Numerical;
    return r;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

json to_json(const SingularCandidate& c) {
  json out = to_json(c.report);
  out["approximation"] = {c.approximation(0), c.approximation(1), c.approximation(2), c.approximation(3)};
  out["gradient_residual"] = c.gradient_residual;
  out["value_residual"] = c.value_residual;
  return out;
}

json to_json(const SeveriReport& r) {
  return {{"delta", r.delta},         {"eval_rank", r.eval_rank},
          {"independent", r.independent}, {"ideal_dim", r.ideal_dim},
          {"severi_tangent_dim", r.severi_tangent_dim}, {"bound_ok", r.bound_ok}};
}

json to_json(const StalkCohomology& h) { return {{"dims", h.dims}, {"euler", h.euler}}; }

json to_json(const std::array<int, 5>& betti) { return {{"betti", betti}}; }

json to_json(const SigmaSplitting& s) {
  return {{"sigma", s.sigma.dim()}, {"sigma_perp", s.sigma_perp.dim()}, {"sigma_perp_prim", s.sigma_perp_prim.dim()}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace nodalq::io
