#include "so32/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "so32/errors.hpp"
#include "so32/version.hpp"

namespace so32::io {
namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("field '") + key + "': " + e.what());
  }
}

const json& array_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    throw UsageError(std::string("missing array '") + key + "'");
  return j.at(key);
}

template <typename Scalar>
json coeffs_json(const CoeffVector<Scalar>& v, bool complex) {
  json out;
  out["l_max"] = v.truncation().l_max();
  json entries = json::array();
  for (const auto& [mode, value] : v.entries()) {
    json e;
    e["l"] = mode.l;
    e["m"] = mode.m;
    if constexpr (std::is_same_v<Scalar, double>) {
      e["re"] = value;
    } else {
      e["re"] = value.real();
      if (complex) e["im"] = value.imag();
    }
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  if (v.overflow()) out["overflow"] = true;
  return out;
}

}  // namespace

json to_json(const RealCoeffs& v) { return coeffs_json(v, false); }
json to_json(const ComplexCoeffs& v) { return coeffs_json(v, true); }

AnyCoeffs coeffs_from_json(const json& j) {
  const Truncation trunc(field<int>(j, "l_max"));
  const json& entries = array_field(j, "entries");
  bool complex = false;
  for (const json& e : entries) complex = complex || e.contains("im");

  const bool overflow = j.contains("overflow") && j.at("overflow").is_boolean() && j.at("overflow").get<bool>();
  if (complex) {
    ComplexCoeffs v(trunc);
    for (const json& e : entries) {
      const double im = e.contains("im") ? field<double>(e, "im") : 0.0;
      v.add({field<int>(e, "l"), field<int>(e, "m")}, {field<double>(e, "re"), im});
    }
    if (overflow) v.mark_overflow();
    return v;
  }
  RealCoeffs v(trunc);
  for (const json& e : entries) v.add({field<int>(e, "l"), field<int>(e, "m")}, field<double>(e, "re"));
  if (overflow) v.mark_overflow();
  return v;
}

ComplexCoeffs complex_coeffs_from_json(const json& j) {
  AnyCoeffs any = coeffs_from_json(j);
  if (auto* c = std::get_if<ComplexCoeffs>(&any)) return *c;
  const RealCoeffs& r = std::get<RealCoeffs>(any);
  ComplexCoeffs out(r.truncation());
  for (const auto& [mode, value] : r.entries()) out.set(mode, value);
  if (r.overflow()) out.mark_overflow();
  return out;
}

json to_json(const GridFunction& g) {
  json out;
  out["m"] = g.m;
  out["nodes"] = g.rule.nodes();
  out["weights"] = g.rule.weights();
  out["values"] = g.values;
  return out;
}

GridFunction grid_from_json(const json& j) {
  auto nodes = field<std::vector<double>>(j, "nodes");
  auto weights = field<std::vector<double>>(j, "weights");
  auto values = field<std::vector<double>>(j, "values");
  if (values.size() != nodes.size()) throw UsageError("grid 'values' and 'nodes' differ in length");
  return GridFunction{QuadratureRule(std::move(nodes), std::move(weights)), field<int>(j, "m"), std::move(values)};
}

json to_json(const ChannelSpectrum& s) {
  json out;
  out["m"] = s.m();
  out["basis"] = "orthonormal";
  out["l_max"] = s.l_max();
  json coeffs = json::array();
  for (int l = s.l_min(); l <= s.l_max(); ++l) {
    json c;
    c["l"] = l;
    c["c"] = s.at(l);
    coeffs.push_back(std::move(c));
  }
  out["coeffs"] = std::move(coeffs);
  return out;
}

ChannelSpectrum spectrum_from_json(const json& j) {
  const int m = field<int>(j, "m");
  if (j.contains("basis") && field<std::string>(j, "basis") != "orthonormal")
    throw UsageError("only the orthonormal basis is supported in spectrum files");
  const json& coeffs = array_field(j, "coeffs");
  int l_max = j.contains("l_max") ? field<int>(j, "l_max") : std::abs(m) - 1;
  if (!j.contains("l_max"))
    for (const json& c : coeffs) l_max = std::max(l_max, field<int>(c, "l"));
  ChannelSpectrum s(m, l_max);
  for (const json& c : coeffs) s.set(field<int>(c, "l"), field<double>(c, "c"));
  return s;
}

json to_json(const SphereField& f) {
  json out;
  std::vector<double> thetas;
  for (int i = 0; i < f.grid.n_theta(); ++i) thetas.push_back(f.grid.theta(i));
  out["theta_nodes"] = thetas;
  out["phi_count"] = f.grid.n_phi();
  json values = json::array();
  for (const cplx& v : f.values) values.push_back(json::array({v.real(), v.imag()}));
  out["values"] = std::move(values);
  return out;
}

SphereField field_from_json(const json& j) {
  const auto thetas = field<std::vector<double>>(j, "theta_nodes");
  const int n_phi = field<int>(j, "phi_count");
  if (thetas.empty()) throw UsageError("field has no theta nodes");
  const SphereGrid grid = SphereGrid::gauss(static_cast<int>(thetas.size()), n_phi);
  for (int i = 0; i < grid.n_theta(); ++i)
    if (std::abs(std::cos(thetas[static_cast<std::size_t>(i)]) - grid.x(i)) > 1e-12)
      throw UsageError("theta_nodes are not the Gauss-Legendre nodes of order " + std::to_string(grid.n_theta()));
  const json& values = array_field(j, "values");
  if (values.size() != static_cast<std::size_t>(grid.n_theta() * grid.n_phi()))
    throw UsageError("field 'values' has the wrong number of samples");
  SphereField f(grid);
  for (std::size_t k = 0; k < values.size(); ++k) {
    const json& v = values[k];
    if (!v.is_array() || v.size() != 2) throw UsageError("field values must be [re, im] pairs");
    f.values[k] = {v[0].get<double>(), v[1].get<double>()};
  }
  return f;
}

json to_json(const VerifyReport& report) {
  json out;
  out["tool"] = "so32";
  out["version"] = kVersion;
  out["suite"] = report.suite;
  json params;
  params["lmax"] = report.options.l_max;
  params["nodes"] = report.options.nodes;
  if (report.options.tol) params["tol"] = *report.options.tol;
  params["seed"] = report.options.seed;
  params["random_spectra"] = report.options.random_spectra;
  out["parameters"] = std::move(params);
  json checks = json::array();
  for (const CheckRecord& r : report.checks) {
    json c;
    c["id"] = r.id;
    c["anchor"] = r.anchor;
    c["max_deviation"] = r.max_deviation;
    c["tolerance"] = r.tolerance;
    if (r.observed) c["observed"] = *r.observed;
    c["validity_l_max"] = r.validity_l_max ? json(*r.validity_l_max) : json(nullptr);
    c["pass"] = r.pass;
    checks.push_back(std::move(c));
  }
  out["checks"] = std::move(checks);
  out["pass"] = report.pass();
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path.string() + "'");
  out << dump(j);
}

}  // namespace so32::io
