#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <variant>

#include "so32/alp.hpp"
#include "so32/errors.hpp"
#include "so32/generators.hpp"
#include "so32/io.hpp"
#include "so32/structure.hpp"
#include "so32/verify.hpp"

namespace so32::cli {
namespace {

using io::json;

void emit(const json& j, const Common& c, std::ostream& out) {
  if (c.out.empty())
    out << io::dump(j);
  else
    io::write_json_file(c.out, j);
}

Generator require_generator(const std::string& text) {
  if (auto g = parse_generator(text)) return *g;
  throw UsageError("unknown generator '" + text + "'");
}

json mode_json(ModeIndex mode) { return json::array({mode.l, mode.m}); }

// Column-wise entries of an operator restricted to source degree <= window.
std::map<std::pair<std::size_t, std::size_t>, double> entries_in_window(const SparseOperator& op, int window) {
  std::map<std::pair<std::size_t, std::size_t>, double> out;
  const std::size_t n = op.truncation().size();
  for (std::size_t j = 0; j < n; ++j) {
    if (mode_at(j).l > window) break;
    for (const auto& e : op.column(j)) out[{j, e.row}] += e.value;
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

int run_eval(const EvalArgs& a, const Common&, std::ostream& out) {
  const double value = a.derivative ? eval_T_derivative(a.l, a.m, a.x) : eval_T(a.l, a.m, a.x);
  out << format_double(value) << '\n';
  return kExitOk;
}

int run_table(const TableArgs& a, const Common& c, std::ostream& out) {
  const Truncation trunc(a.l_max);
  const QuadratureRule rule = gauss_legendre(a.nodes > 0 ? a.nodes : a.l_max + 1);
  std::string csv = "l,m,x,T,dT\n";
  for (ModeIndex mode : lattice(trunc))
    for (double x : rule.nodes()) {
      csv += std::to_string(mode.l) + ',' + std::to_string(mode.m) + ',' + format_double(x) + ',' +
             format_double(eval_T(mode.l, mode.m, x)) + ',' + format_double(eval_T_derivative(mode.l, mode.m, x)) +
             '\n';
    }
  if (c.out.empty()) {
    out << csv;
  } else {
    std::ofstream file(c.out, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + c.out + "'");
    file << csv;
  }
  return kExitOk;
}

int run_apply(const ApplyArgs& a, const Common& c, std::ostream& out) {
  const io::AnyCoeffs v = io::coeffs_from_json(io::read_json_file(a.in));
  const Truncation trunc = std::visit([](const auto& x) { return x.truncation(); }, v);
  SparseOperator op;
  if (auto g = parse_generator(a.op))
    op = generator(*g, trunc);
  else if (auto k = parse_casimir(a.op))
    op = casimir(*k, trunc);
  else
    throw UsageError("unknown operator '" + a.op + "'");
  std::visit([&](const auto& x) { emit(io::to_json(op.apply(x).pruned()), c, out); }, v);
  return kExitOk;
}

int run_commutator(const CommutatorArgs& a, const Common& c, std::ostream& out) {
  const Generator ga = require_generator(a.a);
  const Generator gb = require_generator(a.b);
  const Truncation trunc(a.l_max);
  const SparseOperator bracket = commutator(generator(ga, trunc), generator(gb, trunc));
  const int window = bracket.valid_l_max();
  const double tol = c.tol.value_or(1e-12);

  const BracketRelation* relation = nullptr;
  double sign = 1.0;
  for (const BracketRelation& r : structure_relations()) {
    if (r.lhs == ga && r.rhs == gb) {
      relation = &r;
      break;
    }
    if (r.lhs == gb && r.rhs == ga) {
      relation = &r;
      sign = -1.0;
      break;
    }
  }

  json report;
  report["a"] = std::string(name(ga));
  report["b"] = std::string(name(gb));
  report["l_max"] = a.l_max;
  report["validity_l_max"] = window;

  const auto observed = entries_in_window(bracket, window);
  double deviation = 0.0;
  if (relation != nullptr) {
    auto expected = entries_in_window(relation_rhs(*relation, trunc), window);
    for (auto& [key, value] : expected) value *= sign;
    for (const auto& [key, value] : observed) {
      auto it = expected.find(key);
      deviation = std::max(deviation, std::abs(value - (it == expected.end() ? 0.0 : it->second)));
    }
    for (const auto& [key, value] : expected)
      if (!observed.contains(key)) deviation = std::max(deviation, std::abs(value));
    std::string formula = relation->formula();
    report["relation"] = sign > 0 ? formula : "-(" + formula + ")";
  } else {
    report["relation"] = nullptr;
  }
  report["max_deviation"] = deviation;
  report["tolerance"] = tol;
  const bool pass = deviation <= tol;
  report["pass"] = pass;

  json entries = json::array();
  for (const auto& [key, value] : observed) {
    if (value == 0.0) continue;
    json e;
    e["from"] = mode_json(mode_at(key.first));
    e["to"] = mode_json(mode_at(key.second));
    e["value"] = value;
    entries.push_back(std::move(e));
  }
  report["entries"] = std::move(entries);

  if (a.report.empty()) {
    out << io::dump(report);
  } else {
    io::write_json_file(a.report, report);
    if (!c.quiet)
      out << (pass ? "PASS " : "FAIL ") << '[' << name(ga) << ',' << name(gb) << "] window l<=" << window
          << " max_dev=" << format_double(deviation) << '\n';
  }
  return pass ? kExitOk : kExitNumerical;
}

int run_generate(const GenerateArgs& a, const Common& c, std::ostream& out) {
  const Truncation trunc(a.l_max.value_or(std::max(a.l, 0)));
  const RealCoeffs v = generate_mode(a.l, a.m, trunc);
  const double deviation = v.max_abs_diff(RealCoeffs::unit(trunc, {a.l, a.m}));
  emit(io::to_json(v.pruned()), c, out);
  if (!c.quiet) std::cerr << "max deviation from unit(" << a.l << ',' << a.m << "): " << format_double(deviation) << '\n';
  return deviation <= c.tol.value_or(1e-10) ? kExitOk : kExitNumerical;
}

int run_spectrum(const SpectrumArgs& a, const Common& c, std::ostream& out) {
  const Generator g = require_generator(a.op);
  SpectrumConstraint constraint{a.fixed_l, a.fixed_m, std::nullopt};
  if (a.parity == "even")
    constraint.parity = 0;
  else if (a.parity == "odd")
    constraint.parity = 1;
  else if (!a.parity.empty())
    throw UsageError("--parity must be 'even' or 'odd'");
  const std::vector<double> values = spectrum(g, Truncation(a.l_max), constraint);
  json j;
  j["op"] = std::string(name(g));
  j["l_max"] = a.l_max;
  json cons = json::object();
  if (a.fixed_l) cons["l"] = *a.fixed_l;
  if (a.fixed_m) cons["m"] = *a.fixed_m;
  if (!a.parity.empty()) cons["parity"] = a.parity;
  j["constraint"] = std::move(cons);
  j["eigenvalues"] = values;
  emit(j, c, out);
  return kExitOk;
}

int run_transform_analyze(const TransformArgs& a, const Common& c, std::ostream& out) {
  const GridFunction f = io::grid_from_json(io::read_json_file(a.in));
  if (a.m && *a.m != f.m)
    throw UsageError("--m " + std::to_string(*a.m) + " does not match the grid's m=" + std::to_string(f.m));
  emit(io::to_json(analyze(f, a.l_max)), c, out);
  return kExitOk;
}

int run_transform_synthesize(const TransformArgs& a, const Common& c, std::ostream& out) {
  const ChannelSpectrum s = io::spectrum_from_json(io::read_json_file(a.in));
  if (a.m && *a.m != s.m())
    throw UsageError("--m " + std::to_string(*a.m) + " does not match the spectrum's m=" + std::to_string(s.m()));
  const int nodes = a.nodes.value_or(std::max(s.l_max(), 0) + 1);
  emit(io::to_json(synthesize(s, gauss_legendre(nodes))), c, out);
  return kExitOk;
}

int run_sht_analyze(const ShtArgs& a, const Common& c, std::ostream& out) {
  const SphereField f = io::field_from_json(io::read_json_file(a.in));
  if (a.n_theta && *a.n_theta != f.grid.n_theta())
    throw UsageError("--ntheta does not match the field's " + std::to_string(f.grid.n_theta()) + " theta nodes");
  if (a.n_phi && *a.n_phi != f.grid.n_phi())
    throw UsageError("--nphi does not match the field's phi_count " + std::to_string(f.grid.n_phi()));
  const int l_max = a.l_max.value_or(std::min(f.grid.n_theta() - 1, (f.grid.n_phi() - 1) / 2));
  emit(io::to_json(sht_analyze(f, l_max)), c, out);
  return kExitOk;
}

int run_sht_synthesize(const ShtArgs& a, const Common& c, std::ostream& out) {
  const ComplexCoeffs coeffs = io::complex_coeffs_from_json(io::read_json_file(a.in));
  const int l_max = coeffs.truncation().l_max();
  if (a.l_max && *a.l_max != l_max)
    throw UsageError("--lmax does not match the coefficient file's l_max=" + std::to_string(l_max));
  const SphereGrid grid = SphereGrid::gauss(a.n_theta.value_or(l_max + 1), a.n_phi.value_or(2 * l_max + 1));
  emit(io::to_json(sht_synthesize(coeffs, grid)), c, out);
  return kExitOk;
}

int run_verify(const VerifyArgs& a, const Common& c, std::ostream& out) {
  VerifyOptions options;
  options.l_max = a.l_max;
  options.nodes = a.nodes;
  options.tol = c.tol;
  options.seed = a.seed;
  const VerifyReport report = run_suite(a.suite, options);
  emit(io::to_json(report), c, out);
  if (!c.quiet) {
    for (const CheckRecord& r : report.checks)
      std::cerr << (r.pass ? "PASS " : "FAIL ") << r.id << "  max_dev=" << format_double(r.max_deviation)
                << " tol=" << format_double(r.tolerance)
                << (r.observed ? "  observed=" + format_double(*r.observed) : std::string()) << '\n';
    std::cerr << (report.pass() ? "all checks passed" : "some checks FAILED") << " (" << report.checks.size()
              << " checks)\n";
  }
  return report.pass() ? kExitOk : kExitNumerical;
}

}  // namespace so32::cli
