#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "so32/errors.hpp"
#include "so32/verify.hpp"
#include "so32/version.hpp"

namespace {

using namespace so32::cli;

void add_common(CLI::App* sub, Common& c, bool with_out = true) {
  sub->add_option("--tol", c.tol, "Tolerance override")->check(CLI::PositiveNumber);
  if (with_out) sub->add_option("--out", c.out, "Output file (default: stdout)");
  sub->add_flag("--quiet", c.quiet, "Suppress human-readable progress on stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"so(3,2) ladder-operator calculus on associated Legendre functions and spherical harmonics", "so32"};
  app.set_version_flag("--version", std::string(so32::kVersion));
  app.require_subcommand(1);

  Common common;
  std::function<int()> action;

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate T_l^m(x)");
  eval_cmd->add_option("--l", eval.l, "Degree")->required();
  eval_cmd->add_option("--m", eval.m, "Order")->required();
  eval_cmd->add_option("--x", eval.x, "Argument in (-1,1)")->required();
  eval_cmd->add_flag("--derivative", eval.derivative, "Print dT/dx instead");
  add_common(eval_cmd, common, false);
  eval_cmd->callback([&] { action = [&] { return run_eval(eval, common, std::cout); }; });

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "CSV table l,m,x,T,dT on Gauss-Legendre nodes");
  table_cmd->add_option("--lmax", table.l_max, "Largest degree")->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--nodes", table.nodes, "Number of nodes (default lmax+1)")->check(CLI::PositiveNumber);
  add_common(table_cmd, common);
  table_cmd->callback([&] { action = [&] { return run_table(table, common, std::cout); }; });

  ApplyArgs apply;
  auto* apply_cmd = app.add_subcommand("apply", "Apply a generator or Casimir to a coefficient file");
  apply_cmd->add_option("--op", apply.op, "Jp Jm J3 Kp Km K3 Rp Rm R3 Sp Sm S3, or a Casimir name")->required();
  apply_cmd->add_option("--in", apply.in, "Input coefficient JSON")->required();
  add_common(apply_cmd, common);
  apply_cmd->callback([&] { action = [&] { return run_apply(apply, common, std::cout); }; });

  CommutatorArgs comm;
  auto* comm_cmd = app.add_subcommand("commutator", "Bracket of two generators on the truncated lattice");
  comm_cmd->add_option("--a", comm.a, "First generator")->required();
  comm_cmd->add_option("--b", comm.b, "Second generator")->required();
  comm_cmd->add_option("--lmax", comm.l_max, "Truncation degree")->check(CLI::NonNegativeNumber);
  comm_cmd->add_option("--report", comm.report, "Write the JSON report here (default: stdout)");
  add_common(comm_cmd, common, false);
  comm_cmd->callback([&] { action = [&] { return run_commutator(comm, common, std::cout); }; });

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Build unit(l,m) from unit(0,0) with J and Kp ladders");
  gen_cmd->add_option("--l", gen.l, "Degree")->required();
  gen_cmd->add_option("--m", gen.m, "Order")->required();
  gen_cmd->add_option("--lmax", gen.l_max, "Truncation degree (default l)");
  add_common(gen_cmd, common);
  gen_cmd->callback([&] { action = [&] { return run_generate(gen, common, std::cout); }; });

  SpectrumArgs sp;
  auto* sp_cmd = app.add_subcommand("spectrum", "Distinct eigenvalues of a diagonal generator");
  sp_cmd->add_option("--op", sp.op, "J3, K3, R3 or S3")->required();
  sp_cmd->add_option("--lmax", sp.l_max, "Truncation degree")->check(CLI::NonNegativeNumber);
  sp_cmd->add_option("--fixed-l", sp.fixed_l, "Restrict to one degree");
  sp_cmd->add_option("--fixed-m", sp.fixed_m, "Restrict to one order");
  sp_cmd->add_option("--parity", sp.parity, "Restrict l+m parity")->check(CLI::IsMember({"even", "odd"}));
  add_common(sp_cmd, common);
  sp_cmd->callback([&] { action = [&] { return run_spectrum(sp, common, std::cout); }; });

  TransformArgs tr;
  auto* tr_cmd = app.add_subcommand("transform", "Single-channel Legendre transforms");
  tr_cmd->require_subcommand(1);
  auto* tr_an = tr_cmd->add_subcommand("analyze", "Grid JSON to orthonormal spectrum JSON");
  auto* tr_syn = tr_cmd->add_subcommand("synthesize", "Spectrum JSON to grid JSON");
  for (auto* sub : {tr_an, tr_syn}) {
    sub->add_option("--m", tr.m, "Order (checked against the input)");
    sub->add_option("--lmax", tr.l_max, "Truncation degree")->check(CLI::NonNegativeNumber);
    sub->add_option("--in", tr.in, "Input JSON")->required();
    add_common(sub, common);
  }
  tr_syn->add_option("--nodes", tr.nodes, "Output grid order (default lmax+1)")->check(CLI::PositiveNumber);
  tr_an->callback([&] { action = [&] { return run_transform_analyze(tr, common, std::cout); }; });
  tr_syn->callback([&] { action = [&] { return run_transform_synthesize(tr, common, std::cout); }; });

  ShtArgs sht;
  auto* sht_cmd = app.add_subcommand("sht", "Spherical harmonic transforms");
  sht_cmd->require_subcommand(1);
  auto* sht_an = sht_cmd->add_subcommand("analyze", "Field JSON to coefficient JSON");
  auto* sht_syn = sht_cmd->add_subcommand("synthesize", "Coefficient JSON to field JSON");
  for (auto* sub : {sht_an, sht_syn}) {
    sub->add_option("--ntheta", sht.n_theta, "Gauss-Legendre nodes in cos(theta)")->check(CLI::PositiveNumber);
    sub->add_option("--nphi", sht.n_phi, "Equispaced longitudes")->check(CLI::PositiveNumber);
    sub->add_option("--lmax", sht.l_max, "Truncation degree")->check(CLI::NonNegativeNumber);
    sub->add_option("--in", sht.in, "Input JSON")->required();
    add_common(sub, common);
  }
  sht_an->callback([&] { action = [&] { return run_sht_analyze(sht, common, std::cout); }; });
  sht_syn->callback([&] { action = [&] { return run_sht_synthesize(sht, common, std::cout); }; });

  VerifyArgs ver;
  std::vector<std::string> suites = so32::suite_names();
  suites.emplace_back("all");
  auto* ver_cmd = app.add_subcommand("verify", "Run verification suites; exit 0 iff every check passes");
  ver_cmd->add_option("--suite", ver.suite, "Suite name")->check(CLI::IsMember(suites));
  ver_cmd->add_option("--lmax", ver.l_max, "Truncation degree")->check(CLI::NonNegativeNumber);
  ver_cmd->add_option("--nodes", ver.nodes, "Quadrature nodes for grid checks")->check(CLI::PositiveNumber);
  ver_cmd->add_option("--seed", ver.seed, "Seed for random spectra");
  add_common(ver_cmd, common);
  ver_cmd->callback([&] { action = [&] { return run_verify(ver, common, std::cout); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const so32::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const so32::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
