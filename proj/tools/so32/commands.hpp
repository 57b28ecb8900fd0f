#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace so32::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

struct Common {
  std::optional<double> tol;
  std::string out;
  bool quiet = false;
};

struct EvalArgs {
  int l = 0;
  int m = 0;
  double x = 0.0;
  bool derivative = false;
};

struct TableArgs {
  int l_max = 4;
  int nodes = 0;
};

struct ApplyArgs {
  std::string op;
  std::string in;
};

struct CommutatorArgs {
  std::string a;
  std::string b;
  int l_max = 12;
  std::string report;
};

struct GenerateArgs {
  int l = 0;
  int m = 0;
  std::optional<int> l_max;
};

struct SpectrumArgs {
  std::string op;
  int l_max = 12;
  std::optional<int> fixed_l;
  std::optional<int> fixed_m;
  std::string parity;
};

struct TransformArgs {
  std::optional<int> m;
  int l_max = 12;
  std::optional<int> nodes;
  std::string in;
};

struct ShtArgs {
  std::optional<int> n_theta;
  std::optional<int> n_phi;
  std::optional<int> l_max;
  std::string in;
};

struct VerifyArgs {
  std::string suite = "all";
  int l_max = 12;
  int nodes = 32;
  unsigned long long seed = 20120101;
};

int run_eval(const EvalArgs& a, const Common& c, std::ostream& out);
int run_table(const TableArgs& a, const Common& c, std::ostream& out);
int run_apply(const ApplyArgs& a, const Common& c, std::ostream& out);
int run_commutator(const CommutatorArgs& a, const Common& c, std::ostream& out);
int run_generate(const GenerateArgs& a, const Common& c, std::ostream& out);
int run_spectrum(const SpectrumArgs& a, const Common& c, std::ostream& out);
int run_transform_analyze(const TransformArgs& a, const Common& c, std::ostream& out);
int run_transform_synthesize(const TransformArgs& a, const Common& c, std::ostream& out);
int run_sht_analyze(const ShtArgs& a, const Common& c, std::ostream& out);
int run_sht_synthesize(const ShtArgs& a, const Common& c, std::ostream& out);
int run_verify(const VerifyArgs& a, const Common& c, std::ostream& out);

/// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace so32::cli
