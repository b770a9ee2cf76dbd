#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "weinstein/multiplier.hpp"
#include "weinstein/rkhs.hpp"

namespace weinstein {

struct GridSpec {
  int d = 1;
  double alpha = 0.5;
  std::vector<std::size_t> n{96, 96};  ///< Cartesian counts then the radial count
  double L = 10.0;
  double R = 10.0;

  Grid to_grid() const;
};

struct SymbolSpec {
  std::string name = "gaussian_admissible";
  std::map<std::string, double> params;
};

struct OutputPaths {
  std::string field;   ///< primary field output; stdout when empty
  std::string report;  ///< CSV report; stdout when empty
};

/// Everything a CLI run needs beyond its input field. Loaded from JSON; every
/// key is optional and falls back to the defaults below.
struct RunConfig {
  GridSpec grid;
  SymbolSpec symbol;
  double sigma = 1.0;
  double eta = 0.1;
  double gamma = 1e-2;
  double delta = 1e2;
  std::size_t sigma_points = 256;
  std::string zeta_family = "power";
  double zeta_s = 3.0;
  OutputPaths output;

  /// Re-checks every constraint of the referenced types; throws ConfigError.
  void validate() const;

  MultiplierSymbol make_multiplier() const;
  ZetaWeight make_zeta() const;
  RegParams make_reg() const { return {eta, sigma}; }
  SigmaQuadrature make_sigma_quadrature() const { return {gamma, delta, sigma_points, SigmaRule::gauss_legendre}; }
};

/// Throws ParseError on malformed JSON or mistyped keys and ConfigError on
/// values that fail validation.
RunConfig parse_run_config(std::istream& in);
RunConfig load_run_config(const std::string& path);
std::string dump_run_config(const RunConfig& config);

}  // namespace weinstein
