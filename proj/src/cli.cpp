#include "weinstein/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "weinstein/acceptance.hpp"
#include "weinstein/calderon.hpp"
#include "weinstein/errors.hpp"
#include "weinstein/field_io.hpp"
#include "weinstein/parallel.hpp"
#include "weinstein/rkhs.hpp"
#include "weinstein/run_config.hpp"
#include "weinstein/sampling.hpp"

namespace weinstein {

namespace {

// Flags shared by every subcommand, plus per-command overrides of config
// values. Unset optionals leave the config untouched.
struct Options {
  std::string config_path;
  unsigned threads = 1;
  std::optional<std::uint64_t> seed;
  std::string in;
  std::string out;

  std::optional<std::string> symbol;
  std::vector<std::string> params;
  std::optional<double> sigma;
  std::optional<double> eta;
  std::optional<double> gamma;
  std::optional<double> delta;
  std::optional<double> zeta_s;
  std::optional<std::size_t> sigma_points;

  bool inverse = false;
  std::vector<double> x;
  std::string with;
  std::string method = "spectral";
  bool first = false;
  bool second = false;
  std::string kernel_type = "psi";
  bool quick = false;
  std::vector<int> only;
};

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Sinks for the report (CSV key,value) and field outputs.
class Outputs {
 public:
  Outputs(std::ostream& out, const RunConfig& config, const Options& options)
      : out_(out), field_path_(options.out.empty() ? config.output.field : options.out),
        report_path_(config.output.report) {}

  void field(const Field& f) {
    if (field_path_.empty()) {
      write_field(out_, f);
    } else {
      write_field(field_path_, f);
    }
  }

  void report(const std::string& key, double value) { report_ << key << ',' << format_number(value) << '\n'; }

  void flush() {
    if (report_.str().empty()) return;
    if (report_path_.empty()) {
      out_ << report_.str();
      return;
    }
    std::ofstream file(report_path_);
    if (!file) throw ConfigError("cannot open '" + report_path_ + "' for writing");
    file << report_.str();
  }

 private:
  std::ostream& out_;
  std::string field_path_;
  std::string report_path_;
  std::ostringstream report_;
};

RunConfig resolve_config(const Options& o) {
  RunConfig c = o.config_path.empty() ? RunConfig{} : load_run_config(o.config_path);
  if (o.symbol) {
    c.symbol.name = *o.symbol;
    c.symbol.params.clear();
  }
  for (const std::string& kv : o.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("--param expects key=value, got '" + kv + "'");
    double value = 0.0;
    std::size_t used = 0;
    try {
      value = std::stod(kv.substr(eq + 1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != kv.size() - eq - 1) throw ConfigError("--param value in '" + kv + "' is not a number");
    c.symbol.params[kv.substr(0, eq)] = value;
  }
  if (o.sigma) c.sigma = *o.sigma;
  if (o.eta) c.eta = *o.eta;
  if (o.gamma) c.gamma = *o.gamma;
  if (o.delta) c.delta = *o.delta;
  if (o.zeta_s) c.zeta_s = *o.zeta_s;
  if (o.sigma_points) c.sigma_points = *o.sigma_points;
  c.validate();
  return c;
}

// Space grid whose default frequency grid is `freq`.
Grid space_grid_for(const Grid& freq) {
  Grid g = freq;
  g.side = Side::space;
  for (int a = 0; a < g.d; ++a) g.cart_extents[a] = std::numbers::pi * g.cart_counts[a] / (2.0 * freq.cart_extents[a]);
  g.radial_extent = std::numbers::pi * g.radial_count / freq.radial_extent;
  return g;
}

// Input field: the --in file or, by default, the unit Gaussian on the config grid.
Field input_field(const RunConfig& c, const std::string& path) {
  if (path.empty()) return gaussian_field(c.grid.to_grid());
  return read_field(path);
}

SpectralPlan plan_for(const Field& f) {
  return build_plan(f.grid().side == Side::space ? f.grid() : space_grid_for(f.grid()));
}

const Field& require_space(const Field& f, const char* command) {
  if (f.grid().side != Side::space) throw ConfigError(std::string(command) + " expects a space-side field");
  return f;
}

Point require_point(const std::vector<double>& coords, const Grid& g, const char* flag) {
  if (coords.size() != static_cast<std::size_t>(g.d) + 1) {
    throw ConfigError(std::string(flag) + " needs " + std::to_string(g.d + 1) + " comma-separated coordinates");
  }
  return coords;
}

int cmd_transform(const Options& o, const RunConfig& c, Outputs& out) {
  Field f = input_field(c, o.in);
  if (o.inverse && f.grid().side == Side::space) {
    // Without an input file the Gaussian is reinterpreted on the frequency side.
    if (!o.in.empty()) throw ConfigError("transform --inverse expects a frequency-side field");
    const SpectralPlan plan = build_plan(f.grid());
    f = Field(plan.freq_grid(), std::vector<Complex>(f.values().begin(), f.values().end()));
  }
  if (!o.inverse) require_space(f, "transform");
  const SpectralPlan plan = plan_for(f);
  out.field(o.inverse ? plan.inverse(f) : plan.forward(f));
  return kExitOk;
}

int cmd_translate(const Options& o, const RunConfig& c, Outputs& out) {
  const Field f = require_space(input_field(c, o.in), "translate");
  const SpectralPlan plan = plan_for(f);
  const Point x = require_point(o.x, f.grid(), "--x");
  if (o.method == "theta") {
    out.field(translate_theta(plan, f, x));
  } else {
    out.field(translate_spectral(plan, f, x));
  }
  return kExitOk;
}

int cmd_convolve(const Options& o, const RunConfig& c, Outputs& out) {
  const Field f = require_space(input_field(c, o.in), "convolve");
  const Field g = o.with.empty() ? gaussian_field(f.grid()) : require_space(read_field(o.with), "convolve");
  require_same_grid(f, g, "convolve");
  const SpectralPlan plan = plan_for(f);
  out.field(convolve(plan, f, g, o.method == "direct" ? ConvolutionMethod::direct : ConvolutionMethod::spectral));
  return kExitOk;
}

int cmd_multiply(const Options& o, const RunConfig& c, Outputs& out) {
  const Field f = require_space(input_field(c, o.in), "multiply");
  const SpectralPlan plan = plan_for(f);
  out.field(apply_multiplier(plan, c.make_multiplier(), c.sigma, f));
  return kExitOk;
}

int cmd_calderon(const Options& o, const RunConfig& c, Outputs& out) {
  const Field phi = require_space(input_field(c, o.in), "calderon");
  const SpectralPlan plan = plan_for(phi);
  const MultiplierSymbol m = c.make_multiplier();
  const SigmaQuadrature quad = c.make_sigma_quadrature();
  const Field result = o.first ? calderon_first(plan, m, phi, quad)
                               : calderon_second(plan, m, phi, quad.gamma, quad.delta, quad.points, quad.rule);
  const double error = norm(plan, result - phi);
  out.report("relative_error", error / norm(plan, phi));
  out.report("error_squared", error * error);
  out.report("predicted_error_squared", window_error_prediction(plan, m, phi, quad));
  if (!o.out.empty() || !c.output.field.empty()) out.field(result);
  return kExitOk;
}

int cmd_plancherel(const Options& o, const RunConfig& c, Outputs& out) {
  const Field phi = require_space(input_field(c, o.in), "plancherel-check");
  const SpectralPlan plan = plan_for(phi);
  const CalderonPlancherel r = calderon_plancherel(plan, c.make_multiplier(), phi, c.make_sigma_quadrature());
  out.report("lhs", r.lhs);
  out.report("rhs", r.rhs);
  out.report("relative_gap", r.lhs > 0.0 ? std::abs(r.rhs / r.lhs - 1.0) : std::abs(r.rhs));
  return kExitOk;
}

int cmd_extremal(const Options& o, const RunConfig& c, Outputs& out) {
  const Field h = require_space(input_field(c, o.in), "extremal");
  const SpectralPlan plan = plan_for(h);
  const ZetaWeight zeta = ZetaWeight::power(c.zeta_s, h.grid());
  const RegParams reg = c.make_reg();
  const MultiplierSymbol m = c.make_multiplier();
  const Field star = extremal(plan, zeta, reg, m, h);
  out.report("objective", objective(plan, zeta, reg, m, h, star));
  out.report("norm_zeta", norm_zeta(plan, zeta, star));
  out.field(star);
  return kExitOk;
}

int cmd_kernel(const Options& o, const RunConfig& c, Outputs& out) {
  const Grid grid = o.in.empty() ? c.grid.to_grid() : read_field(o.in).grid();
  if (grid.side != Side::space) throw ConfigError("kernel expects a space-side grid");
  const SpectralPlan plan = build_plan(grid);
  const Point y = require_point(o.x, grid, "--y");
  const ZetaWeight zeta = ZetaWeight::power(c.zeta_s, grid);
  const RegParams reg = c.make_reg();
  const MultiplierSymbol m = c.make_multiplier();
  out.field(o.kernel_type == "theta" ? kernel_theta_field(plan, zeta, reg, m, y)
                                     : kernel_psi_field(plan, zeta, reg, m, y));
  return kExitOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  AcceptanceOptions options;
  options.quick = o.quick;
  if (o.seed) options.seed = *o.seed;
  std::vector<int> ids = o.only;
  if (ids.empty()) {
    for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
  }
  int failures = 0;
  for (int id : ids) {
    const CriterionResult r = run_criterion(id, options);
    out << format_result(r) << std::endl;
    failures += r.passed ? 0 : 1;
  }
  out << (failures ? std::to_string(failures) + " of " + std::to_string(ids.size()) + " criteria failed"
                   : "all " + std::to_string(ids.size()) + " criteria passed")
      << std::endl;
  return failures ? kExitFailure : kExitOk;
}

void add_symbol_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--symbol", o.symbol, "multiplier preset name");
  cmd->add_option("--param", o.params, "symbol parameter key=value (repeatable)");
  cmd->add_option("--sigma", o.sigma, "dilation sigma")->check(CLI::PositiveNumber);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weinstein transform toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "seed for the selftest's random trials");

  auto io_flags = [&](CLI::App* cmd) {
    cmd->add_option("--in", o.in, "input field file (default: Gaussian on the config grid)");
    cmd->add_option("--out", o.out, "output field file (default: config output.field or stdout)");
  };

  CLI::App* transform = app.add_subcommand("transform", "forward or inverse Weinstein transform");
  io_flags(transform);
  transform->add_flag("--inverse", o.inverse, "apply the inverse transform");

  CLI::App* translate = app.add_subcommand("translate", "generalised translation by x");
  io_flags(translate);
  translate->add_option("--x", o.x, "shift point (Cartesian coordinates, then radial)")->required()->delimiter(',');
  translate->add_option("--method", o.method, "theta or spectral")->check(CLI::IsMember({"theta", "spectral"}));

  CLI::App* conv = app.add_subcommand("convolve", "Weinstein convolution of --in with --with");
  io_flags(conv);
  conv->add_option("--with", o.with, "second field (default: Gaussian)");
  conv->add_option("--method", o.method, "direct or spectral")->check(CLI::IsMember({"direct", "spectral"}));

  CLI::App* multiply = app.add_subcommand("multiply", "multiplier operator T_{m,sigma}");
  io_flags(multiply);
  add_symbol_flags(multiply, o);

  CLI::App* calderon = app.add_subcommand("calderon", "windowed Calderon reconstruction");
  io_flags(calderon);
  add_symbol_flags(calderon, o);
  calderon->add_option("--gamma", o.gamma, "lower scale")->check(CLI::PositiveNumber);
  calderon->add_option("--delta", o.delta, "upper scale")->check(CLI::PositiveNumber);
  calderon->add_option("--points", o.sigma_points, "scale quadrature nodes")->check(CLI::PositiveNumber);
  CLI::Option* first = calderon->add_flag("--first", o.first, "sum over scales of convolutions");
  CLI::Option* second = calderon->add_flag("--second", o.second, "spectral window (default)");
  first->excludes(second);

  CLI::App* plancherel = app.add_subcommand("plancherel-check", "scale-integrated energy against ||phi||^2");
  io_flags(plancherel);
  add_symbol_flags(plancherel, o);
  plancherel->add_option("--gamma", o.gamma, "lower scale")->check(CLI::PositiveNumber);
  plancherel->add_option("--delta", o.delta, "upper scale")->check(CLI::PositiveNumber);
  plancherel->add_option("--points", o.sigma_points, "scale quadrature nodes")->check(CLI::PositiveNumber);

  CLI::App* extremal_cmd = app.add_subcommand("extremal", "regularised inverse of T_{m,sigma}");
  io_flags(extremal_cmd);
  add_symbol_flags(extremal_cmd, o);
  extremal_cmd->add_option("--eta", o.eta, "regularisation weight")->check(CLI::PositiveNumber);
  extremal_cmd->add_option("--zeta-s", o.zeta_s, "exponent of (1 + |xi|^2)^s");

  CLI::App* kernel = app.add_subcommand("kernel", "reproducing kernel x -> K(x, y)");
  io_flags(kernel);
  add_symbol_flags(kernel, o);
  kernel->add_option("--type", o.kernel_type, "psi or theta")->check(CLI::IsMember({"psi", "theta"}));
  kernel->add_option("--y", o.x, "second argument y")->required()->delimiter(',');
  kernel->add_option("--eta", o.eta, "regularisation weight")->check(CLI::PositiveNumber);
  kernel->add_option("--zeta-s", o.zeta_s, "exponent of (1 + |xi|^2)^s");

  CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest->add_flag("--quick", o.quick, "fewer random trials");
  selftest->add_option("--only", o.only, "criterion ids to run")->delimiter(',')->check(CLI::Range(1, kCriterionCount));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  set_thread_count(o.threads);
  try {
    if (selftest->parsed()) return cmd_selftest(o, out);
    const RunConfig config = resolve_config(o);
    Outputs outputs(out, config, o);
    int code = kExitOk;
    if (transform->parsed()) code = cmd_transform(o, config, outputs);
    if (translate->parsed()) code = cmd_translate(o, config, outputs);
    if (conv->parsed()) code = cmd_convolve(o, config, outputs);
    if (multiply->parsed()) code = cmd_multiply(o, config, outputs);
    if (calderon->parsed()) code = cmd_calderon(o, config, outputs);
    if (plancherel->parsed()) code = cmd_plancherel(o, config, outputs);
    if (extremal_cmd->parsed()) code = cmd_extremal(o, config, outputs);
    if (kernel->parsed()) code = cmd_kernel(o, config, outputs);
    outputs.flush();
    return code;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int run_command(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_command(args, std::cout, std::cerr);
}

}  // namespace weinstein
