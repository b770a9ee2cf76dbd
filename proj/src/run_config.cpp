#include "weinstein/run_config.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "weinstein/errors.hpp"

namespace weinstein {

namespace {

using nlohmann::json;

void reject_unknown(const json& object, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (!known.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

template <class T>
void read_key(const json& object, const char* key, T& target) {
  if (object.contains(key)) target = object.at(key).get<T>();
}

}  // namespace

Grid GridSpec::to_grid() const {
  if (n.size() != static_cast<std::size_t>(d) + 1) {
    throw ConfigError("grid.n must list d Cartesian counts and one radial count");
  }
  Grid g;
  g.d = d;
  g.alpha = BesselIndex(alpha);
  g.cart_counts.assign(n.begin(), n.end() - 1);
  g.cart_extents.assign(static_cast<std::size_t>(d), L);
  g.radial_count = n.back();
  g.radial_extent = R;
  g.side = Side::space;
  g.validate();
  return g;
}

void RunConfig::validate() const {
  try {
    (void)grid.to_grid();
    (void)make_multiplier();
    (void)make_zeta();
    make_reg().validate();
    make_sigma_quadrature().validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

MultiplierSymbol RunConfig::make_multiplier() const { return make_symbol(symbol.name, symbol.params); }

ZetaWeight RunConfig::make_zeta() const {
  if (zeta_family != "power") throw ConfigError("unknown zeta family '" + zeta_family + "'");
  return ZetaWeight::power(zeta_s, grid.to_grid());
}

RunConfig parse_run_config(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    // nlohmann reports a byte offset; the message itself names line and column.
    throw ParseError(e.what(), 0);
  }
  if (!doc.is_object()) throw ParseError("config must be a JSON object", 0);

  RunConfig c;
  try {
    reject_unknown(doc,
                   {"grid", "symbol", "sigma", "eta", "gamma", "delta", "sigma_points", "zeta", "output"},
                   "config");
    if (doc.contains("grid")) {
      const json& g = doc.at("grid");
      reject_unknown(g, {"d", "alpha", "n", "L", "R"}, "grid");
      read_key(g, "d", c.grid.d);
      read_key(g, "alpha", c.grid.alpha);
      read_key(g, "n", c.grid.n);
      read_key(g, "L", c.grid.L);
      read_key(g, "R", c.grid.R);
    }
    if (doc.contains("symbol")) {
      const json& s = doc.at("symbol");
      reject_unknown(s, {"name", "params"}, "symbol");
      read_key(s, "name", c.symbol.name);
      read_key(s, "params", c.symbol.params);
    }
    read_key(doc, "sigma", c.sigma);
    read_key(doc, "eta", c.eta);
    read_key(doc, "gamma", c.gamma);
    read_key(doc, "delta", c.delta);
    read_key(doc, "sigma_points", c.sigma_points);
    if (doc.contains("zeta")) {
      const json& z = doc.at("zeta");
      reject_unknown(z, {"family", "s"}, "zeta");
      read_key(z, "family", c.zeta_family);
      read_key(z, "s", c.zeta_s);
    }
    if (doc.contains("output")) {
      const json& o = doc.at("output");
      reject_unknown(o, {"field", "report"}, "output");
      read_key(o, "field", c.output.field);
      read_key(o, "report", c.output.report);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what(), 0);
  }
  c.validate();
  return c;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_run_config(in);
}

std::string dump_run_config(const RunConfig& c) {
  json doc = {
      {"grid", {{"d", c.grid.d}, {"alpha", c.grid.alpha}, {"n", c.grid.n}, {"L", c.grid.L}, {"R", c.grid.R}}},
      {"symbol", {{"name", c.symbol.name}, {"params", c.symbol.params}}},
      {"sigma", c.sigma},
      {"eta", c.eta},
      {"gamma", c.gamma},
      {"delta", c.delta},
      {"sigma_points", c.sigma_points},
      {"zeta", {{"family", c.zeta_family}, {"s", c.zeta_s}}},
      {"output", {{"field", c.output.field}, {"report", c.output.report}}},
  };
  return doc.dump(2);
}

}  // namespace weinstein
