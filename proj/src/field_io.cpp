#include "weinstein/field_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "weinstein/errors.hpp"

namespace weinstein {

namespace {

constexpr int kFormatVersion = 1;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

bool parse_double(const std::string& text, double& value) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  return ec == std::errc{} && ptr == end;
}

double header_double(const std::string& key, const std::string& text, std::size_t line) {
  double v = 0.0;
  if (!parse_double(text, v)) throw ParseError("header value " + key + "=" + text + " is not a number", line);
  return v;
}

std::size_t header_count(const std::string& text, std::size_t line) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("sample count '" + text + "' is not a non-negative integer", line);
  }
  return v;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Grid parse_header_at(const std::string& raw, std::size_t line) {
  std::string text = trim(raw);
  if (text.empty() || text.front() != '#') throw ParseError("missing '#' header line", line);
  text = text.substr(1);

  std::map<std::string, std::string> fields;
  std::istringstream words(text);
  std::string word;
  while (words >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("header token '" + word + "' is not key=value", line);
    const std::string key = word.substr(0, eq);
    if (fields.count(key)) throw ParseError("header key '" + key + "' repeated", line);
    fields[key] = word.substr(eq + 1);
  }
  auto take = [&](const std::string& key) {
    const auto it = fields.find(key);
    if (it == fields.end()) throw ParseError("header is missing '" + key + "'", line);
    std::string v = it->second;
    fields.erase(it);
    return v;
  };

  if (fields.count("version")) {
    const double version = header_double("version", take("version"), line);
    if (version != kFormatVersion) throw ParseError("unsupported field file version", line);
  }
  Grid g;
  const double d = header_double("d", take("d"), line);
  if (d != std::floor(d) || d < 1 || d > 3) throw ParseError("d must be 1, 2 or 3", line);
  g.d = static_cast<int>(d);
  try {
    g.alpha = BesselIndex(header_double("alpha", take("alpha"), line));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line);
  }

  const auto counts = split(take("n"), ',');
  if (counts.size() != static_cast<std::size_t>(g.d) + 1) {
    throw ParseError("n must list " + std::to_string(g.d + 1) + " counts", line);
  }
  for (int a = 0; a < g.d; ++a) g.cart_counts.push_back(header_count(counts[a], line));
  g.radial_count = header_count(counts.back(), line);

  const auto extents = split(take("L"), ',');
  if (extents.size() != 1 && extents.size() != static_cast<std::size_t>(g.d)) {
    throw ParseError("L must give one extent or one per Cartesian axis", line);
  }
  for (int a = 0; a < g.d; ++a) {
    g.cart_extents.push_back(header_double("L", extents[extents.size() == 1 ? 0 : a], line));
  }
  g.radial_extent = header_double("R", take("R"), line);
  try {
    g.side = side_from_string(take("side"));
  } catch (const ConfigError& e) {
    throw ParseError(e.what(), line);
  }
  if (!fields.empty()) throw ParseError("unknown header key '" + fields.begin()->first + "'", line);
  try {
    g.validate();
  } catch (const std::exception& e) {
    throw ParseError(e.what(), line);
  }
  return g;
}

}  // namespace

std::string format_field_header(const Grid& g) {
  std::ostringstream out;
  out << "# version=" << kFormatVersion << " d=" << g.d << " alpha=" << format_double(g.alpha.value()) << " n=";
  for (std::size_t c : g.cart_counts) out << c << ',';
  out << g.radial_count << " L=";
  for (std::size_t a = 0; a < g.cart_extents.size(); ++a) {
    out << (a ? "," : "") << format_double(g.cart_extents[a]);
  }
  out << " R=" << format_double(g.radial_extent) << " side=" << to_string(g.side);
  return out.str();
}

Grid parse_field_header(const std::string& line) {
  const std::string text = trim(line);
  return parse_header_at(text.starts_with('#') ? text : "# " + text, 1);
}

void write_field(std::ostream& out, const Field& f) {
  out << format_field_header(f.grid()) << '\n';
  for (const Complex& v : f.values()) out << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
}

void write_field(const std::string& path, const Field& f) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open '" + path + "' for writing");
  write_field(out, f);
  out.flush();
  if (!out) throw ConfigError("write to '" + path + "' failed");
}

Field read_field(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty field file", 1);
  ++line_no;
  const Grid grid = parse_header_at(line, line_no);

  std::vector<Complex> values;
  values.reserve(grid.size());
  while (std::getline(in, line)) {
    ++line_no;
    const std::string row = trim(line);
    if (row.empty()) continue;
    if (values.size() == grid.size()) throw ParseError("more samples than the header declares", line_no);
    const auto parts = split(row, ',');
    double re = 0.0;
    double im = 0.0;
    if (parts.size() != 2 || !parse_double(parts[0], re) || !parse_double(parts[1], im)) {
      throw ParseError("expected a 're,im' row", line_no);
    }
    if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError("non-finite sample", line_no);
    values.emplace_back(re, im);
  }
  if (values.size() < grid.size()) {
    throw ParseError("truncated field: " + std::to_string(grid.size() - values.size()) + " of " +
                         std::to_string(grid.size()) + " rows missing",
                     line_no + 1);
  }
  return Field(grid, std::move(values));
}

Field read_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "' for reading");
  return read_field(in);
}

}  // namespace weinstein
