#pragma once

#include <iosfwd>
#include <string>

#include "weinstein/grid.hpp"

namespace weinstein {

/// Text field format: a header line
///   # version=1 d=1 alpha=0.5 n=64,64 L=2 R=2 side=space
/// (n lists the Cartesian counts then the radial count, L one extent per
/// Cartesian axis) followed by one "re,im" row per sample in storage order.
void write_field(std::ostream& out, const Field& f);
void write_field(const std::string& path, const Field& f);

/// Throws ParseError carrying the 1-based line number of the first problem.
Field read_field(std::istream& in);
Field read_field(const std::string& path);

/// Grid described by a header line, with or without the leading '#'.
Grid parse_field_header(const std::string& line);
std::string format_field_header(const Grid& grid);

}  // namespace weinstein
