#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

#include "covfix/instance.hpp"

namespace covfix {

/// Best-known objective values keyed by instance name. These are experiment
/// inputs supplied by the user, not instance data.
struct UbTable {
  std::map<std::string, double> values;

  bool contains(const std::string& name) const { return values.count(name) != 0; }
  double at(const std::string& name) const;
};

/// Parses the OR-Library "scp" text layout: `m n`, then n costs, then for each
/// row a count followed by that many 1-based column indices. Whitespace and
/// line wrapping are free-form. The stream must be fully consumed.
ScpInstance parse_orlib(std::istream& in);
ScpInstance parse_orlib_file(const std::filesystem::path& path);

/// Inverse of parse_orlib; round-trips every valid instance.
void write_orlib(const ScpInstance& inst, std::ostream& out);
void write_orlib_file(const ScpInstance& inst, const std::filesystem::path& path);

/// Parses a UB sidecar: UTF-8 lines of "name value", '#' starts a comment.
UbTable parse_ub_table(std::istream& in);
UbTable parse_ub_table_file(const std::filesystem::path& path);

}  // namespace covfix
