#include "covfix/orlib.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace covfix {

double UbTable::at(const std::string& name) const {
  auto it = values.find(name);
  if (it == values.end()) throw Error(ErrorCode::MissingUb, "no UB entry for " + name);
  return it->second;
}

namespace {

double next_number(std::istream& in, const char* what) {
  double v;
  if (!(in >> v)) throw Error(ErrorCode::Truncated, std::string("expected ") + what);
  return v;
}

int next_int(std::istream& in, const char* what) {
  double v = next_number(in, what);
  if (v != std::floor(v)) throw Error(ErrorCode::MalformedLine, std::string(what) + " is not an integer");
  return static_cast<int>(v);
}

}  // namespace

ScpInstance parse_orlib(std::istream& in) {
  int m = next_int(in, "row count");
  int n = next_int(in, "column count");
  std::vector<double> cost(static_cast<size_t>(std::max(n, 0)));
  for (int j = 0; j < n; ++j) cost[j] = next_number(in, "cost");
  std::vector<std::vector<int>> rows(static_cast<size_t>(std::max(m, 0)));
  for (int i = 0; i < m; ++i) {
    int k = next_int(in, "row support size");
    rows[i].resize(static_cast<size_t>(std::max(k, 0)));
    for (int t = 0; t < k; ++t) rows[i][t] = next_int(in, "column index") - 1;  // 1-based on disk
  }
  char c;
  if (in >> c) throw Error(ErrorCode::TrailingGarbage, "unexpected trailing token");
  return ScpInstance::validate(m, n, std::move(cost), std::move(rows));
}

ScpInstance parse_orlib_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Truncated, "cannot open " + path.string());
  return parse_orlib(in);
}

void write_orlib(const ScpInstance& inst, std::ostream& out) {
  out << inst.n_rows << ' ' << inst.n_cols << '\n';
  for (int j = 0; j < inst.n_cols; ++j) {
    if (inst.integral_costs) {
      out << static_cast<long long>(inst.cost[j]);
    } else {
      out << inst.cost[j];
    }
    out << (j + 1 == inst.n_cols ? '\n' : ' ');
  }
  for (int i = 0; i < inst.n_rows; ++i) {
    out << inst.rows[i].size();
    for (int j : inst.rows[i]) out << ' ' << j + 1;
    out << '\n';
  }
}

void write_orlib_file(const ScpInstance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  write_orlib(inst, out);
}

UbTable parse_ub_table(std::istream& in) {
  UbTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;  // blank or comment-only line
    double value;
    if (!(ls >> value)) {
      throw Error(ErrorCode::MalformedLine, "line " + std::to_string(lineno) + ": missing value");
    }
    std::string extra;
    if (ls >> extra) {
      throw Error(ErrorCode::MalformedLine, "line " + std::to_string(lineno) + ": trailing token");
    }
    if (!(value > 0.0)) {
      throw Error(ErrorCode::NonPositiveUb, name + " has UB " + std::to_string(value));
    }
    if (!table.values.emplace(name, value).second) {
      throw Error(ErrorCode::DuplicateName, name + " listed twice");
    }
  }
  return table;
}

UbTable parse_ub_table_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Truncated, "cannot open " + path.string());
  return parse_ub_table(in);
}

}  // namespace covfix
