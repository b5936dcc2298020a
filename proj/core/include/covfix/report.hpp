#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace covfix {

/// RFC-4180 CSV emitter; callers write the header row themselves.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void write_row(const std::vector<std::string>& fields);

  static std::string escape(const std::string& field);

 private:
  std::ostream& out_;
};

/// One named polyline for the chart writers. Points are (x, y) pairs in data
/// coordinates; each series is scaled to its own axis when `second_axis` is
/// set (used to overlay gap percentages on fixed counts).
struct ChartSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
  bool second_axis = false;
};

/// Minimal static SVG line chart; no external plotting dependency.
void write_line_chart(std::ostream& out, const std::string& title, const std::string& x_label,
                      const std::vector<ChartSeries>& series);

/// Grouped bar chart: one group per x position, one bar per series.
void write_bar_chart(std::ostream& out, const std::string& title, const std::string& x_label,
                     const std::vector<std::string>& group_labels,
                     const std::vector<ChartSeries>& series);

}  // namespace covfix
