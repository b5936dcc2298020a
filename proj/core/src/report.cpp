#include "covfix/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace covfix {

std::string CsvWriter::escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void CsvWriter::write_row(const std::vector<std::string>& fields) {
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    out_ << escape(fields[i]);
  }
  out_ << "\r\n";
}

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 480;
constexpr int kMarginLeft = 64;
constexpr int kMarginRight = 64;
constexpr int kMarginTop = 48;
constexpr int kMarginBottom = 56;

const std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c",
                                             "#ff7f0e", "#9467bd", "#8c564b"};

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

struct Range {
  double lo = 0.0, hi = 1.0;
  void grow(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  double scale(double v, double pix_lo, double pix_hi) const {
    if (hi <= lo) return pix_lo;
    return pix_lo + (v - lo) / (hi - lo) * (pix_hi - pix_lo);
  }
};

void svg_header(std::ostream& out, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">"
      << title << "</text>\n";
}

void svg_axes(std::ostream& out, const std::string& x_label) {
  out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kHeight - kMarginBottom << "\" x2=\""
      << kWidth - kMarginRight << "\" y2=\"" << kHeight - kMarginBottom
      << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\"" << kMarginLeft
      << "\" y2=\"" << kHeight - kMarginBottom << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 16
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << x_label
      << "</text>\n";
}

void svg_legend(std::ostream& out, const std::vector<ChartSeries>& series) {
  int y = kMarginTop;
  for (size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % kPalette.size()];
    out << "<rect x=\"" << kWidth - kMarginRight - 150 << "\" y=\"" << y
        << "\" width=\"12\" height=\"12\" fill=\"" << color << "\"/>\n"
        << "<text x=\"" << kWidth - kMarginRight - 132 << "\" y=\"" << y + 11
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << series[s].name
        << (series[s].second_axis ? " (right)" : "") << "</text>\n";
    y += 18;
  }
}

}  // namespace

void write_line_chart(std::ostream& out, const std::string& title, const std::string& x_label,
                      const std::vector<ChartSeries>& series) {
  Range xr, yr_left, yr_right;
  bool any = false;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!any) {
        xr = {x, x};
        any = true;
      }
      xr.grow(x);
      (s.second_axis ? yr_right : yr_left).grow(y);
    }
  }
  svg_header(out, title);
  svg_axes(out, x_label);
  const double px_lo = kMarginLeft, px_hi = kWidth - kMarginRight;
  const double py_lo = kHeight - kMarginBottom, py_hi = kMarginTop;
  for (size_t s = 0; s < series.size(); ++s) {
    const auto& sr = series[s];
    if (sr.points.empty()) continue;
    const Range& yr = sr.second_axis ? yr_right : yr_left;
    out << "<polyline fill=\"none\" stroke=\"" << kPalette[s % kPalette.size()]
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : sr.points) {
      out << fmt(xr.scale(x, px_lo, px_hi)) << ',' << fmt(yr.scale(y, py_lo, py_hi)) << ' ';
    }
    out << "\"/>\n";
  }
  // axis extents as tick labels
  out << "<text x=\"" << kMarginLeft << "\" y=\"" << kHeight - kMarginBottom + 16
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(xr.lo) << "</text>\n"
      << "<text x=\"" << kWidth - kMarginRight << "\" y=\"" << kHeight - kMarginBottom + 16
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(xr.hi)
      << "</text>\n"
      << "<text x=\"" << kMarginLeft - 6 << "\" y=\"" << kMarginTop + 4
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(yr_left.hi)
      << "</text>\n"
      << "<text x=\"" << kMarginLeft - 6 << "\" y=\"" << kHeight - kMarginBottom
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(yr_left.lo)
      << "</text>\n";
  svg_legend(out, series);
  out << "</svg>\n";
}

void write_bar_chart(std::ostream& out, const std::string& title, const std::string& x_label,
                     const std::vector<std::string>& group_labels,
                     const std::vector<ChartSeries>& series) {
  Range yr;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      (void)x;
      yr.grow(y);
    }
  }
  svg_header(out, title);
  svg_axes(out, x_label);
  const size_t groups = group_labels.size();
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double group_w = groups ? plot_w / static_cast<double>(groups) : plot_w;
  const double bar_w = series.empty() ? group_w : group_w * 0.8 / static_cast<double>(series.size());
  const double py_lo = kHeight - kMarginBottom, py_hi = kMarginTop;
  for (size_t s = 0; s < series.size(); ++s) {
    const auto& sr = series[s];
    for (size_t g = 0; g < sr.points.size() && g < groups; ++g) {
      const double v = sr.points[g].second;
      const double top = yr.scale(v, py_lo, py_hi);
      const double x = kMarginLeft + group_w * static_cast<double>(g) + group_w * 0.1 +
                       bar_w * static_cast<double>(s);
      out << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(bar_w)
          << "\" height=\"" << fmt(py_lo - top) << "\" fill=\"" << kPalette[s % kPalette.size()]
          << "\"/>\n";
    }
  }
  for (size_t g = 0; g < groups; ++g) {
    out << "<text x=\"" << fmt(kMarginLeft + group_w * (static_cast<double>(g) + 0.5)) << "\" y=\""
        << kHeight - kMarginBottom + 16
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << group_labels[g] << "</text>\n";
  }
  out << "<text x=\"" << kMarginLeft - 6 << "\" y=\"" << kMarginTop + 4
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(yr.hi)
      << "</text>\n";
  svg_legend(out, series);
  out << "</svg>\n";
}

}  // namespace covfix
