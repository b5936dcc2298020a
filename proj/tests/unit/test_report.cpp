#include "doctest.h"

#include <sstream>

#include "covfix/report.hpp"

using namespace covfix;

TEST_CASE("plain fields pass through unquoted") {
  CHECK(CsvWriter::escape("scp41") == "scp41");
  CHECK(CsvWriter::escape("123.5") == "123.5");
}

TEST_CASE("fields with separators and quotes are escaped") {
  CHECK(CsvWriter::escape("a,b") == "\"a,b\"");
  CHECK(CsvWriter::escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(CsvWriter::escape("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("rows end with CRLF") {
  std::ostringstream out;
  CsvWriter csv(out);
  csv.write_row({"a", "b,c", "d"});
  CHECK(out.str() == "a,\"b,c\",d\r\n");
}

TEST_CASE("line chart emits one polyline per series") {
  std::ostringstream out;
  ChartSeries s1{"fixed", {{0, 0}, {1, 5}, {2, 9}}, false};
  ChartSeries s2{"gap", {{0, 100}, {1, 40}, {2, 0}}, true};
  write_line_chart(out, "trace", "iteration", {s1, s2});
  const std::string svg = out.str();
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.rfind("<polyline") != svg.find("<polyline"));  // two of them
  CHECK(svg.find("fixed") != std::string::npos);
  CHECK(svg.find("gap (right)") != std::string::npos);
}

TEST_CASE("bar chart emits one rect per bar plus chrome") {
  std::ostringstream out;
  ChartSeries a{"irc", {{1, 4}, {2, 2}}, false};
  ChartSeries b{"idpf", {{1, 6}, {2, 1}}, false};
  write_bar_chart(out, "per-pass fixes", "outer iteration", {"1", "2"}, {a, b});
  const std::string svg = out.str();
  size_t rects = 0;
  for (size_t pos = svg.find("<rect"); pos != std::string::npos; pos = svg.find("<rect", pos + 1)) {
    ++rects;
  }
  // 4 bars + background + 2 legend swatches.
  CHECK(rects == 7);
}

TEST_CASE("chart output is deterministic") {
  auto render = [] {
    std::ostringstream out;
    write_line_chart(out, "t", "x", {{"s", {{0, 1}, {1, 2}}, false}});
    return out.str();
  };
  CHECK(render() == render());
}
