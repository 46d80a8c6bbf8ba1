#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "oco/bounds.hpp"

namespace oco {

/// Columns: t, container, penalty, subtraction, cum_bound, cum_regret, margin.
void write_report_csv(std::ostream& out, const BoundReport& report);
void write_report_csv(const std::string& path, const BoundReport& report);

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  bool dashed = false;
};

/// Self-contained SVG line chart.
void write_svg_plot(const std::string& path, const std::string& title, const std::string& x_label,
                    const std::string& y_label, const std::vector<Series>& series);

/// Cumulative bound and cumulative regret curves for one report.
std::vector<Series> cumulative_series(const BoundReport& report);

}  // namespace oco
