#include "oco/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "oco/config.hpp"

namespace oco {

void write_report_csv(std::ostream& out, const BoundReport& report) {
  out << "t,container,penalty,subtraction,cum_bound,cum_regret,margin\n";
  double bound = 0.0;
  double regret = 0.0;
  for (std::size_t i = 0; i < report.container.size(); ++i) {
    bound += report.container[i] + report.penalty[i] + report.subtraction[i];
    if (i < report.round_regret.size()) regret += report.round_regret[i];
    out << i + 1 << ',' << format_real(report.container[i]) << ',' << format_real(report.penalty[i])
        << ',' << format_real(report.subtraction[i]) << ',' << format_real(bound) << ','
        << format_real(regret) << ',' << format_real(bound - regret) << '\n';
  }
}

void write_report_csv(const std::string& path, const BoundReport& report) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_report_csv(out, report);
}

std::vector<Series> cumulative_series(const BoundReport& report) {
  Series b{report.corollary_id + " bound", {}, {}, false};
  Series r{report.corollary_id + " regret", {}, {}, true};
  double bound = 0.0;
  double regret = 0.0;
  for (std::size_t i = 0; i < report.container.size(); ++i) {
    bound += report.container[i] + report.penalty[i] + report.subtraction[i];
    if (i < report.round_regret.size()) regret += report.round_regret[i];
    b.x.push_back(static_cast<double>(i + 1));
    b.y.push_back(bound);
    r.x.push_back(static_cast<double>(i + 1));
    r.y.push_back(regret);
  }
  return {b, r};
}

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

void write_svg_plot(const std::string& path, const std::string& title, const std::string& x_label,
                    const std::string& y_label, const std::vector<Series>& series) {
  constexpr double W = 800, H = 500, L = 80, R = 220, T = 40, B = 60;
  double x0 = kInf, x1 = -kInf, y0 = kInf, y1 = -kInf;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, s.y[i]);
      y1 = std::max(y1, s.y[i]);
    }
  if (!std::isfinite(x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;
  const double pw = W - L - R, ph = H - T - B;
  auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return T + ph - (y - y0) / (y1 - y0) * ph; };

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << escape(title) << "</text>\n";
  out << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4.0, yv = y0 + (y1 - y0) * i / 4.0;
    out << "<text x=\"" << num(px(xv)) << "\" y=\"" << num(T + ph + 18)
        << "\" text-anchor=\"middle\">" << tick(xv) << "</text>\n";
    out << "<text x=\"" << num(L - 6) << "\" y=\"" << num(py(yv) + 4) << "\" text-anchor=\"end\">"
        << tick(yv) << "</text>\n";
    out << "<line x1=\"" << L << "\" x2=\"" << L + pw << "\" y1=\"" << num(py(yv)) << "\" y2=\""
        << num(py(yv)) << "\" stroke=\"#e0e0e0\"/>\n";
  }
  if (y0 < 0 && y1 > 0)
    out << "<line x1=\"" << L << "\" x2=\"" << L + pw << "\" y1=\"" << num(py(0)) << "\" y2=\""
        << num(py(0)) << "\" stroke=\"#999\"/>\n";
  out << "<text x=\"" << L + pw / 2 << "\" y=\"" << H - 18 << "\" text-anchor=\"middle\">"
      << escape(x_label) << "</text>\n";
  out << "<text transform=\"translate(18," << T + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
      << escape(y_label) << "</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const Series& s = series[k];
    const char* color = kPalette[k % (sizeof kPalette / sizeof *kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\""
        << (s.dashed ? " stroke-dasharray=\"5,3\"" : "") << " points=\"";
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i)
      if (std::isfinite(s.x[i]) && std::isfinite(s.y[i]))
        out << num(px(s.x[i])) << ',' << num(py(s.y[i])) << ' ';
    out << "\"/>\n";
    const double ly = T + 14 + 18.0 * static_cast<double>(k);
    out << "<line x1=\"" << W - R + 12 << "\" x2=\"" << W - R + 36 << "\" y1=\"" << ly
        << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\""
        << (s.dashed ? " stroke-dasharray=\"5,3\"" : "") << "/>\n";
    out << "<text x=\"" << W - R + 42 << "\" y=\"" << ly + 4 << "\">" << escape(s.name)
        << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace oco
