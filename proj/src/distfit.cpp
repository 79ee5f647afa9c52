#include "netmix/distfit.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "netmix/report.hpp"

namespace netmix {

ccdf_table build_ccdf(std::span<const int> degrees) {
  std::vector<int> positive;
  positive.reserve(degrees.size());
  for (int d : degrees) {
    if (d < 0) throw std::invalid_argument("negative degree");
    if (d >= 1) positive.push_back(d);
  }
  if (positive.empty())
    throw std::invalid_argument("no samples with degree >= 1");
  std::sort(positive.begin(), positive.end());

  ccdf_table table;
  table.n_samples = static_cast<std::int64_t>(positive.size());
  const double n = static_cast<double>(table.n_samples);
  // Walking the sorted degrees, the samples with degree >= k are exactly
  // those at or after the first occurrence of k.
  for (std::size_t i = 0; i < positive.size();) {
    const int k = positive[i];
    table.points.push_back({k, static_cast<double>(positive.size() - i) / n});
    while (i < positive.size() && positive[i] == k) ++i;
  }
  return table;
}

namespace {

struct moments {
  double mean_x = 0, mean_y = 0;
  double sxx = 0, syy = 0, sxy = 0;  // centered co-moments
  std::size_t n = 0;
};

// Single-pass co-moment accumulation (Welford style).
moments accumulate(std::span<const double> xs, std::span<const double> ys) {
  moments m;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ++m.n;
    const double dx = xs[i] - m.mean_x;
    const double dy = ys[i] - m.mean_y;
    m.mean_x += dx / static_cast<double>(m.n);
    m.mean_y += dy / static_cast<double>(m.n);
    m.sxx += dx * (xs[i] - m.mean_x);
    m.syy += dy * (ys[i] - m.mean_y);
    m.sxy += dx * (ys[i] - m.mean_y);
  }
  return m;
}

struct line_fit {
  double slope = 0, intercept = 0, r = 0;
};

line_fit fit_line(std::span<const double> xs, std::span<const double> ys) {
  const moments m = accumulate(xs, ys);
  if (m.sxx <= 0.0) throw std::invalid_argument("zero variance in x");
  if (m.syy <= 0.0) throw std::invalid_argument("zero variance in y");
  line_fit fit;
  fit.slope = m.sxy / m.sxx;
  fit.intercept = m.mean_y - fit.slope * m.mean_x;
  fit.r = std::clamp(m.sxy / std::sqrt(m.sxx * m.syy), -1.0, 1.0);
  return fit;
}

// Fits are set functions of the points; sort by k so permuted tables give
// bit-identical results.
std::vector<ccdf_point> sorted_points(const ccdf_table& ccdf) {
  std::vector<ccdf_point> pts(ccdf.points.begin(), ccdf.points.end());
  std::sort(pts.begin(), pts.end(),
            [](const ccdf_point& a, const ccdf_point& b) { return a.k < b.k; });
  return pts;
}

}  // namespace

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("length mismatch");
  if (xs.size() < 2) throw std::invalid_argument("need at least two samples");
  const moments m = accumulate(xs, ys);
  if (m.sxx <= 0.0 || m.syy <= 0.0) throw std::invalid_argument("zero variance");
  return std::clamp(m.sxy / std::sqrt(m.sxx * m.syy), -1.0, 1.0);
}

power_law_fit fit_power_law(const ccdf_table& ccdf) {
  std::vector<double> xs, ys;
  for (const auto& p : sorted_points(ccdf)) {
    if (p.k < 1 || p.f <= 0.0) continue;
    xs.push_back(std::log10(static_cast<double>(p.k)));
    ys.push_back(std::log10(p.f));
  }
  if (xs.size() < 3)
    throw std::invalid_argument("power-law fit needs >= 3 admissible points");

  const line_fit line = fit_line(xs, ys);
  power_law_fit fit;
  fit.ccdf_slope = line.slope;
  fit.pdf_exponent_gamma = -line.slope + 1.0;
  fit.intercept = line.intercept;
  fit.r_percent = 100.0 * std::abs(line.r);
  fit.points_used = static_cast<int>(xs.size());
  return fit;
}

weibull_fit fit_weibull(const ccdf_table& ccdf) {
  std::vector<double> xs, ys;
  for (const auto& p : sorted_points(ccdf)) {
    if (p.k < 1 || p.f <= 0.0 || p.f >= 1.0) continue;
    xs.push_back(std::log(static_cast<double>(p.k)));
    ys.push_back(std::log(-std::log(p.f)));
  }
  if (xs.size() < 3)
    throw std::invalid_argument("weibull fit needs >= 3 admissible points");

  const line_fit line = fit_line(xs, ys);
  weibull_fit fit;
  fit.shape_c = line.slope;
  fit.r_percent = 100.0 * std::abs(line.r);
  fit.points_used = static_cast<int>(xs.size());
  if (line.slope <= 0.0) {
    fit.degenerate = true;
    fit.scale_b = std::numeric_limits<double>::quiet_NaN();
  } else {
    fit.scale_b = std::exp(-line.intercept / line.slope);
  }
  return fit;
}

void write_ccdf_tsv(const ccdf_table& ccdf, std::ostream& out) {
  out << "k\tF\n";
  for (const auto& p : ccdf.points)
    out << p.k << '\t' << format_sig6(p.f) << '\n';
}

ccdf_table read_ccdf_tsv(std::istream& in) {
  ccdf_table table;
  std::string line;
  std::int64_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.starts_with('#')) continue;
    if (!saw_header) {
      saw_header = true;
      if (line == "k\tF" || line == "k F") continue;  // header optional
    }
    std::istringstream ss(line);
    long long k = 0;
    double f = 0;
    std::string extra;
    if (!(ss >> k >> f) || (ss >> extra))
      throw parse_error("expected \"k<TAB>F\", got: \"" + line + "\"", line_no);
    if (k < 1) throw parse_error("degree must be >= 1", line_no);
    if (!(f > 0.0) || f > 1.0) throw parse_error("F must be in (0, 1]", line_no);
    if (!table.points.empty() && k <= table.points.back().k)
      throw parse_error("degrees must be strictly increasing", line_no);
    if (!table.points.empty() && f >= table.points.back().f)
      throw parse_error("F must be strictly decreasing", line_no);
    table.points.push_back({static_cast<int>(k), f});
  }
  if (table.points.empty()) throw parse_error("input contains no CCDF points", 0);
  return table;
}

distribution_report fit_report(const graph& g, const edge_classification& c) {
  const degree_split degrees = split_degree_sequences(g, c);

  distribution_report report;
  report.n = g.node_count();
  report.e = g.edge_count();
  report.p2c = c.p2c_count;
  report.p2p = c.p2p_count;

  auto try_pl = [](std::span<const int> degs) -> std::optional<power_law_fit> {
    try {
      return fit_power_law(build_ccdf(degs));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  };
  auto try_w = [](std::span<const int> degs) -> std::optional<weibull_fit> {
    try {
      return fit_weibull(build_ccdf(degs));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  };

  report.pl_total = try_pl(degrees.total);
  report.pl_p2c = try_pl(degrees.p2c);
  report.w_p2p = try_w(degrees.p2p);
  report.w_total = try_w(degrees.total);
  report.pl_p2p = try_pl(degrees.p2p);
  report.w_p2c = try_w(degrees.p2c);
  return report;
}

}  // namespace netmix
