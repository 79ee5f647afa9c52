#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "netmix/classifier.hpp"
#include "netmix/graph.hpp"

namespace netmix {

struct ccdf_point {
  int k;     // degree
  double f;  // fraction of samples with degree >= k
};

struct ccdf_table {
  std::vector<ccdf_point> points;  // one per distinct degree >= 1, k ascending
  std::int64_t n_samples = 0;      // samples with degree >= 1
};

/// Complementary cumulative distribution of a degree multiset. Zero-degree
/// samples are excluded. Throws std::invalid_argument when no sample has
/// degree >= 1.
ccdf_table build_ccdf(std::span<const int> degrees);

/// Sample Pearson correlation. Throws std::invalid_argument on mismatched
/// or short inputs and on zero variance.
double pearson(std::span<const double> xs, std::span<const double> ys);

struct power_law_fit {
  double ccdf_slope = 0.0;           // negative for heavy-tailed data
  double pdf_exponent_gamma = 0.0;   // -ccdf_slope + 1
  double intercept = 0.0;            // in log10 coordinates
  double r_percent = 0.0;            // 100 * |pearson(log10 k, log10 F)|
  int points_used = 0;
};

/// Unweighted least squares of log10 F on log10 k over all table points.
/// Requires >= 3 points.
power_law_fit fit_power_law(const ccdf_table& ccdf);

struct weibull_fit {
  double scale_b = 0.0;   // model F(k) = exp(-(k/b)^c)
  double shape_c = 0.0;
  double r_percent = 0.0;  // 100 * |pearson(ln k, ln(-ln F))|
  int points_used = 0;
  bool degenerate = false;  // fitted shape <= 0; scale_b is NaN then
};

/// Linear regression of ln(-ln F) on ln k. Points with F = 1 are excluded
/// (the transform is undefined there); requires >= 3 admissible points.
weibull_fit fit_weibull(const ccdf_table& ccdf);

/// TSV with header "k\tF", plot-ready.
void write_ccdf_tsv(const ccdf_table& ccdf, std::ostream& out);
ccdf_table read_ccdf_tsv(std::istream& in);

/// One row of the per-network summary: sizes, class counts, and the four
/// goodness-of-fit columns, plus the two cross fits kept as diagnostics.
/// A sub-fit whose preconditions fail yields an empty cell, not an error.
struct distribution_report {
  std::int64_t n = 0;
  std::int64_t e = 0;
  std::int64_t p2c = 0;
  std::int64_t p2p = 0;
  std::optional<power_law_fit> pl_total, pl_p2c;
  std::optional<weibull_fit> w_p2p, w_total;
  std::optional<power_law_fit> pl_p2p;  // diagnostic
  std::optional<weibull_fit> w_p2c;     // diagnostic
};

distribution_report fit_report(const graph& g, const edge_classification& c);

}  // namespace netmix
