#include "netmix/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace netmix {

std::string format_sig6(double v) {
  std::array<char, 64> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                       std::chars_format::general, 6);
  return std::string(buf.data(), ptr);
}

double round_sig6(double v) {
  if (!std::isfinite(v)) return v;
  const std::string s = format_sig6(v);
  double out = v;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

namespace {

using nlohmann::ordered_json;

ordered_json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round_sig6(v);
}

template <typename Fit>
ordered_json fit_or_null(const std::optional<Fit>& fit) {
  if (!fit) return nullptr;
  return to_json(*fit);
}

double r_or_nan(const std::optional<power_law_fit>& fit) {
  return fit ? fit->r_percent : std::numeric_limits<double>::quiet_NaN();
}

double r_or_nan(const std::optional<weibull_fit>& fit) {
  return fit ? fit->r_percent : std::numeric_limits<double>::quiet_NaN();
}

std::string cell(double v) { return std::isfinite(v) ? format_sig6(v) : ""; }

}  // namespace

ordered_json to_json(const power_law_fit& f) {
  return ordered_json{{"ccdf_slope", num(f.ccdf_slope)},
                      {"pdf_exponent_gamma", num(f.pdf_exponent_gamma)},
                      {"intercept", num(f.intercept)},
                      {"r_percent", num(f.r_percent)},
                      {"points_used", f.points_used}};
}

ordered_json to_json(const weibull_fit& f) {
  return ordered_json{{"scale_b", num(f.scale_b)},
                      {"shape_c", num(f.shape_c)},
                      {"r_percent", num(f.r_percent)},
                      {"points_used", f.points_used},
                      {"degenerate", f.degenerate}};
}

ordered_json to_json(const agreement_report& a) {
  return ordered_json{
      {"matched", a.matched},
      {"compared", a.compared},
      {"missing_in_truth", a.missing_in_truth},
      {"unmatched_truth", a.unmatched_truth},
      {"agreement_fraction", a.compared > 0 ? ordered_json(num(a.agreement_fraction))
                                            : ordered_json(nullptr)}};
}

ordered_json analysis_report_json(const provenance& prov, const analysis_result& res) {
  const distribution_report& rep = res.report;
  ordered_json doc;
  doc["dataset"] = prov.dataset_name;
  doc["tool_version"] = prov.tool_version;
  doc["input"] = ordered_json{
      {"path", prov.input_path},
      {"self_loops_dropped", prov.normalization.self_loops_dropped},
      {"duplicates_collapsed", prov.normalization.duplicates_collapsed}};
  doc["analysis"] = ordered_json{{"ecc_algorithm", prov.ecc_algorithm_name},
                                 {"lcc_reduced", res.lcc_reduced},
                                 {"component_count", res.component_count},
                                 {"radius", res.ecc.radius},
                                 {"diameter", res.ecc.diameter},
                                 {"center_size", static_cast<std::int64_t>(res.ecc.center.size())},
                                 {"max_level", res.levels.max_level}};
  doc["graph"] = ordered_json{
      {"n", rep.n}, {"e", rep.e}, {"p2c", rep.p2c}, {"p2p", rep.p2p}};
  doc["fits"] = ordered_json{{"power_law_total", fit_or_null(rep.pl_total)},
                             {"power_law_p2c", fit_or_null(rep.pl_p2c)},
                             {"weibull_p2p", fit_or_null(rep.w_p2p)},
                             {"weibull_total", fit_or_null(rep.w_total)},
                             {"power_law_p2p", fit_or_null(rep.pl_p2p)},
                             {"weibull_p2c", fit_or_null(rep.w_p2c)}};
  doc["summary_row"] = ordered_json{{"name", prov.dataset_name},
                                    {"n", rep.n},
                                    {"e", rep.e},
                                    {"p2c", rep.p2c},
                                    {"p2p", rep.p2p},
                                    {"r_pl_total", num(r_or_nan(rep.pl_total))},
                                    {"r_pl_p2c", num(r_or_nan(rep.pl_p2c))},
                                    {"r_w_p2p", num(r_or_nan(rep.w_p2p))},
                                    {"r_w_total", num(r_or_nan(rep.w_total))}};
  if (res.truth_agreement) doc["truth_agreement"] = to_json(*res.truth_agreement);
  return doc;
}

const char* const analysis_csv_header =
    "name,n,e,p2c,p2p,r_pl_total,r_pl_p2c,r_w_p2p,r_w_total";

std::string analysis_report_csv(const provenance& prov, const analysis_result& res) {
  const distribution_report& rep = res.report;
  std::ostringstream row;
  row << prov.dataset_name << ',' << rep.n << ',' << rep.e << ',' << rep.p2c
      << ',' << rep.p2p << ',' << cell(r_or_nan(rep.pl_total)) << ','
      << cell(r_or_nan(rep.pl_p2c)) << ',' << cell(r_or_nan(rep.w_p2p)) << ','
      << cell(r_or_nan(rep.w_total));
  return row.str();
}

std::string analysis_row_text(const provenance& prov, const analysis_result& res) {
  const distribution_report& rep = res.report;
  auto show = [](double v) { return std::isfinite(v) ? format_sig6(v) : std::string("-"); };
  std::ostringstream row;
  row << prov.dataset_name << ": N=" << rep.n << " E=" << rep.e
      << " P2C=" << rep.p2c << " P2P=" << rep.p2p
      << " R_PL_total=" << show(r_or_nan(rep.pl_total))
      << " R_PL_p2c=" << show(r_or_nan(rep.pl_p2c))
      << " R_W_p2p=" << show(r_or_nan(rep.w_p2p))
      << " R_W_total=" << show(r_or_nan(rep.w_total));
  return row.str();
}

ordered_json generation_report_json(const generation_report& rep,
                                    const ordered_json& config) {
  ordered_json doc;
  doc["model"] = rep.model;
  doc["seed"] = rep.seed;
  doc["rng_algorithm"] = rep.rng_algorithm;
  doc["config"] = config;
  doc["result"] = ordered_json{{"nodes", rep.nodes},
                               {"edges", rep.edges},
                               {"isolated_nodes", rep.isolated_nodes},
                               {"skipped_draws", rep.skipped_draws},
                               {"link_steps", rep.link_steps},
                               {"rewire_steps", rep.rewire_steps},
                               {"node_steps", rep.node_steps},
                               {"rewired_edges", rep.rewired_edges}};
  return doc;
}

}  // namespace netmix
