#pragma once

#include <string>

#include <json.hpp>

#include "netmix/generators.hpp"
#include "netmix/pipeline.hpp"

namespace netmix {

/// Locale-independent "%.6g" rendering; every float that leaves the tool
/// goes through this so repeated runs produce byte-identical files.
std::string format_sig6(double v);

/// The double nearest to format_sig6(v), for numeric JSON fields.
double round_sig6(double v);

struct provenance {
  std::string dataset_name;
  std::string input_path;
  std::string ecc_algorithm_name;
  normalization_summary normalization;
  std::string tool_version;
};

nlohmann::ordered_json to_json(const power_law_fit& f);
nlohmann::ordered_json to_json(const weibull_fit& f);
nlohmann::ordered_json to_json(const agreement_report& a);

nlohmann::ordered_json analysis_report_json(const provenance& prov,
                                            const analysis_result& res);

/// Header constant and row, columns in the summary-table order.
extern const char* const analysis_csv_header;
std::string analysis_report_csv(const provenance& prov, const analysis_result& res);

/// One human-readable summary line for stdout.
std::string analysis_row_text(const provenance& prov, const analysis_result& res);

nlohmann::ordered_json generation_report_json(const generation_report& rep,
                                              const nlohmann::ordered_json& config);

}  // namespace netmix
