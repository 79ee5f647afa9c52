#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netmix/distfit.hpp"
#include "netmix/generators.hpp"
#include "netmix/pipeline.hpp"
#include "netmix/report.hpp"
#include "netmix/version.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace netmix;

namespace {

constexpr int exit_input_error = 1;
constexpr int exit_disconnected = 2;
constexpr int exit_fit_error = 3;

struct analyze_args {
  std::string input;
  std::string out_dir;
  std::string format = "both";
  std::string ecc_algorithm = "pruned";
  bool strict_connected = false;
  std::string name;
  std::string truth;
  int threads = 1;
  bool fail_on_fit_error = false;
};

struct generate_args {
  std::string model;
  std::int64_t t = 1;
  int m = 1;
  int m0 = 2;
  double p = 0.0;
  double q = 0.0;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string name;
  bool analyze = false;
};

struct fit_args {
  std::string input;
  std::string model = "both";
};

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_ccdf_file(const fs::path& path, const std::vector<int>& degrees) {
  ccdf_table table;
  try {
    table = build_ccdf(degrees);
  } catch (const std::invalid_argument&) {
    return;  // class has no positive-degree nodes, nothing to plot
  }
  std::ostringstream body;
  write_ccdf_tsv(table, body);
  write_text_file(path, body.str());
}

bool summary_fits_incomplete(const distribution_report& rep) {
  if (!rep.pl_total || !rep.pl_p2c || !rep.w_p2p || !rep.w_total) return true;
  return rep.w_p2p->degenerate || rep.w_total->degenerate;
}

// Shared by `analyze` and `generate --analyze`.
int run_analysis(graph g, const normalization_summary& norm, const analyze_args& a) {
  analysis_options opts;
  opts.algorithm = a.ecc_algorithm == "naive" ? ecc_algorithm::naive
                                              : ecc_algorithm::pruned;
  opts.threads = a.threads;
  opts.strict_connected = a.strict_connected;

  analysis_result res = analyze_graph(std::move(g), opts);
  if (!a.truth.empty()) {
    const truth_table truth = load_truth_table(a.truth);
    res.truth_agreement = agreement(res.g, res.classification, truth);
  }

  provenance prov;
  prov.dataset_name = a.name;
  prov.input_path = a.input;
  prov.ecc_algorithm_name = a.ecc_algorithm;
  prov.normalization = norm;
  prov.tool_version = std::string(version);

  if (!a.out_dir.empty()) {
    const fs::path out_dir(a.out_dir);
    fs::create_directories(out_dir);
    if (a.format == "json" || a.format == "both")
      write_text_file(out_dir / "report.json",
                      analysis_report_json(prov, res).dump(2) + "\n");
    if (a.format == "csv" || a.format == "both")
      write_text_file(out_dir / "report.csv",
                      std::string(analysis_csv_header) + "\n" +
                          analysis_report_csv(prov, res) + "\n");
    write_ccdf_file(out_dir / "total.ccdf.tsv", res.degrees.total);
    write_ccdf_file(out_dir / "p2c.ccdf.tsv", res.degrees.p2c);
    write_ccdf_file(out_dir / "p2p.ccdf.tsv", res.degrees.p2p);
    std::ostringstream cls;
    write_classification_tsv(res.g, res.classification, cls);
    write_text_file(out_dir / "classification.tsv", cls.str());
  }

  std::cout << analysis_row_text(prov, res) << "\n";

  if (a.fail_on_fit_error && summary_fits_incomplete(res.report))
    return exit_fit_error;
  return 0;
}

int cmd_analyze(analyze_args a) {
  if (a.name.empty()) a.name = fs::path(a.input).stem().string();
  parse_result parsed = load_edge_list(a.input);
  return run_analysis(std::move(parsed.g), parsed.normalization, std::move(a));
}

int cmd_generate(const generate_args& a) {
  generation_result result;
  ordered_json config;
  if (a.model == "ba") {
    ba_config cfg;
    cfg.m0 = a.m0;
    cfg.m = a.m;
    cfg.t = a.t;
    cfg.seed = a.seed;
    result = generate_ba(cfg);
    config = ordered_json{{"m0", cfg.m0}, {"m", cfg.m}, {"t", cfg.t}, {"seed", cfg.seed}};
  } else {
    eba_config cfg;
    cfg.p = a.p;
    cfg.q = a.q;
    cfg.m = a.m;
    cfg.m0 = a.m0;
    cfg.t = a.t;
    cfg.seed = a.seed;
    result = generate_eba(cfg);
    config = ordered_json{{"p", cfg.p},   {"q", cfg.q}, {"m", cfg.m},
                          {"m0", cfg.m0}, {"t", cfg.t}, {"seed", cfg.seed}};
  }

  const std::string name = a.name.empty() ? a.model : a.name;
  const fs::path out_dir(a.out_dir);
  fs::create_directories(out_dir);
  const fs::path edge_path = out_dir / (name + ".edges");

  std::ostringstream edges;
  write_edge_list(result.g, edges);
  write_text_file(edge_path, edges.str());
  write_text_file(out_dir / (name + ".generation.json"),
                  generation_report_json(result.report, config).dump(2) + "\n");

  const generation_report& rep = result.report;
  std::cout << rep.model << ": N=" << rep.nodes << " E=" << rep.edges
            << " isolated=" << rep.isolated_nodes << " skipped=" << rep.skipped_draws
            << " -> " << edge_path.string() << "\n";

  if (a.analyze) {
    analyze_args analysis;
    analysis.input = edge_path.string();
    analysis.out_dir = a.out_dir;
    analysis.name = name;
    return run_analysis(result.g, {}, analysis);
  }
  return 0;
}

std::vector<int> read_degree_file(std::istream& in) {
  std::vector<int> degrees;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string token;
    if (!(ss >> token)) continue;  // blank line
    if (token.starts_with('#')) continue;
    std::string extra;
    if (ss >> extra) throw parse_error("expected one integer per line", line_no);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
      throw parse_error("expected a nonnegative integer, got \"" + token + "\"", line_no);
    degrees.push_back(value);
  }
  if (degrees.empty()) throw parse_error("input contains no degree samples", 0);
  return degrees;
}

int cmd_fit(const fit_args& a) {
  ccdf_table table;
  std::string kind;
  std::ifstream in(a.input);
  if (!in) throw std::runtime_error("cannot open " + a.input);
  if (a.input.ends_with(".tsv")) {
    table = read_ccdf_tsv(in);
    kind = "ccdf";
  } else {
    table = build_ccdf(read_degree_file(in));
    kind = "degrees";
  }

  ordered_json doc;
  doc["input"] = a.input;
  doc["kind"] = kind;
  doc["n_samples"] = table.n_samples > 0 ? ordered_json(table.n_samples)
                                         : ordered_json(nullptr);
  doc["points"] = static_cast<std::int64_t>(table.points.size());

  bool failed = false;
  if (a.model == "powerlaw" || a.model == "both") {
    try {
      doc["power_law"] = to_json(fit_power_law(table));
    } catch (const std::invalid_argument& e) {
      doc["power_law"] = nullptr;
      std::cerr << "power-law fit: " << e.what() << "\n";
      failed = true;
    }
  }
  if (a.model == "weibull" || a.model == "both") {
    try {
      doc["weibull"] = to_json(fit_weibull(table));
    } catch (const std::invalid_argument& e) {
      doc["weibull"] = nullptr;
      std::cerr << "weibull fit: " << e.what() << "\n";
      failed = true;
    }
  }
  std::cout << doc.dump(2) << "\n";
  return failed ? exit_fit_error : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge classification and degree-distribution analysis for undirected networks"};
  app.set_version_flag("--version", std::string(version));
  app.require_subcommand(1);

  analyze_args aa;
  auto* analyze = app.add_subcommand(
      "analyze", "Classify edges of an edge-list file and fit degree distributions");
  analyze->add_option("input", aa.input, "edge-list file, one edge per line")->required();
  analyze->add_option("--out", aa.out_dir, "directory for report and TSV outputs");
  analyze->add_option("--format", aa.format, "report format")
      ->check(CLI::IsMember({"json", "csv", "both"}));
  analyze->add_option("--ecc-algorithm", aa.ecc_algorithm, "eccentricity algorithm")
      ->check(CLI::IsMember({"naive", "pruned"}));
  analyze->add_flag("--strict-connected", aa.strict_connected,
                    "fail on disconnected input instead of using the largest component");
  analyze->add_option("--name", aa.name, "dataset name (default: input stem)");
  analyze->add_option("--truth", aa.truth, "edge-type ground truth file for agreement");
  analyze->add_option("--threads", aa.threads, "threads for naive eccentricity, 0 = all")
      ->check(CLI::NonNegativeNumber);
  analyze->add_flag("--fail-on-fit-error", aa.fail_on_fit_error,
                    "exit 3 when a summary fit is missing or degenerate");

  generate_args ga;
  auto* generate = app.add_subcommand("generate", "Generate a synthetic network");
  generate->add_option("model", ga.model, "generative model")
      ->required()
      ->check(CLI::IsMember({"ba", "eba"}));
  generate->add_option("--t", ga.t, "growth steps")->required();
  generate->add_option("--m", ga.m, "links per step");
  generate->add_option("--m0", ga.m0, "initial node count");
  generate->add_option("--p", ga.p, "link-addition probability (eba)");
  generate->add_option("--q", ga.q, "rewiring probability (eba)");
  generate->add_option("--seed", ga.seed, "random seed");
  generate->add_option("--out", ga.out_dir, "output directory");
  generate->add_option("--name", ga.name, "output name (default: model)");
  generate->add_flag("--analyze", ga.analyze, "run the analysis pipeline on the result");

  fit_args fa;
  auto* fit = app.add_subcommand(
      "fit", "Fit a degree file (one integer per line) or a k<TAB>F table");
  fit->add_option("input", fa.input, "degree list or .ccdf.tsv file")->required();
  fit->add_option("--model", fa.model, "which fit to run")
      ->check(CLI::IsMember({"powerlaw", "weibull", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_input_error;
  }

  try {
    if (*analyze) return cmd_analyze(std::move(aa));
    if (*generate) return cmd_generate(ga);
    return cmd_fit(fa);
  } catch (const disconnected_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_disconnected;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return *fit ? exit_fit_error : exit_input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  }
}
