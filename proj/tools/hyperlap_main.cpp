// Command line front end: generate | ingest | linegraph | spectrum | metrics | fit.
// Exit codes: 0 ok, 1 pipeline error, 2 usage error.

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "hyperlap/generator.hpp"
#include "hyperlap/membership_io.hpp"
#include "hyperlap/metrics.hpp"
#include "hyperlap/spectral.hpp"

namespace {

using nlohmann::json;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

void write_output(const std::optional<std::string>& path, const std::string& content) {
  if (!path) {
    std::cout << content;
    return;
  }
  std::ofstream out(*path);
  if (!out) throw std::runtime_error("cannot write " + *path);
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + *path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

hyperlap::PathOptions parse_path_options(const std::string& spec) {
  if (spec == "exact") return {};
  if (spec.rfind("sample:", 0) == 0) {
    std::istringstream rest(spec.substr(7));
    std::size_t count = 0;
    std::uint64_t seed = 0;
    char sep = 0;
    if (rest >> count >> sep >> seed && sep == ':' && count > 0 && rest.eof()) {
      return {hyperlap::PathMode::sampled, count, seed};
    }
  }
  throw CLI::ValidationError("--paths", "expected 'exact' or 'sample:COUNT:SEED'");
}

json hypergraph_counts(const hyperlap::Hypergraph& h) {
  return {{"n_nodes", h.node_count()},
          {"n_links", h.link_count()},
          {"memberships", h.membership_count()},
          {"max_depth", h.max_depth()},
          {"is_linear", h.is_linear()}};
}

struct GenerateArgs {
  std::uint64_t steps = 0;
  std::uint64_t rng_seed = 1;
  int max_retries = 100;
  std::string seed_file, config_file, out;
};

void run_generate(const CLI::App& cmd, const GenerateArgs& args) {
  hyperlap::GrowthConfig config;
  if (cmd.count("--config") > 0) {
    auto in = open_input(args.config_file);
    config = hyperlap::load_growth_config(json::parse(in));
  }
  if (cmd.count("--seed-file") > 0) {
    config.seed = hyperlap::parse_memberships_file(args.seed_file);
  }
  if (cmd.count("--steps") > 0) config.steps = args.steps;
  if (cmd.count("--rng-seed") > 0) config.rng_seed = args.rng_seed;
  if (cmd.count("--max-retries") > 0) config.max_retries = args.max_retries;

  hyperlap::Hypergraph h = hyperlap::grow(config);
  hyperlap::write_memberships_file(h, args.out);

  json manifest = {{"config", hyperlap::growth_config_to_json(config)},
                   {"result", hypergraph_counts(h)}};
  write_output(args.out + ".manifest.json", dump(manifest));
}

void run_ingest(const std::string& in_path, const std::optional<std::string>& out_path) {
  hyperlap::ParseSummary summary;
  hyperlap::Hypergraph h = hyperlap::parse_memberships_file(in_path, &summary);
  if (summary.skipped_lines > 0) {
    std::cerr << "warning: skipped " << summary.skipped_lines << " malformed line"
              << (summary.skipped_lines == 1 ? "" : "s") << " in " << in_path << '\n';
  }
  if (out_path) hyperlap::write_memberships_file(h, *out_path);

  json report = hypergraph_counts(h);
  report["valid_lines"] = summary.valid_lines;
  report["skipped_lines"] = summary.skipped_lines;
  std::cout << dump(report);
}

void run_linegraph(const std::string& in_path, const std::optional<std::string>& out_path) {
  hyperlap::Hypergraph h = hyperlap::parse_memberships_file(in_path);
  hyperlap::LineGraph g = hyperlap::project_social_graph(h);
  std::ostringstream body;
  g.write_edge_list(body);
  write_output(out_path, body.str());
}

void run_spectrum(const std::string& in_path, double tol,
                  const std::optional<std::string>& out_path) {
  hyperlap::Hypergraph h = hyperlap::parse_memberships_file(in_path);
  write_output(out_path, dump(hyperlap::verify_bound(h, tol).to_json()));
}

struct MetricsArgs {
  std::string in, paths = "exact";
  std::string hypergraph_file;
  std::optional<std::string> out, degree_hist, size_hist;
};

void run_metrics(const CLI::App& cmd, const MetricsArgs& args, int threads) {
  // Flag validation first, before any file is touched.
  hyperlap::PathOptions paths = parse_path_options(args.paths);
  bool have_h = cmd.count("--hypergraph") > 0;
  if (args.size_hist && !have_h) {
    throw CLI::ValidationError("--size-hist", "requires --hypergraph");
  }

  auto in = open_input(args.in);
  hyperlap::LineGraph g = hyperlap::LineGraph::read_edge_list(in);

  hyperlap::Hypergraph h;
  if (have_h) h = hyperlap::parse_memberships_file(args.hypergraph_file);
  hyperlap::MetricsReport report =
      hyperlap::full_report(g, have_h ? &h : nullptr, paths, threads);
  write_output(args.out, dump(report.to_json()));

  if (args.degree_hist) {
    std::ostringstream csv;
    hyperlap::write_histogram_csv(hyperlap::degree_histogram(g), csv);
    write_output(args.degree_hist, csv.str());
  }
  if (args.size_hist) {
    std::ostringstream csv;
    hyperlap::write_histogram_csv(
        hyperlap::degree_histogram(h, hyperlap::DegreeSide::node), csv);
    write_output(args.size_hist, csv.str());
  }
}

void run_fit(const std::string& in_path, const std::optional<std::string>& out_path) {
  auto in = open_input(in_path);
  auto rows = hyperlap::read_histogram_csv(in);
  hyperlap::PowerLawFit fit = hyperlap::fit_power_law(rows);
  std::cout << dump(json{{"alpha", fit.alpha}, {"beta", fit.beta}});

  if (out_path) {
    double total = 0.0;
    for (const auto& [k, w] : rows) {
      if (k > 0 && w > 0) total += w;
    }
    std::ostringstream csv;
    csv << "k,probability,fitted\n";
    csv.precision(std::numeric_limits<double>::max_digits10);
    for (const auto& [k, w] : rows) {
      if (k <= 0 || w <= 0) continue;
      csv << k << ',' << (w / total) << ',' << fit.beta * std::pow(k, fit.alpha) << '\n';
    }
    write_output(out_path, csv.str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"overlapping-community hypergraphs: growth, projection, spectra, metrics"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "worker threads, 0 = all cores")
      ->envname("HYPERLAP_THREADS")
      ->check(CLI::NonNegativeNumber);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "grow a hypergraph and write it as membership CSV");
  generate->add_option("--steps", gen.steps, "growth steps");
  generate->add_option("--rng-seed", gen.rng_seed, "generator seed");
  generate->add_option("--max-retries", gen.max_retries, "linearity resampling cap per step");
  generate->add_option("--seed-file", gen.seed_file, "membership CSV with the starting hypergraph")
      ->check(CLI::ExistingFile);
  generate->add_option("--config", gen.config_file, "JSON growth config")->check(CLI::ExistingFile);
  generate->add_option("--out", gen.out, "output membership CSV (manifest written alongside)")
      ->required();

  std::string ingest_in;
  std::optional<std::string> ingest_out;
  CLI::App* ingest = app.add_subcommand("ingest", "parse membership CSV, report counts, optionally re-export canonically");
  ingest->add_option("--in", ingest_in, "membership CSV (.gz ok)")->required()->check(CLI::ExistingFile);
  ingest->add_option("--out", ingest_out, "canonical membership CSV to write");

  std::string lg_in;
  std::optional<std::string> lg_out;
  CLI::App* linegraph = app.add_subcommand("linegraph", "project the hyperlink graph to an edge list");
  linegraph->add_option("--in", lg_in, "membership CSV (.gz ok)")->required()->check(CLI::ExistingFile);
  linegraph->add_option("--out", lg_out, "edge list path (stdout when omitted)");

  std::string sp_in;
  double sp_tol = 1e-9;
  std::optional<std::string> sp_out;
  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalue bound report for a hypergraph's line graph");
  spectrum->add_option("--in", sp_in, "membership CSV (.gz ok)")->required()->check(CLI::ExistingFile);
  spectrum->add_option("--tol", sp_tol, "bound tolerance")->check(CLI::PositiveNumber);
  spectrum->add_option("--out", sp_out, "report path (stdout when omitted)");

  MetricsArgs met;
  CLI::App* metrics = app.add_subcommand("metrics", "graph metric report from an edge list");
  metrics->add_option("--in", met.in, "edge list file")->required()->check(CLI::ExistingFile);
  metrics->add_option("--hypergraph", met.hypergraph_file,
                      "membership CSV for the community-size distribution")
      ->check(CLI::ExistingFile);
  metrics->add_option("--paths", met.paths, "'exact' or 'sample:COUNT:SEED'");
  metrics->add_option("--out", met.out, "report path (stdout when omitted)");
  metrics->add_option("--degree-hist", met.degree_hist, "write degree histogram CSV here");
  metrics->add_option("--size-hist", met.size_hist, "write community size histogram CSV here");

  std::string fit_in;
  std::optional<std::string> fit_out;
  CLI::App* fit = app.add_subcommand("fit", "power-law fit of a histogram CSV");
  fit->add_option("--in", fit_in, "histogram CSV (k,count)")->required()->check(CLI::ExistingFile);
  fit->add_option("--out", fit_out, "fitted-curve CSV path");

  try {
    app.parse(argc, argv);
    if (generate->parsed()) run_generate(*generate, gen);
    if (ingest->parsed()) run_ingest(ingest_in, ingest_out);
    if (linegraph->parsed()) run_linegraph(lg_in, lg_out);
    if (spectrum->parsed()) run_spectrum(sp_in, sp_tol, sp_out);
    if (metrics->parsed()) run_metrics(*metrics, met, threads);
    if (fit->parsed()) run_fit(fit_in, fit_out);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
