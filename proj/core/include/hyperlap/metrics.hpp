#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/line_graph.hpp"

namespace hyperlap {

// All metrics ignore edge weights; they are connectivity statistics.
// threads = 0 means one per hardware core. Results are bitwise independent
// of the thread count (per-item values land in fixed slots, reduced in
// index order).

int resolve_threads(int requested);

// Mean of the local clustering coefficients; nodes with degree < 2
// contribute 0.
double clustering_coefficient(const LineGraph& g, int threads = 1);

// Expected clustering of an Erdos-Renyi graph with the same size: the edge
// density 2E / (N(N-1)).
double er_clustering_baseline(std::size_t n_nodes, std::size_t n_edges);

// Pearson correlation of the degrees at the two ends of an edge, over both
// orientations. nullopt when the endpoint-degree variance is zero (regular
// graphs) — never a silent NaN. Exact integer sums, so e.g. stars give
// exactly -1.
std::optional<double> assortativity(const LineGraph& g);

enum class PathMode { exact, sampled };

struct PathOptions {
  PathMode mode = PathMode::exact;
  std::size_t sources = 0;    // sampled mode: number of BFS sources
  std::uint64_t rng_seed = 0; // sampled mode: source selection seed
};

// Mean shortest-path hop count over ordered pairs inside the largest
// connected component. Exact mode is one BFS per component node; sampled
// mode draws the sources uniformly without replacement.
double average_path_length(const LineGraph& g, const PathOptions& options = {},
                           int threads = 1);

struct PowerLawFit {
  double alpha = 0.0;  // exponent (log-log slope)
  double beta = 0.0;   // amplitude: f(k) = beta * k^alpha
};

// Least squares on (log k, log p) over the normalised histogram, one point
// per nonzero bin. Bins with k <= 0 or weight <= 0 are dropped; fewer than
// 3 distinct surviving k values is an error ("insufficient support").
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> histogram);
PowerLawFit fit_power_law(const std::map<int, std::int64_t>& histogram);

std::map<int, std::int64_t> degree_histogram(const LineGraph& g);

// CSV rows "k,count,probability", ascending k, with a header line.
void write_histogram_csv(const std::map<int, std::int64_t>& hist, std::ostream& out);
// Reads back (k, count) pairs; header and comment lines are skipped and
// extra columns ignored, so the writer's output round-trips.
std::vector<std::pair<double, double>> read_histogram_csv(std::istream& in);

struct MetricsReport {
  std::size_t n_nodes = 0;
  std::size_t n_edges = 0;
  std::optional<PowerLawFit> degree_fit;  // line-graph degree distribution
  double clustering = 0.0;
  double er_baseline = 0.0;
  std::optional<double> assortativity;
  double avg_path_length = 0.0;
  PathOptions path_sampling;
  double largest_component_fraction = 0.0;
  // Community size (hypergraph node degree) fit, when a hypergraph is given.
  bool has_hypergraph = false;
  std::optional<PowerLawFit> community_size_fit;

  nlohmann::json to_json() const;
};

// Assembles the whole suite. Distribution fits that lack support are
// reported as null rather than failing the report.
MetricsReport full_report(const LineGraph& g, const Hypergraph* h = nullptr,
                          const PathOptions& options = {}, int threads = 1);

}  // namespace hyperlap
