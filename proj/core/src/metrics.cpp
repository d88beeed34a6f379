#include "hyperlap/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hyperlap/generator.hpp"  // uniform_below

namespace hyperlap {

namespace {

// Run fn(i) for i in [0, n) across `threads` workers. Each item writes its
// own slot, so the split cannot affect results.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::size_t workers = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

// Component label per vertex; returns (labels, size per component).
std::pair<std::vector<std::uint32_t>, std::vector<std::size_t>> components(
    const LineGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> label(n, std::numeric_limits<std::uint32_t>::max());
  std::vector<std::size_t> sizes;
  std::vector<LinkId> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != std::numeric_limits<std::uint32_t>::max()) continue;
    std::uint32_t id = static_cast<std::uint32_t>(sizes.size());
    sizes.push_back(0);
    queue.clear();
    queue.push_back(static_cast<LinkId>(s));
    label[s] = id;
    while (!queue.empty()) {
      LinkId v = queue.back();
      queue.pop_back();
      ++sizes[id];
      for (LinkId u : g.neighbors(v)) {
        if (label[u] == std::numeric_limits<std::uint32_t>::max()) {
          label[u] = id;
          queue.push_back(u);
        }
      }
    }
  }
  return {std::move(label), std::move(sizes)};
}

// Sum of hop distances from src to every vertex of its component.
std::int64_t bfs_distance_sum(const LineGraph& g, LinkId src, std::vector<int>& dist) {
  std::fill(dist.begin(), dist.end(), -1);
  std::queue<LinkId> q;
  q.push(src);
  dist[src] = 0;
  std::int64_t sum = 0;
  while (!q.empty()) {
    LinkId v = q.front();
    q.pop();
    sum += dist[v];
    for (LinkId u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
    }
  }
  return sum;
}

}  // namespace

int resolve_threads(int requested) {
  if (requested < 0) throw std::invalid_argument("thread count must be non-negative");
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

double clustering_coefficient(const LineGraph& g, int threads) {
  const std::size_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("empty graph");

  std::vector<double> local(n, 0.0);
  parallel_for(n, resolve_threads(threads), [&](std::size_t vi) {
    LinkId v = static_cast<LinkId>(vi);
    auto nbr = g.neighbors(v);
    std::size_t d = nbr.size();
    if (d < 2) return;
    // Neighbor lists are sorted: count adjacent neighbor pairs by merging.
    std::int64_t wedges_closed = 0;
    for (LinkId u : nbr) {
      auto nu = g.neighbors(u);
      std::size_t i = 0, j = 0;
      while (i < nbr.size() && j < nu.size()) {
        if (nbr[i] < nu[j]) ++i;
        else if (nu[j] < nbr[i]) ++j;
        else { ++wedges_closed; ++i; ++j; }
      }
    }
    // Each closed pair {u,w} in N(v) was seen from both u and w.
    local[vi] = static_cast<double>(wedges_closed) / (static_cast<double>(d) * (d - 1));
  });

  double sum = 0.0;
  for (double c : local) sum += c;
  return sum / static_cast<double>(n);
}

double er_clustering_baseline(std::size_t n_nodes, std::size_t n_edges) {
  if (n_nodes < 2) return 0.0;
  return 2.0 * static_cast<double>(n_edges) /
         (static_cast<double>(n_nodes) * static_cast<double>(n_nodes - 1));
}

std::optional<double> assortativity(const LineGraph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("graph has no edges");

  // Pearson correlation over the 2E directed endpoint pairs, in exact
  // integer arithmetic; x and y are exchangeable so one set of moments does.
  using Wide = __int128;
  Wide s1 = 0, s2 = 0, sxy = 0;
  for (const auto& e : g.edges()) {
    Wide du = g.degree(e.u), dv = g.degree(e.v);
    s1 += du + dv;
    s2 += du * du + dv * dv;
    sxy += 2 * du * dv;
  }
  Wide m = 2 * static_cast<Wide>(g.edge_count());
  Wide num = m * sxy - s1 * s1;
  Wide den = m * s2 - s1 * s1;
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

double average_path_length(const LineGraph& g, const PathOptions& options, int threads) {
  const std::size_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("empty graph");

  auto [label, sizes] = components(g);
  std::uint32_t big = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<LinkId> member;
  member.reserve(sizes[big]);
  for (std::size_t v = 0; v < n; ++v) {
    if (label[v] == big) member.push_back(static_cast<LinkId>(v));
  }
  if (member.size() < 2) return 0.0;

  std::vector<LinkId> sources;
  if (options.mode == PathMode::exact || options.sources >= member.size()) {
    sources = member;
  } else {
    if (options.sources == 0) throw std::invalid_argument("sample size must be positive");
    // Partial Fisher-Yates over a copy of the member list.
    std::mt19937_64 rng(options.rng_seed);
    std::vector<LinkId> pool = member;
    for (std::size_t i = 0; i < options.sources; ++i) {
      std::size_t j = i + uniform_below(pool.size() - i, rng);
      std::swap(pool[i], pool[j]);
    }
    pool.resize(options.sources);
    sources = std::move(pool);
  }

  std::vector<std::int64_t> sums(sources.size(), 0);
  int workers = resolve_threads(threads);
  {
    // One distance buffer per worker, reused across its sources.
    std::vector<std::vector<int>> dist(workers, std::vector<int>(n));
    std::atomic<std::size_t> next{0};
    auto run = [&](int w) {
      for (std::size_t i = next.fetch_add(1); i < sources.size(); i = next.fetch_add(1)) {
        sums[i] = bfs_distance_sum(g, sources[i], dist[w]);
      }
    };
    if (workers <= 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
      for (auto& t : pool) t.join();
    }
  }

  std::int64_t total = 0;
  for (std::int64_t s : sums) total += s;
  double pairs = static_cast<double>(sources.size()) *
                 static_cast<double>(member.size() - 1);
  return static_cast<double>(total) / pairs;
}

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> histogram) {
  std::vector<std::pair<double, double>> pts;
  double total = 0.0;
  for (const auto& [k, w] : histogram) {
    if (k > 0.0 && w > 0.0) {
      pts.emplace_back(k, w);
      total += w;
    }
  }
  std::sort(pts.begin(), pts.end());
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i == 0 || pts[i].first != pts[i - 1].first) ++distinct;
  }
  if (distinct < 3) throw std::invalid_argument("insufficient support");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [k, w] : pts) {
    double x = std::log(k);
    double y = std::log(w / total);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double m = static_cast<double>(pts.size());
  double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  double intercept = (sy - slope * sx) / m;
  return {slope, std::exp(intercept)};
}

PowerLawFit fit_power_law(const std::map<int, std::int64_t>& histogram) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(histogram.size());
  for (const auto& [k, c] : histogram) {
    pts.emplace_back(static_cast<double>(k), static_cast<double>(c));
  }
  return fit_power_law(pts);
}

std::map<int, std::int64_t> degree_histogram(const LineGraph& g) {
  std::map<int, std::int64_t> hist;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    ++hist[static_cast<int>(g.degree(static_cast<LinkId>(v)))];
  }
  return hist;
}

void write_histogram_csv(const std::map<int, std::int64_t>& hist, std::ostream& out) {
  std::int64_t total = 0;
  for (const auto& [k, c] : hist) total += c;
  out << "k,count,probability\n";
  out.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& [k, c] : hist) {
    out << k << ',' << c << ','
        << (total > 0 ? static_cast<double>(c) / static_cast<double>(total) : 0.0)
        << '\n';
  }
}

std::vector<std::pair<double, double>> read_histogram_csv(std::istream& in) {
  std::vector<std::pair<double, double>> rows;
  std::string line;
  std::size_t lineno = 0;
  bool header_allowed = true;  // first unparseable line is taken as the header
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double k, c;
    if (ls >> k >> c) {
      rows.emplace_back(k, c);
      header_allowed = false;
    } else if (header_allowed) {
      header_allowed = false;
    } else {
      throw std::invalid_argument("bad histogram row at line " + std::to_string(lineno));
    }
  }
  if (rows.empty()) throw std::invalid_argument("histogram file has no data rows");
  return rows;
}

MetricsReport full_report(const LineGraph& g, const Hypergraph* h,
                          const PathOptions& options, int threads) {
  MetricsReport rep;
  rep.n_nodes = g.node_count();
  rep.n_edges = g.edge_count();
  rep.clustering = clustering_coefficient(g, threads);
  rep.er_baseline = er_clustering_baseline(rep.n_nodes, rep.n_edges);
  if (rep.n_edges > 0) rep.assortativity = assortativity(g);
  rep.avg_path_length = average_path_length(g, options, threads);
  rep.path_sampling = options;

  auto [label, sizes] = components(g);
  (void)label;
  std::size_t biggest = *std::max_element(sizes.begin(), sizes.end());
  rep.largest_component_fraction =
      static_cast<double>(biggest) / static_cast<double>(rep.n_nodes);

  try {
    rep.degree_fit = fit_power_law(degree_histogram(g));
  } catch (const std::invalid_argument&) {
    rep.degree_fit = std::nullopt;
  }
  if (h != nullptr) {
    rep.has_hypergraph = true;
    try {
      rep.community_size_fit = fit_power_law(degree_histogram(*h, DegreeSide::node));
    } catch (const std::invalid_argument&) {
      rep.community_size_fit = std::nullopt;
    }
  }
  return rep;
}

nlohmann::json MetricsReport::to_json() const {
  nlohmann::json j;
  j["n_nodes"] = n_nodes;
  j["n_edges"] = n_edges;
  j["alpha"] = degree_fit ? nlohmann::json(degree_fit->alpha) : nlohmann::json(nullptr);
  j["beta"] = degree_fit ? nlohmann::json(degree_fit->beta) : nlohmann::json(nullptr);
  j["clustering"] = clustering;
  j["er_baseline"] = er_baseline;
  j["assortativity"] = assortativity ? nlohmann::json(*assortativity) : nlohmann::json(nullptr);
  j["avg_path_length"] = avg_path_length;
  if (path_sampling.mode == PathMode::exact) {
    j["path_sampling"] = "exact";
  } else {
    j["path_sampling"] = "sampled";
    j["path_sources"] = path_sampling.sources;
    j["path_rng_seed"] = path_sampling.rng_seed;
  }
  j["largest_component_fraction"] = largest_component_fraction;
  if (has_hypergraph) {
    j["community_size_alpha"] =
        community_size_fit ? nlohmann::json(community_size_fit->alpha) : nlohmann::json(nullptr);
    j["community_size_beta"] =
        community_size_fit ? nlohmann::json(community_size_fit->beta) : nlohmann::json(nullptr);
  }
  return j;
}

}  // namespace hyperlap
