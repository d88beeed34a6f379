#include "hyperlap/line_graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace hyperlap {

LineGraph LineGraph::from_hypergraph(const Hypergraph& h) {
  // Each community contributes all pairs of its incident hyperlinks; the
  // accumulated pair count is the number of shared nodes.
  std::unordered_map<std::uint64_t, int> weight;
  weight.reserve(h.membership_count() * 2);
  for (NodeId n = 0; n < h.node_count(); ++n) {
    auto links = h.incident_links(n);
    for (std::size_t i = 0; i < links.size(); ++i) {
      for (std::size_t j = i + 1; j < links.size(); ++j) {
        ++weight[(static_cast<std::uint64_t>(links[i]) << 32) | links[j]];
      }
    }
  }

  std::vector<WeightedEdge> edges;
  edges.reserve(weight.size());
  for (const auto& [key, w] : weight) {
    edges.push_back({static_cast<LinkId>(key >> 32),
                     static_cast<LinkId>(key & 0xffffffffu), w});
  }
  return from_edges(h.link_count(), std::move(edges));
}

LineGraph LineGraph::from_edges(std::size_t node_count, std::vector<WeightedEdge> edges) {
  for (auto& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("self loop in edge list");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= node_count) throw std::out_of_range("edge endpoint out of range");
    if (e.weight < 1) throw std::invalid_argument("edge weight must be positive");
  }
  std::sort(edges.begin(), edges.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return a.u != b.u ? a.u < b.u : a.v < b.v;
            });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v) {
      throw std::invalid_argument("duplicate edge in edge list");
    }
  }

  LineGraph g;
  g.node_count_ = node_count;
  g.edges_ = std::move(edges);
  g.weighted_ = std::any_of(g.edges_.begin(), g.edges_.end(),
                            [](const WeightedEdge& e) { return e.weight > 1; });
  g.build_adjacency();
  return g;
}

void LineGraph::build_adjacency() {
  std::vector<std::size_t> counts(node_count_, 0);
  for (const auto& e : edges_) {
    ++counts[e.u];
    ++counts[e.v];
  }
  adj_ptr_.assign(node_count_ + 1, 0);
  for (std::size_t v = 0; v < node_count_; ++v) adj_ptr_[v + 1] = adj_ptr_[v] + counts[v];
  adj_.resize(2 * edges_.size());
  adj_weight_.resize(2 * edges_.size());

  std::vector<std::size_t> cursor(adj_ptr_.begin(), adj_ptr_.end() - 1);
  // Edges are sorted by (u, v), so both passes fill each list ascending.
  for (const auto& e : edges_) {
    adj_[cursor[e.u]] = e.v;
    adj_weight_[cursor[e.u]++] = e.weight;
  }
  for (const auto& e : edges_) {
    adj_[cursor[e.v]] = e.u;
    adj_weight_[cursor[e.v]++] = e.weight;
  }
  for (std::size_t v = 0; v < node_count_; ++v) {
    // Second pass appended smaller ids after larger ones; restore order.
    std::size_t lo = adj_ptr_[v], hi = adj_ptr_[v + 1];
    std::size_t split = lo;
    while (split < hi && adj_[split] > v) ++split;  // entries from pass 1 are > v
    // pass 1 gave ids > v ascending, pass 2 ids < v ascending; rotate merges them
    std::rotate(adj_.begin() + lo, adj_.begin() + split, adj_.begin() + hi);
    std::rotate(adj_weight_.begin() + lo, adj_weight_.begin() + split,
                adj_weight_.begin() + hi);
  }
}

int LineGraph::max_edge_weight() const {
  int w = 0;
  for (const auto& e : edges_) w = std::max(w, e.weight);
  return w;
}

std::span<const LinkId> LineGraph::neighbors(LinkId v) const {
  if (v >= node_count_) throw std::out_of_range("vertex id out of range");
  return {adj_.data() + adj_ptr_[v], adj_ptr_[v + 1] - adj_ptr_[v]};
}

std::span<const int> LineGraph::neighbor_weights(LinkId v) const {
  if (v >= node_count_) throw std::out_of_range("vertex id out of range");
  return {adj_weight_.data() + adj_ptr_[v], adj_ptr_[v + 1] - adj_ptr_[v]};
}

Eigen::MatrixXd LineGraph::dense_adjacency() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(node_count_, node_count_);
  for (const auto& e : edges_) {
    a(e.u, e.v) = e.weight;
    a(e.v, e.u) = e.weight;
  }
  return a;
}

void LineGraph::write_edge_list(std::ostream& out) const {
  out << "# nodes " << node_count_ << '\n';
  for (const auto& e : edges_) {
    out << e.u << ' ' << e.v;
    if (weighted_) out << ' ' << e.weight;
    out << '\n';
  }
}

LineGraph LineGraph::read_edge_list(std::istream& in) {
  std::vector<WeightedEdge> edges;
  std::size_t node_count = 0;
  bool have_count = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank
    if (first[0] == '#') {
      std::string word;
      std::istringstream cs(line.substr(line.find('#') + 1));
      if (cs >> word && word == "nodes" && cs >> node_count) have_count = true;
      continue;
    }
    WeightedEdge e;
    std::istringstream es(line);
    long long u, v, w = 1;
    if (!(es >> u >> v) || u < 0 || v < 0) {
      throw std::invalid_argument("bad edge at line " + std::to_string(lineno));
    }
    if (es >> w && w < 1) {
      throw std::invalid_argument("bad weight at line " + std::to_string(lineno));
    }
    e.u = static_cast<LinkId>(u);
    e.v = static_cast<LinkId>(v);
    e.weight = static_cast<int>(w);
    edges.push_back(e);
  }
  if (!have_count) {
    for (const auto& e : edges) {
      node_count = std::max({node_count, static_cast<std::size_t>(e.u) + 1,
                             static_cast<std::size_t>(e.v) + 1});
    }
  }
  if (edges.empty() && node_count == 0) throw std::invalid_argument("empty edge list");
  return from_edges(node_count, std::move(edges));
}

std::vector<int> depth_correction(const IncidenceMatrix& r, int max_depth) {
  std::vector<int> c(r.cols());
  for (std::size_t j = 0; j < r.cols(); ++j) {
    int depth = r.column_sum(j);
    if (depth > max_depth) throw std::invalid_argument("max_depth below an actual depth");
    c[j] = max_depth - depth;
  }
  return c;
}

Eigen::MatrixXi adjacency_via_gram(const IncidenceMatrix& r, int max_depth,
                                   std::size_t dense_limit) {
  const std::size_t n = r.rows(), l = r.cols();
  if (l > dense_limit) {
    throw std::invalid_argument("incidence too large to densify (" + std::to_string(l) +
                                " hyperlinks, limit " + std::to_string(dense_limit) + ")");
  }
  if (r.max_column_sum() != max_depth) {
    throw std::invalid_argument("max_depth does not match the incidence matrix");
  }

  Eigen::MatrixXi rm = Eigen::MatrixXi::Zero(n, l);
  for (std::size_t j = 0; j < l; ++j) {
    for (NodeId i : r.column(j)) rm(i, j) = 1;
  }
  Eigen::MatrixXi a = rm.transpose() * rm;
  std::vector<int> c = depth_correction(r, max_depth);
  for (std::size_t j = 0; j < l; ++j) {
    a(j, j) += c[j] - max_depth;  // kills the diagonal: depth_j + c_j = max_depth
  }
  return a;
}

std::vector<std::vector<LinkId>> community_cliques(const Hypergraph& h) {
  std::vector<std::vector<LinkId>> cliques(h.node_count());
  for (NodeId n = 0; n < h.node_count(); ++n) {
    auto links = h.incident_links(n);
    cliques[n].assign(links.begin(), links.end());
  }
  return cliques;
}

}  // namespace hyperlap
