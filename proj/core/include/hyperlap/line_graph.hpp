#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "hyperlap/hypergraph.hpp"

namespace hyperlap {

struct WeightedEdge {
  LinkId u = 0;  // always u < v
  LinkId v = 0;
  int weight = 1;  // number of shared nodes
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Projection of a hypergraph onto its hyperlinks: one vertex per hyperlink,
// an edge wherever two hyperlinks share at least one node, weighted by the
// shared count. Unweighted (all weights 1) exactly when the hypergraph is
// linear. Doubles as the social graph of the individuals.
class LineGraph {
 public:
  LineGraph() = default;

  static LineGraph from_hypergraph(const Hypergraph& h);
  // Edges may arrive in any order/orientation; they are normalised to
  // u < v and sorted. Duplicate pairs or self loops are rejected.
  static LineGraph from_edges(std::size_t node_count, std::vector<WeightedEdge> edges);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const WeightedEdge> edges() const { return edges_; }
  bool is_weighted() const { return weighted_; }
  int max_edge_weight() const;

  std::span<const LinkId> neighbors(LinkId v) const;
  std::span<const int> neighbor_weights(LinkId v) const;
  std::size_t degree(LinkId v) const { return neighbors(v).size(); }

  Eigen::MatrixXd dense_adjacency() const;

  // Text form: "u v" per line for unweighted graphs, "u v t" otherwise,
  // sorted by (u, v). A leading "# nodes N" comment pins the vertex count
  // so isolated vertices survive a round trip.
  void write_edge_list(std::ostream& out) const;
  static LineGraph read_edge_list(std::istream& in);

 private:
  std::size_t node_count_ = 0;
  std::vector<WeightedEdge> edges_;
  bool weighted_ = false;
  // CSR over both directions, neighbor lists ascending.
  std::vector<std::size_t> adj_ptr_;
  std::vector<LinkId> adj_;
  std::vector<int> adj_weight_;

  void build_adjacency();
};

// Densifying the incidence matrix is only sensible for modest sizes; above
// this many hyperlinks the combinatorial construction is the only path.
inline constexpr std::size_t kDenseGramLimit = 4096;

// Diagonal correction c_j = max_depth - depth_j that upgrades the uniform
// identity shift to mixed depths.
std::vector<int> depth_correction(const IncidenceMatrix& r, int max_depth);

// Adjacency of the line graph computed algebraically from the incidence
// matrix: R^T R + diag(correction) - max_depth * I. Exact integer arithmetic;
// used to cross-check the combinatorial construction. Requires the
// hypergraph to be linear (otherwise off-diagonals exceed 1 and the result
// is the weighted adjacency, which is still returned — callers decide).
Eigen::MatrixXi adjacency_via_gram(const IncidenceMatrix& r, int max_depth,
                                   std::size_t dense_limit = kDenseGramLimit);

// Hyperlink sets of each community: every community induces a clique of
// this size in the line graph.
std::vector<std::vector<LinkId>> community_cliques(const Hypergraph& h);

}  // namespace hyperlap
