#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperlap {

// Communities are nodes, individuals are hyperlinks. A hyperlink contains
// every community its individual belongs to, so |link| is the individual's
// overlapping depth and |link_a ∩ link_b| is the width shared by two
// communities.
using NodeId = std::uint32_t;
using LinkId = std::uint32_t;

struct Membership {
  std::string individual;  // hyperlink label
  std::string community;   // node label
};

class IncidenceMatrix;

class Hypergraph {
 public:
  Hypergraph() = default;

  // Canonical constructor: labels are deduplicated, ids assigned by sorted
  // label order, duplicate pairs collapsed. Feeding the same multiset of
  // pairs in any order yields an identical object.
  static Hypergraph from_memberships(std::span<const Membership> pairs);

  // Structural constructor for already-dense ids. Each link lists the nodes
  // it contains; duplicates within a link collapse. Labels default to the
  // decimal ids when not supplied.
  static Hypergraph from_links(std::vector<std::vector<NodeId>> links,
                               std::size_t node_count,
                               std::vector<std::string> link_labels = {},
                               std::vector<std::string> node_labels = {});

  std::size_t node_count() const { return node_ptr_.empty() ? 0 : node_ptr_.size() - 1; }
  std::size_t link_count() const { return link_ptr_.empty() ? 0 : link_ptr_.size() - 1; }
  std::size_t membership_count() const { return link_nodes_.size(); }

  // Nodes of one hyperlink, ascending.
  std::span<const NodeId> members(LinkId link) const;
  // Hyperlinks through one node, ascending. Its size is the community size.
  std::span<const LinkId> incident_links(NodeId node) const;
  std::size_t degree(NodeId node) const { return incident_links(node).size(); }

  int overlapping_depth(LinkId link) const { return static_cast<int>(members(link).size()); }
  int overlapping_width(NodeId a, NodeId b) const;

  // Linear: no two nodes share more than one hyperlink (equivalently no two
  // hyperlinks share more than one node).
  bool is_linear() const;
  // Depth shared by every hyperlink, or nullopt when depths differ.
  std::optional<int> uniform_depth() const;
  int max_depth() const;

  IncidenceMatrix incidence() const;

  const std::string& node_label(NodeId node) const;
  const std::string& link_label(LinkId link) const;
  std::optional<NodeId> find_node(std::string_view label) const;
  std::optional<LinkId> find_link(std::string_view label) const;

 private:
  // CSR in both directions; both adjacency arrays kept sorted.
  std::vector<std::size_t> link_ptr_;
  std::vector<NodeId> link_nodes_;
  std::vector<std::size_t> node_ptr_;
  std::vector<LinkId> node_links_;
  std::vector<std::string> node_labels_;
  std::vector<std::string> link_labels_;

  void build_node_side(std::size_t node_count);
};

// 0/1 incidence matrix R, rows = nodes, columns = hyperlinks, stored as
// sparse columns. Column sums are overlapping depths, row sums community
// sizes.
class IncidenceMatrix {
 public:
  IncidenceMatrix(std::size_t rows, std::vector<std::size_t> col_ptr,
                  std::vector<NodeId> row_index);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return col_ptr_.size() - 1; }
  std::span<const NodeId> column(std::size_t col) const;
  int column_sum(std::size_t col) const { return static_cast<int>(column(col).size()); }
  int row_sum(std::size_t row) const { return row_sums_[row]; }
  int max_column_sum() const;

 private:
  std::size_t rows_;
  std::vector<std::size_t> col_ptr_;
  std::vector<NodeId> row_index_;
  std::vector<int> row_sums_;
};

}  // namespace hyperlap
