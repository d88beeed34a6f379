#include "hyperlap/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace hyperlap {

namespace {

// Sorted unique labels -> dense id by binary search.
std::uint32_t lookup(const std::vector<std::string>& sorted, const std::string& label) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), label);
  return static_cast<std::uint32_t>(it - sorted.begin());
}

}  // namespace

Hypergraph Hypergraph::from_memberships(std::span<const Membership> pairs) {
  if (pairs.empty()) throw std::invalid_argument("membership list is empty");

  std::vector<std::string> link_labels, node_labels;
  link_labels.reserve(pairs.size());
  node_labels.reserve(pairs.size());
  for (const auto& p : pairs) {
    link_labels.push_back(p.individual);
    node_labels.push_back(p.community);
  }
  auto dedup = [](std::vector<std::string>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(link_labels);
  dedup(node_labels);

  std::vector<std::vector<NodeId>> links(link_labels.size());
  for (const auto& p : pairs) {
    links[lookup(link_labels, p.individual)].push_back(lookup(node_labels, p.community));
  }

  std::size_t node_count = node_labels.size();
  return from_links(std::move(links), node_count, std::move(link_labels),
                    std::move(node_labels));
}

Hypergraph Hypergraph::from_links(std::vector<std::vector<NodeId>> links,
                                  std::size_t node_count,
                                  std::vector<std::string> link_labels,
                                  std::vector<std::string> node_labels) {
  if (links.empty()) throw std::invalid_argument("hypergraph needs at least one hyperlink");
  if (!link_labels.empty() && link_labels.size() != links.size()) {
    throw std::invalid_argument("hyperlink label count mismatch");
  }
  if (!node_labels.empty() && node_labels.size() != node_count) {
    throw std::invalid_argument("node label count mismatch");
  }

  Hypergraph h;
  h.link_ptr_.reserve(links.size() + 1);
  h.link_ptr_.push_back(0);
  for (auto& link : links) {
    std::sort(link.begin(), link.end());
    link.erase(std::unique(link.begin(), link.end()), link.end());
    if (link.empty()) throw std::invalid_argument("hyperlink with no members");
    if (link.back() >= node_count) throw std::out_of_range("hyperlink member out of range");
    h.link_nodes_.insert(h.link_nodes_.end(), link.begin(), link.end());
    h.link_ptr_.push_back(h.link_nodes_.size());
  }
  h.build_node_side(node_count);

  if (link_labels.empty()) {
    h.link_labels_.reserve(links.size());
    for (std::size_t i = 0; i < links.size(); ++i) h.link_labels_.push_back(std::to_string(i));
  } else {
    h.link_labels_ = std::move(link_labels);
  }
  if (node_labels.empty()) {
    h.node_labels_.reserve(node_count);
    for (std::size_t j = 0; j < node_count; ++j) h.node_labels_.push_back(std::to_string(j));
  } else {
    h.node_labels_ = std::move(node_labels);
  }
  return h;
}

void Hypergraph::build_node_side(std::size_t node_count) {
  std::vector<std::size_t> counts(node_count, 0);
  for (NodeId n : link_nodes_) ++counts[n];

  node_ptr_.assign(node_count + 1, 0);
  for (std::size_t j = 0; j < node_count; ++j) node_ptr_[j + 1] = node_ptr_[j] + counts[j];
  node_links_.resize(link_nodes_.size());

  std::vector<std::size_t> cursor(node_ptr_.begin(), node_ptr_.end() - 1);
  for (std::size_t i = 0; i + 1 < link_ptr_.size(); ++i) {
    for (std::size_t p = link_ptr_[i]; p < link_ptr_[i + 1]; ++p) {
      node_links_[cursor[link_nodes_[p]]++] = static_cast<LinkId>(i);
    }
  }
  // Link ids are visited ascending, so each node's list comes out sorted.
}

std::span<const NodeId> Hypergraph::members(LinkId link) const {
  if (link >= link_count()) throw std::out_of_range("hyperlink id out of range");
  return {link_nodes_.data() + link_ptr_[link], link_ptr_[link + 1] - link_ptr_[link]};
}

std::span<const LinkId> Hypergraph::incident_links(NodeId node) const {
  if (node >= node_count()) throw std::out_of_range("node id out of range");
  return {node_links_.data() + node_ptr_[node], node_ptr_[node + 1] - node_ptr_[node]};
}

int Hypergraph::overlapping_width(NodeId a, NodeId b) const {
  if (a == b) throw std::invalid_argument("overlapping width needs two distinct nodes");
  auto la = incident_links(a);
  auto lb = incident_links(b);
  int shared = 0;
  std::size_t i = 0, j = 0;
  while (i < la.size() && j < lb.size()) {
    if (la[i] < lb[j]) ++i;
    else if (lb[j] < la[i]) ++j;
    else { ++shared; ++i; ++j; }
  }
  return shared;
}

bool Hypergraph::is_linear() const {
  // Two hyperlinks sharing >= 2 nodes show up as the same (link, link) pair
  // at two different nodes, so a seen-set over pair keys catches it.
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(membership_count() * 2);
  for (NodeId n = 0; n < node_count(); ++n) {
    auto links = incident_links(n);
    for (std::size_t i = 0; i < links.size(); ++i) {
      for (std::size_t j = i + 1; j < links.size(); ++j) {
        std::uint64_t key = (static_cast<std::uint64_t>(links[i]) << 32) | links[j];
        if (!seen.insert(key).second) return false;
      }
    }
  }
  return true;
}

std::optional<int> Hypergraph::uniform_depth() const {
  int k = overlapping_depth(0);
  for (LinkId i = 1; i < link_count(); ++i) {
    if (overlapping_depth(i) != k) return std::nullopt;
  }
  return k;
}

int Hypergraph::max_depth() const {
  int k = 0;
  for (LinkId i = 0; i < link_count(); ++i) k = std::max(k, overlapping_depth(i));
  return k;
}

IncidenceMatrix Hypergraph::incidence() const {
  return IncidenceMatrix(node_count(), link_ptr_, link_nodes_);
}

const std::string& Hypergraph::node_label(NodeId node) const {
  if (node >= node_count()) throw std::out_of_range("node id out of range");
  return node_labels_[node];
}

const std::string& Hypergraph::link_label(LinkId link) const {
  if (link >= link_count()) throw std::out_of_range("hyperlink id out of range");
  return link_labels_[link];
}

std::optional<NodeId> Hypergraph::find_node(std::string_view label) const {
  for (NodeId j = 0; j < node_count(); ++j) {
    if (node_labels_[j] == label) return j;
  }
  return std::nullopt;
}

std::optional<LinkId> Hypergraph::find_link(std::string_view label) const {
  for (LinkId i = 0; i < link_count(); ++i) {
    if (link_labels_[i] == label) return i;
  }
  return std::nullopt;
}

IncidenceMatrix::IncidenceMatrix(std::size_t rows, std::vector<std::size_t> col_ptr,
                                 std::vector<NodeId> row_index)
    : rows_(rows), col_ptr_(std::move(col_ptr)), row_index_(std::move(row_index)) {
  if (col_ptr_.empty() || col_ptr_.back() != row_index_.size()) {
    throw std::invalid_argument("inconsistent incidence storage");
  }
  row_sums_.assign(rows_, 0);
  for (NodeId r : row_index_) {
    if (r >= rows_) throw std::out_of_range("incidence row out of range");
    ++row_sums_[r];
  }
}

std::span<const NodeId> IncidenceMatrix::column(std::size_t col) const {
  if (col + 1 >= col_ptr_.size()) throw std::out_of_range("incidence column out of range");
  return {row_index_.data() + col_ptr_[col], col_ptr_[col + 1] - col_ptr_[col]};
}

int IncidenceMatrix::max_column_sum() const {
  int k = 0;
  for (std::size_t c = 0; c < cols(); ++c) k = std::max(k, column_sum(c));
  return k;
}

}  // namespace hyperlap
