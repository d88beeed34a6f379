#pragma once

// Shared fixtures and random hypergraph samplers for the test binaries.

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hyperlap/generator.hpp"
#include "hyperlap/hypergraph.hpp"
#include "hyperlap/membership_io.hpp"

namespace testutil {

inline std::string fixture_path() {
  return std::string(HYPERLAP_DATA_DIR) + "/nas_memberships.csv";
}

inline hyperlap::Hypergraph load_fixture() {
  return hyperlap::parse_memberships_file(fixture_path());
}

// Arbitrary hypergraph: mixed depths 1..4, no linearity guarantee.
inline hyperlap::Hypergraph random_hypergraph(std::mt19937_64& rng,
                                              std::size_t max_nodes = 60,
                                              std::size_t max_links = 120) {
  using hyperlap::uniform_below;
  std::size_t n = 4 + uniform_below(max_nodes - 3, rng);
  std::size_t l = 3 + uniform_below(max_links - 2, rng);
  std::vector<std::vector<hyperlap::NodeId>> links(l);
  for (auto& link : links) {
    std::size_t depth = 1 + uniform_below(std::min<std::size_t>(4, n), rng);
    std::set<hyperlap::NodeId> members;
    while (members.size() < depth) {
      members.insert(static_cast<hyperlap::NodeId>(uniform_below(n, rng)));
    }
    link.assign(members.begin(), members.end());
  }
  return hyperlap::Hypergraph::from_links(std::move(links), n);
}

// Uniform depth k, possibly nonlinear.
inline hyperlap::Hypergraph random_uniform_hypergraph(std::mt19937_64& rng, int k,
                                                      std::size_t max_nodes = 60,
                                                      std::size_t max_links = 120) {
  using hyperlap::uniform_below;
  std::size_t n = std::max<std::size_t>(static_cast<std::size_t>(k) + 1,
                                        4 + uniform_below(max_nodes - 3, rng));
  std::size_t l = 3 + uniform_below(max_links - 2, rng);
  std::vector<std::vector<hyperlap::NodeId>> links(l);
  for (auto& link : links) {
    std::set<hyperlap::NodeId> members;
    while (members.size() < static_cast<std::size_t>(k)) {
      members.insert(static_cast<hyperlap::NodeId>(uniform_below(n, rng)));
    }
    link.assign(members.begin(), members.end());
  }
  return hyperlap::Hypergraph::from_links(std::move(links), n);
}

// Linear and k-uniform with more hyperlinks than nodes, built greedily: a
// hyperlink is accepted only if none of its node pairs has been used before.
inline hyperlap::Hypergraph random_linear_uniform_hypergraph(std::mt19937_64& rng, int k) {
  using hyperlap::uniform_below;
  while (true) {
    std::size_t n = (k == 2) ? 8 + uniform_below(10, rng) : 13 + uniform_below(8, rng);
    std::size_t target = n + 1 + uniform_below(k == 2 ? n / 2 : 4, rng);
    std::set<std::pair<hyperlap::NodeId, hyperlap::NodeId>> used;
    std::vector<std::vector<hyperlap::NodeId>> links;
    for (int attempt = 0; attempt < 20000 && links.size() < target; ++attempt) {
      std::set<hyperlap::NodeId> members;
      while (members.size() < static_cast<std::size_t>(k)) {
        members.insert(static_cast<hyperlap::NodeId>(uniform_below(n, rng)));
      }
      std::vector<hyperlap::NodeId> link(members.begin(), members.end());
      bool fresh = true;
      for (std::size_t i = 0; fresh && i < link.size(); ++i) {
        for (std::size_t j = i + 1; fresh && j < link.size(); ++j) {
          fresh = used.find({link[i], link[j]}) == used.end();
        }
      }
      if (!fresh) continue;
      for (std::size_t i = 0; i < link.size(); ++i) {
        for (std::size_t j = i + 1; j < link.size(); ++j) used.insert({link[i], link[j]});
      }
      links.push_back(std::move(link));
    }
    if (links.size() == target) {
      return hyperlap::Hypergraph::from_links(std::move(links), n);
    }
    // unlucky greedy run: resample sizes
  }
}

// Quadratic reference implementation of linearity over hyperlink pairs.
inline bool brute_force_linear(const hyperlap::Hypergraph& h) {
  for (hyperlap::LinkId a = 0; a < h.link_count(); ++a) {
    for (hyperlap::LinkId b = a + 1; b < h.link_count(); ++b) {
      auto ma = h.members(a);
      auto mb = h.members(b);
      int shared = 0;
      for (auto x : ma) {
        for (auto y : mb) shared += (x == y);
      }
      if (shared > 1) return false;
    }
  }
  return true;
}

}  // namespace testutil
