#pragma once

#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <random>
#include <vector>

#include "hyperlap/hypergraph.hpp"

namespace hyperlap {

// One hyperlink of the growing element: the new-node indices it contains
// plus how many of its members are attachment slots for existing nodes.
struct ElementLink {
  std::vector<int> new_nodes;
  int attachment_slots = 1;
};

// The repeated motif: new_node_count fresh nodes wired together by a few
// hyperlinks, each reaching into the existing hypergraph through its slots.
struct GrowingElement {
  int new_node_count = 3;
  std::vector<ElementLink> links;
  int total_slots() const;
};

// Default element: new nodes a,b,c with hyperlinks {a,x1}, {b,x2} (depth 2)
// and {a,b,x3}, {b,c,x4} (depth 3); x1..x4 are distinct existing nodes.
GrowingElement default_growing_element();

// Default 7-node seed: {0,1}, {1,2}, {2,3}, {3,4}, {4,5,6}, {0,2,6}.
// Linear, depths in {2,3}, every degree >= 1.
Hypergraph default_growth_seed();

struct GrowthConfig {
  Hypergraph seed = default_growth_seed();
  GrowingElement element = default_growing_element();
  std::uint64_t steps = 0;
  std::uint64_t rng_seed = 1;
  int max_retries = 100;
};

// One accepted attachment: which node a slot landed on and its degree at
// draw time. Lets tests check that attachment really favours high degrees.
struct AttachmentEvent {
  std::uint64_t step = 0;
  NodeId node = 0;
  std::int64_t degree_before = 0;
};

// Degree-proportional growth: every step adds the element's new nodes and
// hyperlinks, attaching each slot to a distinct existing node drawn with
// probability degree/total (sequential draws without replacement). Proposals
// that would break linearity are resampled up to max_retries. Deterministic
// for a fixed config.
Hypergraph grow(const GrowthConfig& config,
                std::vector<AttachmentEvent>* log = nullptr);

enum class DegreeSide { node, link };

// Node side counts hyperlinks per node (the community size distribution),
// link side counts overlapping depths.
std::map<int, std::int64_t> degree_histogram(const Hypergraph& h, DegreeSide side);

// Config file form (all fields optional, missing ones keep defaults):
//   {"steps": 336, "rng_seed": 1, "max_retries": 100,
//    "seed": {"node_count": 7, "links": [[0,1], ...]},
//    "element": {"new_nodes": 3, "links": [{"new": [0], "slots": 1}, ...]}}
GrowthConfig load_growth_config(const nlohmann::json& j);
nlohmann::json growth_config_to_json(const GrowthConfig& config);

// Unbiased draw from [0, bound) by rejection; identical on every platform
// since mt19937_64's output sequence is fixed by the standard.
std::uint64_t uniform_below(std::uint64_t bound, std::mt19937_64& rng);

}  // namespace hyperlap
