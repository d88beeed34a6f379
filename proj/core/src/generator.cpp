#include "hyperlap/generator.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace hyperlap {

namespace {

// Fenwick tree over node degrees; supports point update, prefix search.
// Capacity is fixed up front so the growing run never reallocates.
class DegreeIndex {
 public:
  DegreeIndex(std::size_t capacity, const std::vector<std::int64_t>& init)
      : tree_(capacity + 1, 0) {
    for (std::size_t i = 0; i < init.size(); ++i) add(i, init[i]);
  }

  void add(std::size_t i, std::int64_t delta) {
    for (std::size_t p = i + 1; p < tree_.size(); p += p & (~p + 1)) tree_[p] += delta;
    total_ += delta;
  }

  std::int64_t total() const { return total_; }

  // Smallest index whose cumulative weight exceeds r (0 <= r < total).
  std::size_t find(std::int64_t r) const {
    std::size_t pos = 0;
    std::size_t mask = 1;
    while (mask * 2 < tree_.size()) mask *= 2;
    for (; mask > 0; mask /= 2) {
      std::size_t next = pos + mask;
      if (next < tree_.size() && tree_[next] <= r) {
        pos = next;
        r -= tree_[next];
      }
    }
    return pos;  // 0-based element index
  }

 private:
  std::vector<std::int64_t> tree_;
  std::int64_t total_ = 0;
};

void validate(const GrowthConfig& config) {
  const auto& el = config.element;
  if (el.new_node_count < 1) throw std::invalid_argument("element needs at least one new node");
  if (el.links.empty()) throw std::invalid_argument("element needs at least one hyperlink");

  std::vector<int> coverage(el.new_node_count, 0);
  for (const auto& link : el.links) {
    if (link.attachment_slots < 1) {
      throw std::invalid_argument("every element hyperlink needs an attachment slot");
    }
    std::vector<int> sorted = link.new_nodes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("element hyperlink repeats a new node");
    }
    for (int n : sorted) {
      if (n < 0 || n >= el.new_node_count) {
        throw std::invalid_argument("element hyperlink references an unknown new node");
      }
      ++coverage[n];
    }
    std::size_t depth = sorted.size() + static_cast<std::size_t>(link.attachment_slots);
    if (depth != 2 && depth != 3) {
      throw std::invalid_argument("element hyperlink depth must be 2 or 3");
    }
  }
  for (int c : coverage) {
    if (c == 0) throw std::invalid_argument("element leaves a new node uncovered");
  }
  for (std::size_t i = 0; i < el.links.size(); ++i) {
    for (std::size_t j = i + 1; j < el.links.size(); ++j) {
      int shared = 0;
      for (int a : el.links[i].new_nodes) {
        for (int b : el.links[j].new_nodes) shared += (a == b);
      }
      if (shared > 1) {
        throw std::invalid_argument("two element hyperlinks share more than one new node");
      }
    }
  }
  if (config.max_retries < 0) throw std::invalid_argument("max_retries must be non-negative");

  const auto& seed = config.seed;
  std::size_t needed = std::max<std::size_t>(4, el.total_slots());
  if (seed.node_count() < needed) {
    throw std::invalid_argument("seed too small: " + std::to_string(seed.node_count()) +
                                " nodes, need at least " + std::to_string(needed));
  }
  for (LinkId i = 0; i < seed.link_count(); ++i) {
    int d = seed.overlapping_depth(i);
    if (d != 2 && d != 3) throw std::invalid_argument("seed hyperlink depth must be 2 or 3");
  }
  if (!seed.is_linear()) throw std::invalid_argument("seed hypergraph must be linear");
  for (NodeId n = 0; n < seed.node_count(); ++n) {
    if (seed.degree(n) == 0) {
      throw std::invalid_argument("seed node " + std::to_string(n) + " has degree 0");
    }
  }
}

// Do two nodes already share a hyperlink? Lists are sorted.
bool co_occur(const std::vector<std::vector<LinkId>>& node_links, NodeId a, NodeId b) {
  const auto& la = node_links[a];
  const auto& lb = node_links[b];
  std::size_t i = 0, j = 0;
  while (i < la.size() && j < lb.size()) {
    if (la[i] < lb[j]) ++i;
    else if (lb[j] < la[i]) ++j;
    else return true;
  }
  return false;
}

}  // namespace

int GrowingElement::total_slots() const {
  int total = 0;
  for (const auto& link : links) total += link.attachment_slots;
  return total;
}

GrowingElement default_growing_element() {
  GrowingElement el;
  el.new_node_count = 3;
  el.links = {{{0}, 1}, {{1}, 1}, {{0, 1}, 1}, {{1, 2}, 1}};
  return el;
}

Hypergraph default_growth_seed() {
  return Hypergraph::from_links({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5, 6}, {0, 2, 6}}, 7);
}

std::uint64_t uniform_below(std::uint64_t bound, std::mt19937_64& rng) {
  if (bound == 0) throw std::invalid_argument("empty draw range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t rem = (max % bound + 1) % bound;  // 2^64 mod bound
  std::uint64_t draw = rng();
  while (rem != 0 && draw >= max - rem + 1) draw = rng();
  return draw % bound;
}

Hypergraph grow(const GrowthConfig& config, std::vector<AttachmentEvent>* log) {
  validate(config);

  const auto& seed = config.seed;
  const auto& el = config.element;
  const int slots = el.total_slots();

  std::size_t node_count = seed.node_count();
  std::vector<std::vector<NodeId>> links;
  links.reserve(seed.link_count() + config.steps * el.links.size());
  for (LinkId i = 0; i < seed.link_count(); ++i) {
    auto m = seed.members(i);
    links.emplace_back(m.begin(), m.end());
  }

  const std::size_t final_nodes =
      node_count + static_cast<std::size_t>(el.new_node_count) * config.steps;
  std::vector<std::int64_t> degrees(node_count, 0);
  std::vector<std::vector<LinkId>> node_links(final_nodes);
  for (NodeId n = 0; n < node_count; ++n) {
    degrees[n] = static_cast<std::int64_t>(seed.degree(n));
    auto ls = seed.incident_links(n);
    node_links[n].assign(ls.begin(), ls.end());
  }

  DegreeIndex index(final_nodes, degrees);
  std::mt19937_64 rng(config.rng_seed);
  std::vector<NodeId> targets(slots);
  std::vector<std::int64_t> target_degrees(slots);

  for (std::uint64_t step = 0; step < config.steps; ++step) {
    int retries = 0;
    while (true) {
      // Sequential degree-proportional draws without replacement: zero each
      // chosen weight, restore all after the proposal.
      for (int s = 0; s < slots; ++s) {
        std::size_t pick = index.find(
            static_cast<std::int64_t>(uniform_below(index.total(), rng)));
        targets[s] = static_cast<NodeId>(pick);
        target_degrees[s] = degrees[pick];
        index.add(pick, -degrees[pick]);
      }
      for (int s = 0; s < slots; ++s) index.add(targets[s], degrees[targets[s]]);

      // Linearity: a proposed hyperlink with several slots must not land on
      // nodes that already share a hyperlink. Single-slot links cannot
      // collide (their only existing member is unique per proposal).
      bool ok = true;
      int cursor = 0;
      for (const auto& link : el.links) {
        for (int a = 0; ok && a < link.attachment_slots; ++a) {
          for (int b = a + 1; ok && b < link.attachment_slots; ++b) {
            if (co_occur(node_links, targets[cursor + a], targets[cursor + b])) ok = false;
          }
        }
        cursor += link.attachment_slots;
      }
      if (ok) break;
      if (++retries > config.max_retries) {
        throw std::runtime_error("linearity retry cap exceeded at step " +
                                 std::to_string(step));
      }
    }

    if (log) {
      for (int s = 0; s < slots; ++s) {
        log->push_back({step, targets[s], target_degrees[s]});
      }
    }

    // Commit: new node ids follow on from the current count.
    NodeId base = static_cast<NodeId>(node_count);
    node_count += el.new_node_count;
    degrees.resize(node_count, 0);

    int cursor = 0;
    for (const auto& link : el.links) {
      LinkId link_id = static_cast<LinkId>(links.size());
      std::vector<NodeId> members;
      members.reserve(link.new_nodes.size() + link.attachment_slots);
      for (int n : link.new_nodes) members.push_back(base + n);
      for (int s = 0; s < link.attachment_slots; ++s) members.push_back(targets[cursor++]);
      for (NodeId m : members) {
        ++degrees[m];
        index.add(m, 1);
        node_links[m].push_back(link_id);  // link ids ascend, lists stay sorted
      }
      links.push_back(std::move(members));
    }
  }

  return Hypergraph::from_links(std::move(links), node_count);
}

std::map<int, std::int64_t> degree_histogram(const Hypergraph& h, DegreeSide side) {
  std::map<int, std::int64_t> hist;
  if (side == DegreeSide::node) {
    for (NodeId n = 0; n < h.node_count(); ++n) ++hist[static_cast<int>(h.degree(n))];
  } else {
    for (LinkId i = 0; i < h.link_count(); ++i) ++hist[h.overlapping_depth(i)];
  }
  return hist;
}

GrowthConfig load_growth_config(const nlohmann::json& j) {
  GrowthConfig config;
  if (!j.is_object()) throw std::invalid_argument("growth config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "steps") config.steps = value.get<std::uint64_t>();
    else if (key == "rng_seed") config.rng_seed = value.get<std::uint64_t>();
    else if (key == "max_retries") config.max_retries = value.get<int>();
    else if (key == "seed") {
      std::size_t n = value.at("node_count").get<std::size_t>();
      std::vector<std::vector<NodeId>> links;
      for (const auto& link : value.at("links")) {
        links.push_back(link.get<std::vector<NodeId>>());
      }
      config.seed = Hypergraph::from_links(std::move(links), n);
    } else if (key == "element") {
      GrowingElement el;
      el.new_node_count = value.at("new_nodes").get<int>();
      el.links.clear();
      for (const auto& link : value.at("links")) {
        ElementLink l;
        l.new_nodes = link.at("new").get<std::vector<int>>();
        l.attachment_slots = link.at("slots").get<int>();
        el.links.push_back(std::move(l));
      }
      config.element = std::move(el);
    } else {
      throw std::invalid_argument("unknown growth config key: " + key);
    }
  }
  return config;
}

nlohmann::json growth_config_to_json(const GrowthConfig& config) {
  nlohmann::json seed_links = nlohmann::json::array();
  for (LinkId i = 0; i < config.seed.link_count(); ++i) {
    auto m = config.seed.members(i);
    seed_links.push_back(std::vector<NodeId>(m.begin(), m.end()));
  }
  nlohmann::json element_links = nlohmann::json::array();
  for (const auto& link : config.element.links) {
    element_links.push_back({{"new", link.new_nodes}, {"slots", link.attachment_slots}});
  }
  return {
      {"steps", config.steps},
      {"rng_seed", config.rng_seed},
      {"max_retries", config.max_retries},
      {"seed", {{"node_count", config.seed.node_count()}, {"links", seed_links}}},
      {"element", {{"new_nodes", config.element.new_node_count}, {"links", element_links}}},
  };
}

}  // namespace hyperlap
