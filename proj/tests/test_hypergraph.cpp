#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "hyperlap/hypergraph.hpp"

using namespace hyperlap;

TEST_CASE("collaboration fixture has the expected shape") {
  Hypergraph h = testutil::load_fixture();
  CHECK(h.node_count() == 12);
  CHECK(h.link_count() == 54);
  CHECK(h.membership_count() == 66);
  CHECK(h.max_depth() == 5);
  CHECK(h.is_linear());
  CHECK_FALSE(h.uniform_depth().has_value());

  // The six individuals of the founding group have depths {5,3,3,2,2,2};
  // the one other multi-group individual (l7) sits in two groups.
  std::multiset<int> group;
  for (int i = 1; i <= 6; ++i) {
    group.insert(h.overlapping_depth(*h.find_link("l" + std::to_string(i))));
  }
  CHECK(group == std::multiset<int>{5, 3, 3, 2, 2, 2});
  CHECK(h.overlapping_depth(*h.find_link("l7")) == 2);

  std::map<std::size_t, int> sizes;
  for (NodeId n = 0; n < h.node_count(); ++n) ++sizes[h.degree(n)];
  CHECK(sizes == std::map<std::size_t, int>{{5, 6}, {6, 6}});
}

TEST_CASE("membership construction is canonical") {
  std::vector<Membership> pairs = {
      {"u2", "c1"}, {"u1", "c2"}, {"u1", "c1"}, {"u1", "c1"},  // shuffled + duplicate
  };
  Hypergraph h = Hypergraph::from_memberships(pairs);
  CHECK(h.node_count() == 2);
  CHECK(h.link_count() == 2);
  CHECK(h.overlapping_depth(*h.find_link("u1")) == 2);
  CHECK(h.overlapping_depth(*h.find_link("u2")) == 1);

  // Any permutation of the same multiset builds the identical object.
  std::vector<Membership> reordered = {{"u1", "c1"}, {"u2", "c1"}, {"u1", "c2"}};
  Hypergraph h2 = Hypergraph::from_memberships(reordered);
  REQUIRE(h2.link_count() == h.link_count());
  for (LinkId i = 0; i < h.link_count(); ++i) {
    CHECK(h2.link_label(i) == h.link_label(i));
    auto a = h.members(i);
    auto b = h2.members(i);
    CHECK(std::vector<NodeId>(a.begin(), a.end()) == std::vector<NodeId>(b.begin(), b.end()));
  }

  // Ids follow sorted label order.
  CHECK(h.link_label(0) == "u1");
  CHECK(h.node_label(0) == "c1");
}

TEST_CASE("overlapping width counts shared individuals") {
  Hypergraph h = testutil::load_fixture();
  NodeId n1 = *h.find_node("n1");
  NodeId n2 = *h.find_node("n2");
  NodeId n10 = *h.find_node("n10");
  NodeId n11 = *h.find_node("n11");
  CHECK(h.overlapping_width(n1, n2) == 1);     // l1
  CHECK(h.overlapping_width(n10, n11) == 1);   // l7
  CHECK(h.overlapping_width(n2, n10) == 0);
  CHECK(h.overlapping_width(n2, n1) == h.overlapping_width(n1, n2));
  CHECK_THROWS_AS(h.overlapping_width(n1, n1), std::invalid_argument);
}

TEST_CASE("linearity agrees with the pairwise definition on random hypergraphs") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 30; ++i) {
    Hypergraph h = testutil::random_hypergraph(rng, 20, 30);
    bool expected = testutil::brute_force_linear(h);
    CHECK(h.is_linear() == expected);

    // Dual formulation: linear iff every node pair has width <= 1.
    bool by_width = true;
    for (NodeId a = 0; by_width && a < h.node_count(); ++a) {
      for (NodeId b = a + 1; by_width && b < h.node_count(); ++b) {
        by_width = h.overlapping_width(a, b) <= 1;
      }
    }
    CHECK(by_width == expected);
  }
}

TEST_CASE("incidence matrix mirrors the hypergraph") {
  Hypergraph h = testutil::load_fixture();
  IncidenceMatrix r = h.incidence();
  REQUIRE(r.rows() == h.node_count());
  REQUIRE(r.cols() == h.link_count());
  CHECK(r.max_column_sum() == h.max_depth());
  for (LinkId i = 0; i < h.link_count(); ++i) {
    CHECK(r.column_sum(i) == h.overlapping_depth(i));
    auto col = r.column(i);
    CHECK(std::is_sorted(col.begin(), col.end()));
  }
  for (NodeId j = 0; j < h.node_count(); ++j) {
    CHECK(r.row_sum(j) == static_cast<int>(h.degree(j)));
  }
}

TEST_CASE("uniform depth is detected") {
  Hypergraph uniform = Hypergraph::from_links({{0, 1}, {1, 2}, {2, 0}}, 3);
  CHECK(uniform.uniform_depth() == 2);
  Hypergraph mixed = Hypergraph::from_links({{0, 1}, {1, 2, 3}}, 4);
  CHECK_FALSE(mixed.uniform_depth().has_value());
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(Hypergraph::from_memberships({}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph::from_links({}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph::from_links({{0, 5}}, 3), std::out_of_range);
  CHECK_THROWS_AS(Hypergraph::from_links({{}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph::from_links({{0}}, 1, {"a", "b"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph::from_links({{0}}, 1, {}, {"a", "b"}), std::invalid_argument);

  Hypergraph h = Hypergraph::from_links({{0, 1}}, 2);
  CHECK_THROWS_AS(h.members(1), std::out_of_range);
  CHECK_THROWS_AS(h.incident_links(2), std::out_of_range);
  CHECK_THROWS_AS(h.node_label(2), std::out_of_range);
  CHECK_THROWS_AS(h.link_label(1), std::out_of_range);
}

TEST_CASE("duplicate members within a hyperlink collapse") {
  Hypergraph h = Hypergraph::from_links({{1, 0, 1, 1}}, 2);
  CHECK(h.overlapping_depth(0) == 2);
  auto m = h.members(0);
  CHECK(std::vector<NodeId>(m.begin(), m.end()) == std::vector<NodeId>{0, 1});
}
