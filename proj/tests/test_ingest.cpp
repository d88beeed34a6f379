#include <doctest.h>

#include <zlib.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "hyperlap/membership_io.hpp"

using namespace hyperlap;

namespace {

namespace fs = std::filesystem;

// Unique scratch file that cleans up after itself.
struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name) : path(fs::temp_directory_path() / name) {}
  ~TempFile() { std::error_code ec; fs::remove(path, ec); }
};

std::string export_text(const Hypergraph& h) {
  std::ostringstream out;
  write_memberships(h, out);
  return out.str();
}

}  // namespace

TEST_CASE("fixture file parses to the expected shape") {
  ParseSummary summary;
  Hypergraph h = parse_memberships_file(testutil::fixture_path(), &summary);
  CHECK(h.node_count() == 12);
  CHECK(h.link_count() == 54);
  CHECK(h.membership_count() == 66);
  CHECK(summary.valid_lines == 66);
  CHECK(summary.skipped_lines == 0);

  // Labels survive: l1 is the individual sitting in five communities.
  auto l1 = h.find_link("l1");
  REQUIRE(l1.has_value());
  CHECK(h.overlapping_depth(*l1) == 5);
  auto n1 = h.find_node("n1");
  REQUIRE(n1.has_value());
  CHECK(h.degree(*n1) == 6);
  CHECK_FALSE(h.find_node("n13").has_value());
  CHECK_FALSE(h.find_link("nope").has_value());
}

TEST_CASE("stream parsing builds shared communities") {
  std::istringstream in("u1,c1\nu1,c2\nu2,c1\n");
  Hypergraph h = parse_memberships(in);
  CHECK(h.node_count() == 2);
  CHECK(h.link_count() == 2);
  auto u1 = h.find_link("u1");
  REQUIRE(u1.has_value());
  CHECK(h.overlapping_depth(*u1) == 2);
  auto u2 = h.find_link("u2");
  REQUIRE(u2.has_value());
  CHECK(h.overlapping_depth(*u2) == 1);
  CHECK(h.overlapping_width(*h.find_node("c1"), *h.find_node("c2")) == 1);
}

TEST_CASE("malformed lines are skipped and counted") {
  std::istringstream in(
      "# roster\n"
      "\n"
      "u1,c1\n"
      "not a pair\n"
      "u2,c1\n"
      "a,b,c\n"
      " , \n"
      "u3 , c2 \n");
  ParseSummary summary;
  Hypergraph h = parse_memberships(in, &summary);
  CHECK(summary.valid_lines == 3);  // u1, u2, and the whitespace-padded u3
  CHECK(summary.skipped_lines == 3);
  CHECK(h.link_count() == 3);
  CHECK(h.find_link("u3").has_value());  // fields are trimmed
}

TEST_CASE("a file with no usable rows is an error") {
  std::istringstream in("# only comments\n\ngibberish\n");
  CHECK_THROWS_WITH_AS(parse_memberships(in), "no valid membership lines",
                       std::runtime_error);
}

TEST_CASE("duplicate pairs collapse") {
  std::istringstream in("u1,c1\nu1,c1\nu1,c2\nu2,c1\n");
  ParseSummary summary;
  Hypergraph h = parse_memberships(in, &summary);
  CHECK(summary.valid_lines == 4);  // duplicates are valid input...
  CHECK(h.membership_count() == 3); // ...but stored once
}

TEST_CASE("stream and file parsers agree") {
  ParseSummary from_file;
  Hypergraph a = parse_memberships_file(testutil::fixture_path(), &from_file);

  std::ifstream in(testutil::fixture_path());
  REQUIRE(in.good());
  ParseSummary from_stream;
  Hypergraph b = parse_memberships(in, &from_stream);

  CHECK(from_file.valid_lines == from_stream.valid_lines);
  CHECK(from_file.skipped_lines == from_stream.skipped_lines);
  CHECK(export_text(a) == export_text(b));
}

TEST_CASE("export is canonical and round trips") {
  Hypergraph h = testutil::load_fixture();
  std::string once = export_text(h);

  std::istringstream back(once);
  Hypergraph h2 = parse_memberships(back);
  CHECK(export_text(h2) == once);  // byte-identical fixed point

  // Shuffled input converges to the same canonical bytes.
  std::istringstream shuffled("u2,c9\nu1,c2\nu1,c1\nu2,c1\n");
  std::istringstream ordered("u1,c1\nu1,c2\nu2,c1\nu2,c9\n");
  CHECK(export_text(parse_memberships(shuffled)) ==
        export_text(parse_memberships(ordered)));
}

TEST_CASE("file export matches stream export") {
  Hypergraph h = testutil::load_fixture();
  TempFile tmp("hyperlap_ingest_export.csv");
  write_memberships_file(h, tmp.path);
  std::ifstream in(tmp.path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == export_text(h));
}

TEST_CASE("gzip input parses identically to plain text") {
  std::string text = export_text(testutil::load_fixture());

  TempFile gz("hyperlap_ingest_test.csv.gz");
  gzFile out = gzopen(gz.path.string().c_str(), "wb");
  REQUIRE(out != nullptr);
  REQUIRE(gzwrite(out, text.data(), static_cast<unsigned>(text.size())) ==
          static_cast<int>(text.size()));
  gzclose(out);

  ParseSummary summary;
  Hypergraph h = parse_memberships_file(gz.path, &summary);
  CHECK(summary.valid_lines == 66);
  CHECK(export_text(h) == text);
}

TEST_CASE("missing file reports the path") {
  CHECK_THROWS_AS(parse_memberships_file("/nonexistent/whatever.csv"),
                  std::runtime_error);
}

TEST_CASE("social projection is the line graph") {
  Hypergraph h = testutil::load_fixture();
  LineGraph social = project_social_graph(h);
  LineGraph lg = LineGraph::from_hypergraph(h);
  CHECK(social.node_count() == lg.node_count());
  REQUIRE(social.edge_count() == lg.edge_count());
  for (std::size_t i = 0; i < lg.edge_count(); ++i) {
    CHECK(social.edges()[i] == lg.edges()[i]);
  }
}

TEST_CASE("projection keeps shared-community multiplicity") {
  // u1 and u2 belong to two common communities: one edge of weight 2.
  std::istringstream in("u1,c1\nu1,c2\nu2,c1\nu2,c2\n");
  LineGraph g = project_social_graph(parse_memberships(in));
  CHECK(g.node_count() == 2);
  REQUIRE(g.edge_count() == 1);
  CHECK(g.edges()[0].weight == 2);
  CHECK(g.is_weighted());
}
