#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/line_graph.hpp"

namespace hyperlap {

// Membership CSV: one "individual_id,community_id" pair per line, '#' for
// comments, blank lines ignored. Malformed lines are skipped and counted.

struct ParseSummary {
  std::uint64_t valid_lines = 0;
  std::uint64_t skipped_lines = 0;
};

// In-memory parse of a whole stream. Zero valid pairs is an error.
Hypergraph parse_memberships(std::istream& in, ParseSummary* summary = nullptr);

// Streaming parse in two passes (label discovery, then fill) so large files
// never need the raw text resident. Reads gzip when the name ends in ".gz".
Hypergraph parse_memberships_file(const std::filesystem::path& path,
                                  ParseSummary* summary = nullptr);

// Canonical export: rows ordered by hyperlink id then node id. Parsing the
// output reproduces the hypergraph, and a second export is byte-identical.
void write_memberships(const Hypergraph& h, std::ostream& out);
void write_memberships_file(const Hypergraph& h, const std::filesystem::path& path);

// The individuals' social network: same construction as the line graph,
// named for the pipeline that goes membership data -> social graph.
LineGraph project_social_graph(const Hypergraph& h);

}  // namespace hyperlap
