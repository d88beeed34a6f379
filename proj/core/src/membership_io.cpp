#include "hyperlap/membership_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperlap {

namespace {

std::string_view trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Feeds lines one at a time; file-backed variants can be reopened for the
// second pass.
class LineSource {
 public:
  virtual ~LineSource() = default;
  virtual bool next(std::string& line) = 0;
};

class FileSource : public LineSource {
 public:
  explicit FileSource(const std::filesystem::path& path) : in_(path) {
    if (!in_) throw std::runtime_error("cannot open " + path.string());
  }
  bool next(std::string& line) override { return static_cast<bool>(std::getline(in_, line)); }

 private:
  std::ifstream in_;
};

class GzSource : public LineSource {
 public:
  explicit GzSource(const std::filesystem::path& path)
      : file_(gzopen(path.c_str(), "rb")), path_(path.string()) {
    if (file_ == nullptr) throw std::runtime_error("cannot open " + path_);
  }
  ~GzSource() override {
    if (file_ != nullptr) gzclose(file_);
  }
  GzSource(const GzSource&) = delete;
  GzSource& operator=(const GzSource&) = delete;

  bool next(std::string& line) override {
    line.clear();
    char buf[1 << 14];
    while (true) {
      if (gzgets(file_, buf, sizeof buf) == nullptr) {
        int err = 0;
        const char* msg = gzerror(file_, &err);
        if (err != Z_OK && err != Z_STREAM_END) {
          throw std::runtime_error("gzip read error in " + path_ + ": " + msg);
        }
        return !line.empty();
      }
      line += buf;
      if (!line.empty() && line.back() == '\n') {
        line.pop_back();
        return true;
      }
    }
  }

 private:
  gzFile file_;
  std::string path_;
};

std::unique_ptr<LineSource> open_source(const std::filesystem::path& path) {
  if (path.extension() == ".gz") return std::make_unique<GzSource>(path);
  return std::make_unique<FileSource>(path);
}

class IstreamSource : public LineSource {
 public:
  explicit IstreamSource(std::istream& in) : in_(in) {}
  bool next(std::string& line) override { return static_cast<bool>(std::getline(in_, line)); }

 private:
  std::istream& in_;
};

// One pass over the text: hands (individual, community) fields of each
// well-formed line to on_pair, counts the rest.
void scan(LineSource& src, ParseSummary& summary,
          const std::function<void(std::string_view, std::string_view)>& on_pair) {
  std::string line;
  while (src.next(line)) {
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::size_t comma = body.find(',');
    if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) {
      ++summary.skipped_lines;
      continue;
    }
    std::string_view individual = trim(body.substr(0, comma));
    std::string_view community = trim(body.substr(comma + 1));
    if (individual.empty() || community.empty()) {
      ++summary.skipped_lines;
      continue;
    }
    on_pair(individual, community);
    ++summary.valid_lines;
  }
}

std::uint32_t lookup(const std::vector<std::string>& sorted, std::string_view label) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), label);
  return static_cast<std::uint32_t>(it - sorted.begin());
}

Hypergraph two_pass_parse(const std::function<std::unique_ptr<LineSource>()>& open,
                          ParseSummary* summary) {
  // Pass 1: label discovery.
  std::vector<std::string> link_labels, node_labels;
  ParseSummary first;
  {
    auto src = open();
    scan(*src, first, [&](std::string_view individual, std::string_view community) {
      link_labels.emplace_back(individual);
      node_labels.emplace_back(community);
    });
  }
  if (first.valid_lines == 0) throw std::runtime_error("no valid membership lines");
  auto dedup = [](std::vector<std::string>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(link_labels);
  dedup(node_labels);

  // Pass 2: fill with dense ids.
  std::vector<std::vector<NodeId>> links(link_labels.size());
  ParseSummary second;
  {
    auto src = open();
    scan(*src, second, [&](std::string_view individual, std::string_view community) {
      links[lookup(link_labels, individual)].push_back(lookup(node_labels, community));
    });
  }
  if (second.valid_lines != first.valid_lines || second.skipped_lines != first.skipped_lines) {
    throw std::runtime_error("input changed between parse passes");
  }
  if (summary != nullptr) *summary = second;

  std::size_t node_count = node_labels.size();
  return Hypergraph::from_links(std::move(links), node_count, std::move(link_labels),
                                std::move(node_labels));
}

}  // namespace

Hypergraph parse_memberships(std::istream& in, ParseSummary* summary) {
  std::vector<Membership> pairs;
  ParseSummary local;
  IstreamSource src(in);
  scan(src, local, [&](std::string_view individual, std::string_view community) {
    pairs.push_back({std::string(individual), std::string(community)});
  });
  if (local.valid_lines == 0) throw std::runtime_error("no valid membership lines");
  if (summary != nullptr) *summary = local;
  return Hypergraph::from_memberships(pairs);
}

Hypergraph parse_memberships_file(const std::filesystem::path& path, ParseSummary* summary) {
  return two_pass_parse([&path] { return open_source(path); }, summary);
}

void write_memberships(const Hypergraph& h, std::ostream& out) {
  for (LinkId i = 0; i < h.link_count(); ++i) {
    for (NodeId j : h.members(i)) {
      out << h.link_label(i) << ',' << h.node_label(j) << '\n';
    }
  }
}

void write_memberships_file(const Hypergraph& h, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_memberships(h, out);
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

LineGraph project_social_graph(const Hypergraph& h) {
  return LineGraph::from_hypergraph(h);
}

}  // namespace hyperlap
