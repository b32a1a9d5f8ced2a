#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "plsearch/graph.hpp"

namespace plsearch {

class EdgeListParseError : public std::runtime_error {
 public:
  EdgeListParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct EdgeListData {
  Graph graph;
  /// original_ids[new_id] is the id as written in the input.
  std::vector<std::uint64_t> original_ids;
  EdgeCleanup dropped;
};

/// Reads "u v" lines; '#' lines and blank lines are skipped. Ids are
/// compacted to [0, n) in order of first appearance.
EdgeListData read_edge_list(std::istream& in);

/// Writes one "u v" line per edge with u < v, ascending.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace plsearch
