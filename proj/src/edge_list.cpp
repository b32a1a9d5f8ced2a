#include "plsearch/edge_list.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>

namespace plsearch {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view next_token(std::string_view& rest) {
  std::size_t begin = 0;
  while (begin < rest.size() && is_space(rest[begin])) ++begin;
  std::size_t end = begin;
  while (end < rest.size() && !is_space(rest[end])) ++end;
  const std::string_view token = rest.substr(begin, end - begin);
  rest.remove_prefix(end);
  return token;
}

std::uint64_t parse_id(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw EdgeListParseError(line, "expected a non-negative integer id, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

EdgeListData read_edge_list(std::istream& in) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::string_view rest(text);
    const std::string_view first = next_token(rest);
    if (first.empty() || first.front() == '#') continue;
    const std::string_view second = next_token(rest);
    if (second.empty()) throw EdgeListParseError(line, "expected two node ids");
    if (!next_token(rest).empty()) throw EdgeListParseError(line, "unexpected trailing field");
    raw.emplace_back(parse_id(first, line), parse_id(second, line));
  }

  EdgeListData out;
  std::unordered_map<std::uint64_t, NodeId> index;
  auto compact = [&](std::uint64_t id) {
    const auto [it, inserted] = index.try_emplace(id, static_cast<NodeId>(out.original_ids.size()));
    if (inserted) {
      if (out.original_ids.size() + 1 >= kNoNode) throw EdgeListParseError(line, "too many distinct node ids");
      out.original_ids.push_back(id);
    }
    return it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [u, v] : raw) {
    const NodeId a = compact(u);
    edges.push_back({a, compact(v)});
  }
  out.graph = Graph::from_edges(out.original_ids.size(), edges, &out.dropped);
  return out;
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace plsearch
