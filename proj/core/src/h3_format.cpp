#include <algorithm>
#include <set>
#include <unordered_map>

#include "tricover/errors.hpp"
#include "tricover/hypergraph.hpp"

namespace tricover {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

bool is_token_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

Hypergraph parse_h3(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 3) {
      throw ParseError(line_no, "expected 3 vertex tokens, found " + std::to_string(tokens.size()));
    }
    Edge e{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!std::all_of(tokens[i].begin(), tokens[i].end(), is_token_char)) {
        throw ParseError(line_no, "invalid vertex token '" + std::string(tokens[i]) + "'");
      }
      auto [it, inserted] = ids.emplace(std::string(tokens[i]), static_cast<VertexId>(labels.size()));
      if (inserted) labels.emplace_back(tokens[i]);
      e[i] = it->second;
    }
    if (e[0] == e[1] || e[0] == e[2] || e[1] == e[2]) {
      throw ParseError(line_no, "repeated vertex in edge");
    }
    if (!seen.insert(sorted(e)).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back(e);
  }
  return Hypergraph(std::move(labels), std::move(edges));
}

std::string serialize_h3(const Hypergraph& h) {
  std::string out;
  for (const Edge& e : h.edges()) {
    out += h.label(e[0]);
    out += ' ';
    out += h.label(e[1]);
    out += ' ';
    out += h.label(e[2]);
    out += '\n';
  }
  return out;
}

}  // namespace tricover
