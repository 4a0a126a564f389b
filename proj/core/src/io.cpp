#include "ecg/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ecg::io {
namespace {

void require_whole(const ColoredGraph& g, const char* what) {
  if (g.order() != g.universe_size())
    throw std::invalid_argument(std::string(what) +
                                ": graph has deleted vertices; the format cannot express them");
}

// One strict field: decimal digits only, no sign, no leading blanks.
long long parse_field(std::string_view s, size_t& pos, int line, const char* what) {
  size_t start = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == start) throw ParseError(std::string("expected ") + what, line);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + pos, value);
  if (ec != std::errc{} || ptr != s.data() + pos)
    throw ParseError(std::string(what) + " out of range", line);
  return value;
}

void expect_char(std::string_view s, size_t& pos, char c, int line) {
  if (pos >= s.size() || s[pos] != c)
    throw ParseError(c == ' ' ? "expected single space" : "malformed line", line);
  ++pos;
}

struct RawEdge {
  int u, v;
  ColorId color;
};

ColoredGraph assemble(long long n, const std::vector<RawEdge>& edges,
                      const std::vector<int>& lines) {
  if (n < 0 || n > 1'000'000) throw ParseError("vertex count out of range", 1);
  ColoredGraph g(static_cast<int>(n));
  std::pair<int, int> prev{-1, -1};
  for (size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    int line = lines[i];
    if (e.u >= e.v) throw ParseError("edge endpoints must satisfy u < v", line);
    if (e.v >= n) throw ParseError("vertex index out of range", line);
    std::pair<int, int> key{e.u, e.v};
    if (key == prev) throw ParseError("duplicate edge", line);
    if (key < prev) throw ParseError("edges out of lexicographic order", line);
    prev = key;
    g.set_edge(e.u, e.v, e.color);
  }
  return g;
}

}  // namespace

std::string to_ecg_text(const ColoredGraph& g) {
  require_whole(g, "to_ecg_text");
  std::string out = "ecg " + std::to_string(g.universe_size()) + ' ' +
                    std::to_string(g.edge_count()) + '\n';
  for (const auto& [key, c] : g.edge_map()) {
    out += std::to_string(key.first);
    out += ' ';
    out += std::to_string(key.second);
    out += ' ';
    out += std::to_string(c);
    out += '\n';
  }
  return out;
}

ColoredGraph from_ecg_text(std::string_view text) {
  size_t pos = 0;
  int line = 1;
  auto next_line = [&]() -> std::string_view {
    if (pos >= text.size()) return {};
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) throw ParseError("missing trailing newline", line);
    std::string_view l = text.substr(pos, nl - pos);
    pos = nl + 1;
    return l;
  };

  if (pos >= text.size()) throw ParseError("empty input", 1);
  std::string_view header = next_line();
  if (header.substr(0, 4) != "ecg ") throw ParseError("expected 'ecg <n> <edge_count>' header", 1);
  size_t hp = 4;
  long long n = parse_field(header, hp, 1, "vertex count");
  expect_char(header, hp, ' ', 1);
  long long edge_count = parse_field(header, hp, 1, "edge count");
  if (hp != header.size()) throw ParseError("trailing characters after header", 1);

  std::vector<RawEdge> edges;
  std::vector<int> lines;
  edges.reserve(static_cast<size_t>(edge_count));
  for (long long i = 0; i < edge_count; ++i) {
    ++line;
    if (pos >= text.size()) throw ParseError("unexpected end of input", line);
    std::string_view l = next_line();
    size_t lp = 0;
    long long u = parse_field(l, lp, line, "endpoint");
    expect_char(l, lp, ' ', line);
    long long v = parse_field(l, lp, line, "endpoint");
    expect_char(l, lp, ' ', line);
    long long c = parse_field(l, lp, line, "color");
    if (lp != l.size()) throw ParseError("trailing characters", line);
    edges.push_back({static_cast<int>(u), static_cast<int>(v), c});
    lines.push_back(line);
  }
  if (pos != text.size()) throw ParseError("trailing content after edge list", line + 1);
  return assemble(n, edges, lines);
}

std::string to_json_text(const ColoredGraph& g, int indent) {
  require_whole(g, "to_json_text");
  nlohmann::json j;
  j["schema"] = 1;
  j["n"] = g.universe_size();
  auto edges = nlohmann::json::array();
  for (const auto& [key, c] : g.edge_map()) edges.push_back({key.first, key.second, c});
  j["edges"] = std::move(edges);
  return j.dump(indent);
}

ColoredGraph from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 1);
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("expected object with \"n\" and \"edges\"", 1);
  if (!j.contains("schema") || !j.at("schema").is_number_integer() ||
      j.at("schema").get<long long>() != 1)
    throw ParseError("unsupported schema version; expected 1", 1);
  long long n = j.at("n").get<long long>();
  std::vector<RawEdge> edges;
  std::vector<int> lines;
  int i = 0;
  for (const auto& e : j.at("edges")) {
    ++i;
    if (!e.is_array() || e.size() != 3) throw ParseError("edge entries must be [u,v,color]", i);
    long long u = e[0].get<long long>();
    long long v = e[1].get<long long>();
    long long c = e[2].get<long long>();
    if (u < 0 || v < 0 || c < 0) throw ParseError("negative field", i);
    edges.push_back({static_cast<int>(u), static_cast<int>(v), c});
    lines.push_back(i);
  }
  return assemble(n, edges, lines);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace ecg::io
