#include "ecg/colored_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ecg {

ColoredGraph::ColoredGraph(int n) : n_(n), alive_count_(n), alive_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  adj_.assign(static_cast<size_t>(n), Bitset(n));
  for (int v = 0; v < n; ++v) alive_.set(v);
}

void ColoredGraph::require_alive(int v, const char* what) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                " outside universe [0," + std::to_string(n_) + ")");
  if (!alive_.test(v))
    throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                " was deleted");
}

void ColoredGraph::set_edge(int u, int v, ColorId color) {
  require_alive(u, "set_edge");
  require_alive(v, "set_edge");
  if (u == v) throw std::invalid_argument("set_edge: loops are not allowed");
  if (color < 0) throw std::invalid_argument("set_edge: colors must be non-negative");
  if (u > v) std::swap(u, v);
  auto [it, inserted] = edge_color_.try_emplace({u, v}, color);
  if (!inserted) {
    if (it->second == color) return;
    auto old = color_mult_.find(it->second);
    if (--old->second == 0) color_mult_.erase(old);
    it->second = color;
  }
  ++color_mult_[color];
  adj_[static_cast<size_t>(u)].set(v);
  adj_[static_cast<size_t>(v)].set(u);
}

bool ColoredGraph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  return adj_[static_cast<size_t>(u)].test(v);
}

std::optional<ColorId> ColoredGraph::find_color(int u, int v) const {
  if (!has_edge(u, v)) return std::nullopt;
  if (u > v) std::swap(u, v);
  return edge_color_.at({u, v});
}

ColorId ColoredGraph::color(int u, int v) const {
  auto c = find_color(u, v);
  if (!c)
    throw std::out_of_range("color: no edge {" + std::to_string(u) + "," + std::to_string(v) +
                            "}");
  return *c;
}

ColorId ColoredGraph::next_fresh_color() const {
  if (color_mult_.empty()) return 0;
  return color_mult_.rbegin()->first + 1;
}

bool ColoredGraph::is_complete() const {
  for (int v = alive_.find_first(); v >= 0; v = alive_.find_next(v + 1))
    if (degree(v) != alive_count_ - 1) return false;
  return true;
}

ColoredGraph ColoredGraph::without(std::span<const int> removed) const {
  Bitset gone(n_);
  for (int v : removed) {
    require_alive(v, "without");
    if (gone.test(v)) throw std::invalid_argument("without: vertex listed twice");
    gone.set(v);
  }
  ColoredGraph g(*this);
  if (removed.empty()) return g;
  g.alive_ -= gone;
  g.alive_count_ -= gone.count();
  for (int v = 0; v < n_; ++v) {
    if (gone.test(v))
      g.adj_[static_cast<size_t>(v)].clear();
    else
      g.adj_[static_cast<size_t>(v)] -= gone;
  }
  for (auto it = g.edge_color_.begin(); it != g.edge_color_.end();) {
    auto [u, v] = it->first;
    if (gone.test(u) || gone.test(v)) {
      auto mult = g.color_mult_.find(it->second);
      if (--mult->second == 0) g.color_mult_.erase(mult);
      it = g.edge_color_.erase(it);
    } else {
      ++it;
    }
  }
  return g;
}

bool ColoredGraph::is_rainbow_clique(std::span<const int> s) const {
  std::vector<int> verts(s.begin(), s.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts)
    if (!is_alive(v)) return false;
  std::vector<ColorId> seen;
  seen.reserve(verts.size() * (verts.size() - 1) / 2);
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j) {
      auto c = find_color(verts[i], verts[j]);
      if (!c) return false;
      seen.push_back(*c);
    }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

std::vector<Edge> ColoredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_color_.size());
  for (const auto& [key, c] : edge_color_) out.push_back({key.first, key.second, c});
  return out;
}

std::vector<ColorId> ColoredGraph::palette() const {
  std::vector<ColorId> out;
  out.reserve(color_mult_.size());
  for (const auto& [c, mult] : color_mult_) out.push_back(c);
  return out;
}

ColoredGraph complete_graph(int n, ColorId color) {
  ColoredGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_edge(u, v, color);
  return g;
}

}  // namespace ecg
