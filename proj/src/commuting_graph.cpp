#include "splitdec/commuting_graph.hpp"

#include <algorithm>

#include "splitdec/errors.hpp"

namespace splitdec {

CommutingGraph CommutingGraph::prepare(const Group& G, std::vector<Elem> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  CommutingGraph g;
  g.G_ = G;
  g.pos_.assign(G.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= G.order()) throw ValidationError("vertex " + std::to_string(vertices[i]) + " not in group");
    g.pos_[vertices[i]] = static_cast<std::int32_t>(i);
  }
  g.verts_ = std::move(vertices);
  g.adj_.resize(g.verts_.size());
  // the centralizer table is built once here, outside any parallel region
  if (!g.verts_.empty()) G.centralizer_of(g.verts_.front());
  return g;
}

void CommutingGraph::fill(Local v) {
  const Elem x = verts_[v];
  auto& out = adj_[v];
  for (Elem y : G_.centralizer_of(x)) {
    const std::int32_t p = pos_[y];
    if (p >= 0 && y != x) out.push_back(static_cast<Local>(p));
  }
  // centralizers are sorted by element and local ids preserve that order
}

CommutingGraph CommutingGraph::build(const Group& G, std::vector<Elem> vertices) {
  CommutingGraph g = prepare(G, std::move(vertices));
  const long n = static_cast<long>(g.verts_.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (long v = 0; v < n; ++v) g.fill(static_cast<Local>(v));
  return g;
}

CommutingGraph CommutingGraph::build_serial(const Group& G, std::vector<Elem> vertices) {
  CommutingGraph g = prepare(G, std::move(vertices));
  for (std::size_t v = 0; v < g.verts_.size(); ++v) g.fill(static_cast<Local>(v));
  return g;
}

std::optional<CommutingGraph::Local> CommutingGraph::local(Elem x) const {
  if (x >= pos_.size() || pos_[x] < 0) return std::nullopt;
  return static_cast<Local>(pos_[x]);
}

bool CommutingGraph::adjacent(Local u, Local v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::size_t CommutingGraph::edge_count() const {
  std::size_t s = 0;
  for (const auto& a : adj_) s += a.size();
  return s / 2;
}

std::vector<std::vector<CommutingGraph::Local>> component_locals(const CommutingGraph& g) {
  using Local = CommutingGraph::Local;
  std::vector<std::vector<Local>> out;
  std::vector<char> seen(g.size(), 0);
  for (Local s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Local> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Local w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<Elem>> components(const CommutingGraph& g) {
  std::vector<std::vector<Elem>> out;
  for (const auto& c : component_locals(g)) {
    std::vector<Elem> e;
    e.reserve(c.size());
    for (auto v : c) e.push_back(g.element(v));
    out.push_back(std::move(e));
  }
  return out;
}

std::string export_dot(const CommutingGraph& g) {
  if (g.size() == 0) return "graph { }\n";
  std::string out = "graph {\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    out += "  v" + std::to_string(g.element(v)) + " [label=\"" + g.group().label(g.element(v)) + "\"];\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    for (auto w : g.neighbors(v))
      if (w > v) out += "  v" + std::to_string(g.element(v)) + " -- v" + std::to_string(g.element(w)) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace splitdec
