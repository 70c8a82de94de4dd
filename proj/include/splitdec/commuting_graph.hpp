#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splitdec/group.hpp"

namespace splitdec {

// Graph on a subset of a group's elements, x ~ y iff x != y and xy = yx.
// Vertices are addressed locally as 0..size()-1 in increasing element order;
// adjacency lists hold local ids and are sorted.
class CommutingGraph {
 public:
  using Local = std::uint32_t;

  // Neighbour lists come from the group's centralizer table. The parallel
  // build splits the vertex loop across OpenMP threads; both give equal graphs.
  static CommutingGraph build(const Group& G, std::vector<Elem> vertices);
  static CommutingGraph build_serial(const Group& G, std::vector<Elem> vertices);

  const Group& group() const { return G_; }
  std::size_t size() const { return verts_.size(); }
  const std::vector<Elem>& vertices() const { return verts_; }
  Elem element(Local v) const { return verts_[v]; }
  std::optional<Local> local(Elem x) const;
  const std::vector<Local>& neighbors(Local v) const { return adj_[v]; }
  const std::vector<std::vector<Local>>& adjacency() const { return adj_; }
  bool adjacent(Local u, Local v) const;
  std::size_t edge_count() const;

  bool operator==(const CommutingGraph& o) const { return verts_ == o.verts_ && adj_ == o.adj_; }

 private:
  Group G_;
  std::vector<Elem> verts_;
  std::vector<std::int32_t> pos_;  // element -> local id or -1
  std::vector<std::vector<Local>> adj_;

  static CommutingGraph prepare(const Group& G, std::vector<Elem> vertices);
  void fill(Local v);
};

// Connected components as sorted local-id lists, ordered by least vertex.
std::vector<std::vector<CommutingGraph::Local>> component_locals(const CommutingGraph& g);
// The same components as element ids.
std::vector<std::vector<Elem>> components(const CommutingGraph& g);

// Graphviz text: nodes labelled by cycle notation, in vertex order.
std::string export_dot(const CommutingGraph& g);

}  // namespace splitdec
