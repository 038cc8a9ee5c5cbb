#ifndef PI2_GRAPH_HPP_
#define PI2_GRAPH_HPP_

#include "pi2/rewrite.hpp"

namespace pi2 {

// One edge of the rewriting graph, stored in the forward orientation: `step`
// applies to vertex `u` (where the relation's lhs sits) and yields `v`.
struct GraphEdge {
  size_t u = 0;
  size_t v = 0;
  ElementaryStep step;
  bool tree = false;  // spanning-tree edge
};

// A loop in a rewriting-graph component; replaying the steps from base
// returns to base.
struct ClosedPath {
  Word base;
  std::vector<ElementaryStep> steps;
};

// One connected component of the rewriting graph, materialized by BFS with a
// spanning tree.  Distinct relation applications between the same word pair
// (different label or offset) are kept as parallel edges: each one is its own
// potential inertia generator.
class RewriteGraph {
 public:
  Word const& root() const { return vertices_[0]; }
  std::vector<Word> const& vertices() const { return vertices_; }
  std::vector<GraphEdge> const& edges() const { return edges_; }
  bool exhaustive() const { return exhaustive_; }
  Bound bound_hit() const { return bound_; }

  std::optional<size_t> index_of(Word const& w) const;
  bool contains(Word const& w) const { return index_.count(w) > 0; }

  // True when every neighbor of the vertex was materialized.
  bool expanded(size_t vertex) const { return expanded_[vertex]; }

  // Shortest witness from the root along the spanning tree.
  Witness witness_to(size_t vertex) const;
  // Steps of the spanning-tree path between two vertices.
  std::vector<ElementaryStep> tree_path(size_t from, size_t to) const;

  size_t cycle_rank() const;  // |edges| - |vertices| + 1 for exhaustive graphs

 private:
  friend RewriteGraph build_component(Presentation const&, Word const&, SearchLimits const&);

  std::vector<Word> vertices_;
  std::vector<GraphEdge> edges_;
  std::vector<int32_t> parent_;
  std::vector<ElementaryStep> parent_step_;
  std::vector<int32_t> depth_;
  std::vector<bool> expanded_;
  std::unordered_map<Word, size_t, WordHash> index_;
  bool exhaustive_ = false;
  Bound bound_ = Bound::none;
};

RewriteGraph build_component(Presentation const& p, Word const& w, SearchLimits const& limits);

// True iff the exhaustive component is a tree (trivial local inertia).
bool is_tree(RewriteGraph const& g);

// Fundamental cycles of the spanning tree, one per non-tree edge, based at
// the component root.
std::vector<ClosedPath> cycle_basis(Presentation const& p, RewriteGraph const& g);

// Graphviz DOT rendering; vertices with unexplored neighbors are dashed.
std::string export_dot(Presentation const& p, RewriteGraph const& g);

nlohmann::json component_report(Presentation const& p, RewriteGraph const& g);

}  // namespace pi2

#endif  // PI2_GRAPH_HPP_
