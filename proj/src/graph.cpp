#include "pi2/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace pi2 {

std::optional<size_t> RewriteGraph::index_of(Word const& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Witness RewriteGraph::witness_to(size_t vertex) const {
  std::vector<ElementaryStep> steps;
  size_t v = vertex;
  while (parent_[v] >= 0) {
    steps.push_back(parent_step_[v]);
    v = static_cast<size_t>(parent_[v]);
  }
  std::reverse(steps.begin(), steps.end());
  return Witness{vertices_[0], std::move(steps)};
}

std::vector<ElementaryStep> RewriteGraph::tree_path(size_t from, size_t to) const {
  // Climb to equal depth, then climb in lockstep to the meeting point.
  std::vector<ElementaryStep> up;    // from -> lca: flipped parent steps
  std::vector<ElementaryStep> down;  // to -> lca: parent steps, reversed later
  size_t a = from;
  size_t b = to;
  while (depth_[a] > depth_[b]) {
    up.push_back(flip_step(parent_step_[a]));
    a = static_cast<size_t>(parent_[a]);
  }
  while (depth_[b] > depth_[a]) {
    down.push_back(parent_step_[b]);
    b = static_cast<size_t>(parent_[b]);
  }
  while (a != b) {
    up.push_back(flip_step(parent_step_[a]));
    a = static_cast<size_t>(parent_[a]);
    down.push_back(parent_step_[b]);
    b = static_cast<size_t>(parent_[b]);
  }
  std::reverse(down.begin(), down.end());
  up.insert(up.end(), down.begin(), down.end());
  return up;
}

size_t RewriteGraph::cycle_rank() const {
  if (!exhaustive_) {
    throw error("cycle rank is undefined on a truncated component");
  }
  return edges_.size() - vertices_.size() + 1;
}

RewriteGraph build_component(Presentation const& p, Word const& w, SearchLimits const& limits) {
  if (limits.max_states < 1) {
    throw error("max_states must be >= 1");
  }
  RewriteGraph g;
  g.vertices_.push_back(w);
  g.parent_.push_back(-1);
  g.parent_step_.push_back({});
  g.depth_.push_back(0);
  g.expanded_.push_back(false);
  g.index_.emplace(w, 0);

  if (w.size() > limits.max_word_length) {
    g.bound_ = Bound::word_length;
    return g;
  }

  // Edge identity: forward-source vertex, relation, window offset.
  std::set<std::tuple<size_t, int32_t, int32_t>> edge_keys;
  auto record_edge = [&](size_t cur, size_t nxt, ElementaryStep const& s, bool tree) {
    size_t fu = s.forward ? cur : nxt;
    size_t fv = s.forward ? nxt : cur;
    ElementaryStep fwd{s.prefix_len, s.relation, true};
    if (edge_keys.emplace(fu, s.relation, s.prefix_len).second) {
      g.edges_.push_back({fu, fv, fwd, tree});
    }
  };

  bool truncated = false;
  Bound bound = Bound::none;
  std::deque<size_t> frontier{0};
  while (!frontier.empty()) {
    size_t cur = frontier.front();
    frontier.pop_front();
    if (limits.max_depth != 0 && static_cast<size_t>(g.depth_[cur]) >= limits.max_depth) {
      truncated = true;
      bound = (bound == Bound::none) ? Bound::depth : bound;
      continue;
    }
    Word const word = g.vertices_[cur];
    bool complete = true;
    for (auto const& s : applicable_steps(p, word)) {
      Word next = apply_step(p, word, s);
      auto it = g.index_.find(next);
      if (it != g.index_.end()) {
        record_edge(cur, it->second, s, false);
        continue;
      }
      if (next.size() > limits.max_word_length) {
        truncated = true;
        complete = false;
        bound = (bound == Bound::none) ? Bound::word_length : bound;
        continue;
      }
      if (g.vertices_.size() >= limits.max_states) {
        truncated = true;
        complete = false;
        bound = Bound::states;
        frontier.clear();
        break;
      }
      size_t id = g.vertices_.size();
      g.index_.emplace(next, id);
      g.vertices_.push_back(std::move(next));
      g.parent_.push_back(static_cast<int32_t>(cur));
      g.parent_step_.push_back(s);
      g.depth_.push_back(g.depth_[cur] + 1);
      g.expanded_.push_back(false);
      record_edge(cur, id, s, true);
      frontier.push_back(id);
    }
    g.expanded_[cur] = complete;
  }
  g.exhaustive_ = !truncated;
  g.bound_ = bound;
  return g;
}

bool is_tree(RewriteGraph const& g) {
  if (!g.exhaustive()) {
    throw error("tree-ness is undecidable on a truncated component");
  }
  return g.edges().size() == g.vertices().size() - 1;
}

std::vector<ClosedPath> cycle_basis(Presentation const& p, RewriteGraph const& g) {
  if (!g.exhaustive()) {
    throw error("cycle basis requires an exhaustive component");
  }
  std::vector<ClosedPath> basis;
  for (auto const& e : g.edges()) {
    if (e.tree) {
      continue;
    }
    ClosedPath loop;
    loop.base = g.root();
    loop.steps = g.tree_path(0, e.u);
    loop.steps.push_back(e.step);
    auto back = g.tree_path(e.v, 0);
    loop.steps.insert(loop.steps.end(), back.begin(), back.end());
    // Every emitted loop must replay to its base.
    Word end = replay_witness(p, Witness{loop.base, loop.steps});
    if (end != loop.base) {
      throw error("internal: cycle-basis loop does not close");
    }
    basis.push_back(std::move(loop));
  }
  return basis;
}

nlohmann::json component_report(Presentation const& p, RewriteGraph const& g) {
  nlohmann::json j;
  j["root"] = format_word(p, g.root());
  j["vertices"] = nlohmann::json::array();
  for (auto const& v : g.vertices()) {
    j["vertices"].push_back(format_word(p, v));
  }
  j["edges"] = nlohmann::json::array();
  for (auto const& e : g.edges()) {
    j["edges"].push_back({{"u", format_word(p, g.vertices()[e.u])},
                          {"v", format_word(p, g.vertices()[e.v])},
                          {"label", p.relation(e.step.relation).label},
                          {"offset", e.step.prefix_len}});
  }
  j["exhaustive"] = g.exhaustive();
  if (g.exhaustive()) {
    j["tree"] = is_tree(g);
    j["cycle_rank"] = g.cycle_rank();
  } else {
    j["tree"] = nullptr;
    j["cycle_rank"] = nullptr;
  }
  return j;
}

std::string export_dot(Presentation const& p, RewriteGraph const& g) {
  std::ostringstream out;
  out << "graph rewrite_component {\n";
  out << "  node [shape=box];\n";
  for (size_t i = 0; i < g.vertices().size(); ++i) {
    out << "  n" << i << " [label=\"" << format_word(p, g.vertices()[i]) << "\"";
    if (!g.expanded(i)) {
      out << ", style=dashed";
    }
    out << "];\n";
  }
  for (auto const& e : g.edges()) {
    out << "  n" << e.u << " -- n" << e.v << " [label=\"" << p.relation(e.step.relation).label
        << "\", dir=forward];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pi2
