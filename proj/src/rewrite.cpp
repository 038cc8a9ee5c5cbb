#include "pi2/rewrite.hpp"

#include <algorithm>
#include <deque>

namespace pi2 {

SearchLimits SearchLimits::for_pair(Presentation const& p, Word const& u, Word const& v) {
  SearchLimits lim;
  lim.max_word_length = u.size() + v.size() + 2 * p.longest_relation_side();
  lim.max_states = 200000;
  lim.max_depth = 0;
  return lim;
}

namespace {

Word const& side(Relation const& r, bool forward, bool source) {
  return (forward == source) ? r.lhs : r.rhs;
}

bool occurs_at(Word const& w, Word const& pat, size_t offset) {
  if (offset + pat.size() > w.size()) {
    return false;
  }
  return std::equal(pat.begin(), pat.end(), w.begin() + offset);
}

}  // namespace

std::vector<ElementaryStep> applicable_steps(Presentation const& p, Word const& w) {
  std::vector<ElementaryStep> out;
  for (size_t offset = 0; offset <= w.size(); ++offset) {
    for (int rel : p.relations_by_label()) {
      Relation const& r = p.relation(rel);
      for (bool forward : {true, false}) {
        Word const& src = side(r, forward, true);
        if (occurs_at(w, src, offset)) {
          out.push_back({static_cast<int32_t>(offset), rel, forward});
        }
      }
    }
  }
  return out;
}

bool step_applies(Presentation const& p, Word const& w, ElementaryStep const& s) {
  if (s.relation < 0 || s.relation >= static_cast<int>(p.relations().size()) || s.prefix_len < 0) {
    return false;
  }
  Word const& src = side(p.relation(s.relation), s.forward, true);
  return occurs_at(w, src, static_cast<size_t>(s.prefix_len));
}

Word apply_step(Presentation const& p, Word const& w, ElementaryStep const& s) {
  if (!step_applies(p, w, s)) {
    throw error("elementary step does not apply: relation " +
                (s.relation >= 0 && s.relation < static_cast<int>(p.relations().size())
                     ? p.relation(s.relation).label
                     : std::to_string(s.relation)) +
                (s.forward ? "" : "^-1") + " at offset " + std::to_string(s.prefix_len) +
                " in word \"" + format_word(p, w) + "\"");
  }
  Relation const& r = p.relation(s.relation);
  Word const& src = side(r, s.forward, true);
  Word const& tgt = side(r, s.forward, false);
  Word out;
  out.reserve(w.size() - src.size() + tgt.size());
  out.insert(out.end(), w.begin(), w.begin() + s.prefix_len);
  out.insert(out.end(), tgt.begin(), tgt.end());
  out.insert(out.end(), w.begin() + s.prefix_len + src.size(), w.end());
  return out;
}

ElementaryStep flip_step(ElementaryStep const& s) {
  return {s.prefix_len, s.relation, !s.forward};
}

Word replay_witness(Presentation const& p, Witness const& wit) {
  Word w = wit.start;
  for (size_t i = 0; i < wit.steps.size(); ++i) {
    if (!step_applies(p, w, wit.steps[i])) {
      throw error("witness replay failed at step " + std::to_string(i) + " on word \"" +
                  format_word(p, w) + "\"");
    }
    w = apply_step(p, w, wit.steps[i]);
  }
  return w;
}

Witness invert_witness(Presentation const& p, Witness const& wit) {
  // Replay forwards, then reverse with flipped orientations; the prefix
  // length of each step is unchanged because the flipped step rewrites the
  // same window back.
  Word w = replay_witness(p, wit);
  Witness out;
  out.start = w;
  for (size_t i = wit.steps.size(); i-- > 0;) {
    out.steps.push_back(flip_step(wit.steps[i]));
  }
  return out;
}

Witness embed_witness(Presentation const& p, Word const& left, Witness const& wit,
                      Word const& right) {
  Witness out;
  out.start = concat(left, wit.start, right);
  out.steps = wit.steps;
  for (auto& s : out.steps) {
    s.prefix_len += static_cast<int32_t>(left.size());
  }
  // Sanity: the embedded certificate must still replay.
  replay_witness(p, out);
  return out;
}

Witness concat_witness(Presentation const& p, Witness const& w1, Witness const& w2) {
  if (replay_witness(p, w1) != w2.start) {
    throw error("witness concatenation: end of first does not match start of second");
  }
  Witness out;
  out.start = w1.start;
  out.steps = w1.steps;
  out.steps.insert(out.steps.end(), w2.steps.begin(), w2.steps.end());
  return out;
}

std::optional<size_t> ClassEnumeration::index_of(Word const& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Witness ClassEnumeration::witness_to(size_t vertex) const {
  std::vector<ElementaryStep> steps;
  size_t v = vertex;
  while (parent_[v] >= 0) {
    steps.push_back(parent_step_[v]);
    v = static_cast<size_t>(parent_[v]);
  }
  std::reverse(steps.begin(), steps.end());
  return Witness{words_[0], std::move(steps)};
}

Word const& ClassEnumeration::representative() const {
  size_t best = 0;
  for (size_t i = 1; i < words_.size(); ++i) {
    if (words_[i] < words_[best]) {
      best = i;
    }
  }
  return words_[best];
}

// Shared BFS core.  Expands the class of `root` in deterministic order until
// the frontier empties or a limit fires; when `target` is given, stops as
// soon as it is discovered.
ClassEnumeration detail_bfs_class(Presentation const& p, Word const& root,
                                  SearchLimits const& limits, Word const* target) {
  ClassEnumeration g;
  g.exhaustive_ = false;
  g.bound_ = Bound::none;

  if (limits.max_states < 1) {
    throw error("max_states must be >= 1");
  }
  g.words_.push_back(root);
  g.parent_.push_back(-1);
  g.parent_step_.push_back({});
  g.depth_.push_back(0);
  g.index_.emplace(root, 0);

  if (target != nullptr && *target == root) {
    g.exhaustive_ = false;  // enumeration stopped early by the target
    return g;
  }
  if (root.size() > limits.max_word_length) {
    g.bound_ = Bound::word_length;
    return g;
  }

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
    Word const w = g.words_[cur];  // copy: words_ may reallocate below
    for (auto const& s : applicable_steps(p, w)) {
      Word next = apply_step(p, w, s);
      if (g.index_.count(next) > 0) {
        continue;
      }
      if (next.size() > limits.max_word_length) {
        truncated = true;
        bound = (bound == Bound::none) ? Bound::word_length : bound;
        continue;
      }
      if (g.words_.size() >= limits.max_states) {
        truncated = true;
        bound = Bound::states;
        frontier.clear();
        break;
      }
      size_t id = g.words_.size();
      g.index_.emplace(next, id);
      g.words_.push_back(std::move(next));
      g.parent_.push_back(static_cast<int32_t>(cur));
      g.parent_step_.push_back(s);
      g.depth_.push_back(g.depth_[cur] + 1);
      if (target != nullptr && g.words_[id] == *target) {
        return g;  // early exit: not exhaustive, no bound
      }
      frontier.push_back(id);
    }
  }
  g.exhaustive_ = !truncated;
  g.bound_ = bound;
  return g;
}

ClassEnumeration enumerate_class(Presentation const& p, Word const& w,
                                 SearchLimits const& limits) {
  return detail_bfs_class(p, w, limits, nullptr);
}

EquivalenceVerdict decide_equivalent(Presentation const& p, Word const& u, Word const& v,
                                     SearchLimits const& limits) {
  EquivalenceVerdict verdict;
  ClassEnumeration g = detail_bfs_class(p, u, limits, &v);
  if (auto idx = g.index_of(v)) {
    verdict.kind = VerdictKind::equivalent;
    verdict.witness = g.witness_to(*idx);
    return verdict;
  }
  if (g.exhaustive()) {
    verdict.kind = VerdictKind::inequivalent;
    verdict.class_certificate = g.words();
    return verdict;
  }
  verdict.kind = VerdictKind::unknown;
  verdict.bound = g.bound_hit();
  return verdict;
}

EquivalenceVerdict decide_equivalent(Presentation const& p, Word const& u, Word const& v) {
  return decide_equivalent(p, u, v, SearchLimits::for_pair(p, u, v));
}

DistanceResult distance(Presentation const& p, Word const& u, Word const& v,
                        SearchLimits const& limits) {
  DistanceResult out;
  out.verdict = decide_equivalent(p, u, v, limits);
  if (out.verdict.is_equivalent()) {
    out.distance = out.verdict.witness->steps.size();
  }
  return out;
}

std::shared_ptr<ClassEnumeration const> ClassCache::lookup(Word const& w) {
  auto it = by_word_.find(w);
  if (it != by_word_.end()) {
    return it->second;
  }
  auto cls = std::make_shared<ClassEnumeration>(enumerate_class(*p_, w, limits_));
  if (!cls->exhaustive()) {
    return nullptr;
  }
  std::shared_ptr<ClassEnumeration const> shared = cls;
  for (auto const& member : shared->words()) {
    by_word_.emplace(member, shared);
  }
  return shared;
}

std::optional<bool> ClassCache::equivalent(Word const& u, Word const& v) {
  auto cu = lookup(u);
  if (cu == nullptr) {
    return std::nullopt;
  }
  // Same exhaustive class object iff equivalent; a membership test avoids
  // enumerating v's class when it is already covered.
  if (cu->contains(v)) {
    return true;
  }
  return false;
}

nlohmann::json step_to_json(Presentation const& p, ElementaryStep const& s) {
  return {{"prefix", s.prefix_len}, {"label", p.relation(s.relation).label}, {"forward", s.forward}};
}

ElementaryStep step_from_json(Presentation const& p, nlohmann::json const& j) {
  ElementaryStep s;
  s.prefix_len = j.at("prefix").get<int32_t>();
  std::string label = j.at("label").get<std::string>();
  s.relation = p.relation_index(label);
  if (s.relation < 0) {
    throw error("unknown relation label in step: " + label);
  }
  s.forward = j.at("forward").get<bool>();
  return s;
}

nlohmann::json witness_to_json(Presentation const& p, Witness const& wit) {
  nlohmann::json j;
  j["start"] = word_symbols(p, wit.start);
  j["steps"] = nlohmann::json::array();
  for (auto const& s : wit.steps) {
    j["steps"].push_back(step_to_json(p, s));
  }
  return j;
}

Witness witness_from_json(Presentation const& p, nlohmann::json const& j) {
  Witness wit;
  wit.start = word_from_symbols(p, j.at("start").get<std::vector<std::string>>());
  for (auto const& js : j.at("steps")) {
    wit.steps.push_back(step_from_json(p, js));
  }
  return wit;
}

}  // namespace pi2
