#ifndef PI2_REWRITE_HPP_
#define PI2_REWRITE_HPP_

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pi2/presentation.hpp"

namespace pi2 {

// One elementary transformation: replace the source side of a relation,
// occurring at offset prefix_len, by the other side.  forward means lhs->rhs.
struct ElementaryStep {
  int32_t prefix_len = 0;
  int32_t relation = 0;  // index into Presentation::relations()
  bool forward = true;

  bool operator==(ElementaryStep const&) const = default;
};

// A replayable certificate for word equivalence: the combinatorial stand-in
// for one element of the geometric equivalence set of the start/end pair.
struct Witness {
  Word start;
  std::vector<ElementaryStep> steps;

  bool operator==(Witness const&) const = default;
};

enum class Bound { none, word_length, states, depth };

struct SearchLimits {
  size_t max_word_length = 32;
  size_t max_states = 200000;
  size_t max_depth = 0;  // 0 = unlimited

  // Default bounds for one equivalence query; generous enough that the
  // homogeneous case always runs to exhaustion.
  static SearchLimits for_pair(Presentation const& p, Word const& u, Word const& v);
};

// All steps applicable to w: by offset, then relation label, then forward
// before backward.
std::vector<ElementaryStep> applicable_steps(Presentation const& p, Word const& w);

bool step_applies(Presentation const& p, Word const& w, ElementaryStep const& s);
Word apply_step(Presentation const& p, Word const& w, ElementaryStep const& s);
ElementaryStep flip_step(ElementaryStep const& s);

Word replay_witness(Presentation const& p, Witness const& wit);
Witness invert_witness(Presentation const& p, Witness const& wit);
Witness embed_witness(Presentation const& p, Word const& left, Witness const& wit,
                      Word const& right);
// Requires replay(w1) == w2.start.
Witness concat_witness(Presentation const& p, Witness const& w1, Witness const& w2);

// Breadth-first enumeration of the rewrite class of a word.  Vertices are
// stored in discovery order together with spanning-tree parent pointers, so a
// shortest witness from the root to any enumerated word can be read off.
class ClassEnumeration {
 public:
  Word const& root() const { return words_[0]; }
  std::vector<Word> const& words() const { return words_; }
  bool exhaustive() const { return exhaustive_; }
  Bound bound_hit() const { return bound_; }

  bool contains(Word const& w) const { return index_.count(w) > 0; }
  std::optional<size_t> index_of(Word const& w) const;
  size_t depth(size_t vertex) const { return depth_[vertex]; }

  // Shortest witness root -> words()[vertex], in BFS tie-break order.
  Witness witness_to(size_t vertex) const;

  // Lexicographically least enumerated word; the canonical class
  // representative when the enumeration is exhaustive.
  Word const& representative() const;

 private:
  friend ClassEnumeration detail_bfs_class(Presentation const&, Word const&, SearchLimits const&,
                                           Word const*);
  friend class ClassCache;

  std::vector<Word> words_;
  std::vector<int32_t> parent_;  // -1 at the root
  std::vector<ElementaryStep> parent_step_;
  std::vector<int32_t> depth_;
  std::unordered_map<Word, size_t, WordHash> index_;
  bool exhaustive_ = false;
  Bound bound_ = Bound::none;
};

ClassEnumeration enumerate_class(Presentation const& p, Word const& w, SearchLimits const& limits);

enum class VerdictKind { equivalent, inequivalent, unknown };

struct EquivalenceVerdict {
  VerdictKind kind = VerdictKind::unknown;
  std::optional<Witness> witness;               // equivalent
  std::vector<Word> class_certificate;          // inequivalent: the full class of u
  Bound bound = Bound::none;                    // unknown: which limit fired

  bool is_equivalent() const { return kind == VerdictKind::equivalent; }
};

EquivalenceVerdict decide_equivalent(Presentation const& p, Word const& u, Word const& v,
                                     SearchLimits const& limits);
EquivalenceVerdict decide_equivalent(Presentation const& p, Word const& u, Word const& v);

struct DistanceResult {
  std::optional<size_t> distance;
  EquivalenceVerdict verdict;
};

DistanceResult distance(Presentation const& p, Word const& u, Word const& v,
                        SearchLimits const& limits);

// Memoized class lookup: each class is enumerated at most once and shared by
// all of its member words.  Non-exhaustive enumerations are not cached.
class ClassCache {
 public:
  ClassCache(Presentation const& p, SearchLimits limits) : p_(&p), limits_(limits) {}

  // nullptr when the enumeration hit a limit.
  std::shared_ptr<ClassEnumeration const> lookup(Word const& w);

  // Equivalence test via canonical representatives; nullopt when either class
  // could not be exhausted.
  std::optional<bool> equivalent(Word const& u, Word const& v);

  SearchLimits const& limits() const { return limits_; }
  Presentation const& presentation() const { return *p_; }

 private:
  Presentation const* p_;
  SearchLimits limits_;
  std::unordered_map<Word, std::shared_ptr<ClassEnumeration const>, WordHash> by_word_;
};

// JSON forms of the certificate types.
nlohmann::json step_to_json(Presentation const& p, ElementaryStep const& s);
ElementaryStep step_from_json(Presentation const& p, nlohmann::json const& j);
nlohmann::json witness_to_json(Presentation const& p, Witness const& wit);
Witness witness_from_json(Presentation const& p, nlohmann::json const& j);

}  // namespace pi2

#endif  // PI2_REWRITE_HPP_
