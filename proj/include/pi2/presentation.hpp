#ifndef PI2_PRESENTATION_HPP_
#define PI2_PRESENTATION_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace pi2 {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A word over the alphabet, stored as 0-based letter indices.
// The empty word is the monoid unit.
using letter_t = int32_t;
using Word = std::vector<letter_t>;

struct WordHash {
  size_t operator()(Word const& w) const noexcept {
    // FNV-1a over the letter values
    uint64_t h = 1469598103934665603ULL;
    for (letter_t x : w) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(x));
      h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
  }
};

// A labeled, oriented two-sided relation lhs ~ rhs.  The label is the
// combinatorial stand-in for the geometric lifting of the relation; the
// forward orientation is lhs -> rhs.
struct Relation {
  std::string label;
  Word lhs;
  Word rhs;

  bool operator==(Relation const&) const = default;
};

class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> alphabet, std::vector<Relation> relations);

  std::vector<std::string> const& alphabet() const { return alphabet_; }
  std::vector<Relation> const& relations() const { return relations_; }
  size_t rank() const { return alphabet_.size(); }

  std::string const& symbol(letter_t i) const { return alphabet_.at(i); }
  // -1 when the symbol is not in the alphabet
  letter_t letter_index(std::string const& symbol) const;

  Relation const& relation(int i) const { return relations_.at(i); }
  int relation_index(std::string const& label) const;  // -1 when unknown

  // Relation indices ordered by label text; used for the deterministic
  // step-enumeration order.
  std::vector<int> const& relations_by_label() const { return by_label_; }

  size_t longest_relation_side() const;

  bool operator==(Presentation const& other) const {
    return alphabet_ == other.alphabet_ && relations_ == other.relations_;
  }

 private:
  std::vector<std::string> alphabet_;
  std::vector<Relation> relations_;
  std::unordered_map<std::string, letter_t> symbol_index_;
  std::unordered_map<std::string, int> label_index_;
  std::vector<int> by_label_;

  void validate_and_index();
};

struct PresentationClass {
  bool semi_positive = true;  // always, by construction
  bool positive = false;      // every relation side has length >= 1
  bool homogeneous = false;   // lhs and rhs have equal length in every relation
};

PresentationClass classify_presentation(Presentation const& p);

// Word length; a class invariant when the presentation is homogeneous.
inline size_t degree(Presentation const&, Word const& w) { return w.size(); }

// JSON document I/O.  Schema: {"alphabet": [sym...],
// "relations": [{"label","lhs": [sym...], "rhs": [sym...]}...]}.
Presentation parse_presentation(nlohmann::json const& document);
Presentation parse_presentation_text(std::string const& text);
Presentation load_presentation_file(std::string const& path);
nlohmann::json serialize_presentation(Presentation const& p);

// Presentation of the fundamental group of a real line arrangement from its
// chamber permutations: alphabet g1..gn, one relation g1...gn ~ permuted
// product per permutation.  Permutations are 1-based tuples of {1..n}.
Presentation yoshinaga_presentation(int n, std::vector<std::vector<int>> const& permutations,
                                    std::vector<std::string> const& labels = {},
                                    std::vector<std::string> const& symbols = {});

// Word <-> text.  Input accepts whitespace-separated symbols, or the compact
// juxtaposed form when every alphabet symbol is a single character.  Output is
// compact when possible, whitespace-separated otherwise.
Word parse_word(Presentation const& p, std::string const& text);
std::string format_word(Presentation const& p, Word const& w);
std::vector<std::string> word_symbols(Presentation const& p, Word const& w);
Word word_from_symbols(Presentation const& p, std::vector<std::string> const& symbols);

Word concat(Word const& a, Word const& b);
Word concat(Word const& a, Word const& b, Word const& c);

}  // namespace pi2

#endif  // PI2_PRESENTATION_HPP_
