#ifndef PI2_NC_HPP_
#define PI2_NC_HPP_

#include <array>
#include <set>

#include "pi2/rewrite.hpp"

namespace pi2 {

// A certified pair of inequivalent monoid elements: the exhaustively
// enumerated class of b, with c absent.
struct Kernel {
  Word b;
  Word c;
  std::vector<Word> b_class;  // inequivalence certificate

  bool certifies() const;  // b in b_class, c not in b_class
};

// Builds the kernel certificate; nullopt when the class of b cannot be
// exhausted within limits or when b ~ c.
std::optional<Kernel> certify_kernel(Presentation const& p, Word const& b, Word const& c,
                                     SearchLimits const& limits);

// (a, b, c, d) with a.b.d ~ a.c.d but b != c: the relation witness replays
// from a.b.d to a.c.d, the kernel certifies the inequivalence.
struct NCTuple {
  Word a;
  Word b;
  Word c;
  Word d;
  Witness relation_witness;
  Kernel kernel;
};

// Two NC tuples over the same kernel with distinct (a, d) class pairs.
struct Twin {
  NCTuple first;
  NCTuple second;
};

enum class Status { yes, no, unknown };

// Outcome of a reduced/minimal/indecomposable check.  A No verdict carries
// the witnessing data for its operation; all certificates replay.
struct ClassificationVerdict {
  Status status = Status::unknown;
  Bound bound = Bound::none;

  std::optional<NCTuple> smaller;        // is_reduced: strictly smaller tuple
  std::optional<Word> divisor;           // is_minimal: nonunit common divisor
  bool divisor_on_left = false;
  std::optional<std::array<Word, 8>> factors;  // is_indecomposable:
                                               // a',b',c',d', a'',b'',c'',d''
};

struct NCSearchResult {
  std::vector<NCTuple> tuples;                    // deterministic order
  std::vector<std::pair<Word, Word>> unknown;     // (a, d) pairs that hit limits
};

// Certify one candidate tuple.  The outer optional is empty with
// status-unknown information when a search hits its limits; the inner
// optional is empty when the tuple is certified NOT to be non-cancellative.
struct NCCheck {
  std::optional<NCTuple> tuple;
  bool unknown = false;
  Bound bound = Bound::none;
};

NCCheck check_nc_tuple(Presentation const& p, Word const& a, Word const& b, Word const& c,
                       Word const& d, SearchLimits const& limits);

// All (a, d) with |a|, |d| <= max_flank_length such that (a, b, c, d) is a
// certified NC tuple; flanks are scanned as raw words in (length, lex) order
// and deduplicated by (class of a, class of d).
NCSearchResult search_nc_over_kernel(Presentation const& p, Kernel const& kernel,
                                     size_t max_flank_length, SearchLimits const& limits);

ClassificationVerdict is_reduced(Presentation const& p, NCTuple const& t,
                                 SearchLimits const& limits);
ClassificationVerdict is_minimal(Presentation const& p, NCTuple const& t,
                                 SearchLimits const& limits);
ClassificationVerdict is_indecomposable(Presentation const& p, NCTuple const& t,
                                        SearchLimits const& limits);

struct TwinSearchResult {
  std::vector<Twin> twins;
  std::vector<std::pair<Word, Word>> unknown;  // flank pairs that hit limits
  bool kernel_unknown = false;                 // some kernel failed to certify
};

// All unordered pairs of distinct reduced NC tuples per kernel.
TwinSearchResult find_twins(Presentation const& p, std::vector<std::pair<Word, Word>> const& kernels,
                            size_t max_flank_length, SearchLimits const& limits);

// Letters that never start (resp. end) a relation side are initial (resp.
// final) position invariants of rewriting.
struct BoundaryLetterReport {
  std::set<letter_t> end_letters;
  std::set<letter_t> start_letters;
  std::set<letter_t> preserved_end;
  std::set<letter_t> preserved_start;
};

// Requires a positive presentation (no empty relation side).
BoundaryLetterReport boundary_letter_invariant(Presentation const& p);

enum class FlankSide { left, right };

// Structural proof that no NC tuple of the form (P, 1) (side == right) or
// (1, P) (side == left) exists over the kernel, for any P: holds when the
// kernel words end (resp. start) in distinct preserved letters.  The
// invariant is sufficient, not necessary, so the negative answer is unknown.
ClassificationVerdict prove_no_one_sided_nc(Presentation const& p, Word const& b, Word const& c,
                                            FlankSide side);

// Appendix-style classifying-space certificate for a twin: the simplices of
// the two tuples, the glued loop equivalences, and the difference pairing.
struct BASimplex {
  int tuple = 0;               // 0 = first, 1 = second
  char side = 'b';             // 'b' or 'c'
  std::vector<Word> cells;     // (a, b|c, d) with unit entries collapsed
  int dimension = 3;           // 3, or 2 after collapsing a unit flank
};

struct BAEquivalence {
  int tuple = 0;
  char side = 'b';
  Word loop;                   // (b) or (c)
  Word through;                // a.b.d resp. a.c.d
  Word left_flank;             // a  (inverted loop in the concatenation)
  Word right_flank;            // d  (inverted loop in the concatenation)
};

struct BACertificate {
  std::vector<BASimplex> simplices;        // four, two per tuple
  std::vector<BAEquivalence> equivalences; // four, two per tuple
  // The difference pairing: first tuple's b~c equivalence composed with the
  // inverse of the second's.
  std::pair<int, int> pairing{0, 1};
};

BACertificate ba_certificate(Presentation const& p, Twin const& twin);

nlohmann::json kernel_to_json(Presentation const& p, Kernel const& k);
Kernel kernel_from_json(Presentation const& p, nlohmann::json const& j);
nlohmann::json nc_tuple_to_json(Presentation const& p, NCTuple const& t);
NCTuple nc_tuple_from_json(Presentation const& p, nlohmann::json const& j);
nlohmann::json twin_to_json(Presentation const& p, Twin const& t);
nlohmann::json verdict_to_json(Presentation const& p, ClassificationVerdict const& v);
nlohmann::json ba_certificate_to_json(Presentation const& p, BACertificate const& cert);
BACertificate ba_certificate_from_json(Presentation const& p, nlohmann::json const& j);

}  // namespace pi2

#endif  // PI2_NC_HPP_
