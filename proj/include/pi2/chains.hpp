#ifndef PI2_CHAINS_HPP_
#define PI2_CHAINS_HPP_

#include <map>

#include "pi2/graph.hpp"
#include "pi2/nc.hpp"
#include "pi2/rewrite.hpp"

namespace pi2 {

// Exponent vector of length k = alphabet size: the abelianization image of a
// word, written x1^e1 ... xk^ek.
struct Monomial {
  std::vector<int32_t> exp;

  bool operator==(Monomial const&) const = default;
  bool operator<(Monomial const& o) const { return exp < o.exp; }

  static Monomial zero(size_t k) { return Monomial{std::vector<int32_t>(k, 0)}; }
  Monomial operator+(Monomial const& o) const;
  Monomial operator-(Monomial const& o) const;
  Monomial operator-() const;
  bool is_zero() const;
  int64_t total_degree() const;
};

// Graded-lexicographic order (total degree first, then lex).
bool grlex_less(Monomial const& a, Monomial const& b);

// An element of the integral group ring of the abelianized fundamental group:
// a Laurent polynomial in k commuting variables.  Zero coefficients are never
// stored.
class GroupRingElem {
 public:
  GroupRingElem() = default;
  explicit GroupRingElem(Monomial const& m, int64_t coef = 1);

  std::map<Monomial, int64_t> const& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t support_size() const { return terms_.size(); }

  void add_term(Monomial const& m, int64_t coef);
  GroupRingElem operator+(GroupRingElem const& o) const;
  GroupRingElem operator-(GroupRingElem const& o) const;
  GroupRingElem operator-() const;
  GroupRingElem operator*(GroupRingElem const& o) const;
  GroupRingElem translated(Monomial const& m) const;  // multiply by x^m
  GroupRingElem scaled(int64_t c) const;

  bool operator==(GroupRingElem const&) const = default;

  // Largest term in graded-lex order; requires a nonzero element.
  std::pair<Monomial, int64_t> leading_term() const;

  // Componentwise min/max exponents over the support.
  Monomial min_exponents() const;
  Monomial max_exponents() const;

 private:
  std::map<Monomial, int64_t> terms_;
};

// Exact division in the Laurent ring: q with f = q * g, when it exists.
std::optional<GroupRingElem> laurent_divide_exact(GroupRingElem const& f, GroupRingElem const& g);

// Cellular 1-chain of the abelian cover: letter -> group-ring coefficient.
struct OneChain {
  std::map<letter_t, GroupRingElem> coefficients;

  bool is_zero() const;
  OneChain operator+(OneChain const& o) const;
  OneChain operator-(OneChain const& o) const;
  OneChain scaled_by(GroupRingElem const& c) const;
  void add(letter_t e, GroupRingElem const& c);
  bool operator==(OneChain const&) const = default;
};

// Cellular 2-chain of the abelian cover: relation index -> group-ring
// coefficient.  The abelian-cover image of a relative pi_2 class.
struct TwoChain {
  std::map<int, GroupRingElem> coefficients;

  bool is_zero() const;
  TwoChain operator+(TwoChain const& o) const;
  TwoChain operator-(TwoChain const& o) const;
  TwoChain operator-() const;
  TwoChain translated(Monomial const& m) const;
  void add(int relation, GroupRingElem const& c);
  GroupRingElem coefficient(int relation) const;
  bool operator==(TwoChain const&) const = default;
};

struct UnitMonomial {
  int sign = 1;  // +1 or -1
  Monomial monomial;
};

Monomial abelianize(Presentation const& p, Word const& w);

// Free-derivative 1-chain of a word: sum over positions of the abelianized
// prefix times the edge of the letter at that position.
OneChain fox(Presentation const& p, Word const& w);

// Cellular boundary of the relation 2-cell: fox(lhs) - fox(rhs).
OneChain fox_boundary(Presentation const& p, int relation);

// Chain image of a witness: a forward step at prefix g contributes
// +[label] * ab(g), a backward step contributes -[label] * ab(g).
TwoChain witness_chain(Presentation const& p, Witness const& wit);

// Linear extension of fox_boundary.
OneChain boundary(Presentation const& p, TwoChain const& ch);

// Chain-level flank division: multiply every coefficient by ab(left)^{-1}.
// Right division is the identity on chains.
TwoChain divide_chain(Presentation const& p, TwoChain const& ch, Word const& left);

bool is_cycle(Presentation const& p, TwoChain const& ch);

// The Pi-class chain of a twin: the divided chain of the first tuple's
// witness minus the divided chain of the second's.
TwoChain pi_class_chain(Presentation const& p, Twin const& twin, Witness const& wit1,
                        Witness const& wit2);

// Chain images of the fundamental cycles of an exhaustive component.
std::vector<TwoChain> inertia_chain_generators(Presentation const& p, RewriteGraph const& g);

// ch1 == sign * x^m * ch2, when such a unit exists.
std::optional<UnitMonomial> unit_equal(TwoChain const& ch1, TwoChain const& ch2);

// Independent oracle: a Z-basis of the 2-cycles whose coefficients are
// supported in the monomial box [-radius, radius]^k, via an integer kernel
// computation on the assembled boundary matrix.
std::vector<TwoChain> box_kernel_basis(Presentation const& p, int radius,
                                       size_t max_columns = 20000);

// Coordinates of a box-supported cycle in the given basis, when expressible.
std::optional<std::vector<int64_t>> express_in_basis(Presentation const& p,
                                                     std::vector<TwoChain> const& basis,
                                                     TwoChain const& target);

// Membership in the cyclic module generated by `gen` over the Laurent ring:
// q with ch = q * gen, when it exists.
std::optional<GroupRingElem> divide_by_chain(TwoChain const& ch, TwoChain const& gen);

// Rendering and JSON.
std::string format_group_ring(Presentation const& p, GroupRingElem const& e);
std::string format_two_chain(Presentation const& p, TwoChain const& ch);
nlohmann::json two_chain_to_json(Presentation const& p, TwoChain const& ch);
TwoChain two_chain_from_json(Presentation const& p, nlohmann::json const& j);

}  // namespace pi2

#endif  // PI2_CHAINS_HPP_
