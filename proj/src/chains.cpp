#include "pi2/chains.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pi2/intmat.hpp"

namespace pi2 {

Monomial Monomial::operator+(Monomial const& o) const {
  if (exp.size() != o.exp.size()) {
    throw error("monomial rank mismatch");
  }
  Monomial out = *this;
  for (size_t i = 0; i < exp.size(); ++i) {
    out.exp[i] += o.exp[i];
  }
  return out;
}

Monomial Monomial::operator-(Monomial const& o) const {
  if (exp.size() != o.exp.size()) {
    throw error("monomial rank mismatch");
  }
  Monomial out = *this;
  for (size_t i = 0; i < exp.size(); ++i) {
    out.exp[i] -= o.exp[i];
  }
  return out;
}

Monomial Monomial::operator-() const {
  Monomial out = *this;
  for (auto& e : out.exp) {
    e = -e;
  }
  return out;
}

bool Monomial::is_zero() const {
  return std::all_of(exp.begin(), exp.end(), [](int32_t e) { return e == 0; });
}

int64_t Monomial::total_degree() const {
  int64_t d = 0;
  for (int32_t e : exp) {
    d += e;
  }
  return d;
}

bool grlex_less(Monomial const& a, Monomial const& b) {
  int64_t da = a.total_degree();
  int64_t db = b.total_degree();
  if (da != db) {
    return da < db;
  }
  return a.exp < b.exp;
}

GroupRingElem::GroupRingElem(Monomial const& m, int64_t coef) {
  add_term(m, coef);
}

void GroupRingElem::add_term(Monomial const& m, int64_t coef) {
  if (coef == 0) {
    return;
  }
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, coef);
    return;
  }
  it->second += coef;
  if (it->second == 0) {
    terms_.erase(it);
  }
}

GroupRingElem GroupRingElem::operator+(GroupRingElem const& o) const {
  GroupRingElem out = *this;
  for (auto const& [m, c] : o.terms_) {
    out.add_term(m, c);
  }
  return out;
}

GroupRingElem GroupRingElem::operator-(GroupRingElem const& o) const {
  GroupRingElem out = *this;
  for (auto const& [m, c] : o.terms_) {
    out.add_term(m, -c);
  }
  return out;
}

GroupRingElem GroupRingElem::operator-() const {
  GroupRingElem out;
  for (auto const& [m, c] : terms_) {
    out.terms_.emplace(m, -c);
  }
  return out;
}

GroupRingElem GroupRingElem::operator*(GroupRingElem const& o) const {
  GroupRingElem out;
  for (auto const& [m1, c1] : terms_) {
    for (auto const& [m2, c2] : o.terms_) {
      out.add_term(m1 + m2, c1 * c2);
    }
  }
  return out;
}

GroupRingElem GroupRingElem::translated(Monomial const& m) const {
  GroupRingElem out;
  for (auto const& [m1, c] : terms_) {
    out.terms_.emplace(m1 + m, c);
  }
  return out;
}

GroupRingElem GroupRingElem::scaled(int64_t c) const {
  GroupRingElem out;
  if (c == 0) {
    return out;
  }
  for (auto const& [m, c1] : terms_) {
    out.terms_.emplace(m, c1 * c);
  }
  return out;
}

std::pair<Monomial, int64_t> GroupRingElem::leading_term() const {
  if (terms_.empty()) {
    throw error("leading term of zero");
  }
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (grlex_less(best->first, it->first)) {
      best = it;
    }
  }
  return *best;
}

Monomial GroupRingElem::min_exponents() const {
  if (terms_.empty()) {
    throw error("exponent range of zero");
  }
  Monomial out = terms_.begin()->first;
  for (auto const& [m, c] : terms_) {
    for (size_t i = 0; i < out.exp.size(); ++i) {
      out.exp[i] = std::min(out.exp[i], m.exp[i]);
    }
  }
  return out;
}

Monomial GroupRingElem::max_exponents() const {
  if (terms_.empty()) {
    throw error("exponent range of zero");
  }
  Monomial out = terms_.begin()->first;
  for (auto const& [m, c] : terms_) {
    for (size_t i = 0; i < out.exp.size(); ++i) {
      out.exp[i] = std::max(out.exp[i], m.exp[i]);
    }
  }
  return out;
}

std::optional<GroupRingElem> laurent_divide_exact(GroupRingElem const& f, GroupRingElem const& g) {
  if (g.is_zero()) {
    if (f.is_zero()) {
      return GroupRingElem{};
    }
    return std::nullopt;
  }
  if (f.is_zero()) {
    return GroupRingElem{};
  }
  // Shift both to ordinary polynomials (componentwise min exponent zero);
  // min exponents are additive under multiplication, so exactness transfers.
  Monomial fshift = f.min_exponents();
  Monomial gshift = g.min_exponents();
  GroupRingElem r = f.translated(-fshift);
  GroupRingElem gg = g.translated(-gshift);
  auto [glm, glc] = gg.leading_term();

  GroupRingElem q;
  while (!r.is_zero()) {
    auto [rlm, rlc] = r.leading_term();
    Monomial t = rlm - glm;
    if (std::any_of(t.exp.begin(), t.exp.end(), [](int32_t e) { return e < 0; })) {
      return std::nullopt;
    }
    if (rlc % glc != 0) {
      return std::nullopt;
    }
    GroupRingElem term(t, rlc / glc);
    q = q + term;
    r = r - term * gg;
  }
  return q.translated(fshift - gshift);
}

bool OneChain::is_zero() const {
  for (auto const& [e, c] : coefficients) {
    if (!c.is_zero()) {
      return false;
    }
  }
  return true;
}

void OneChain::add(letter_t e, GroupRingElem const& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, fresh] = coefficients.emplace(e, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) {
      coefficients.erase(it);
    }
  }
}

OneChain OneChain::operator+(OneChain const& o) const {
  OneChain out = *this;
  for (auto const& [e, c] : o.coefficients) {
    out.add(e, c);
  }
  return out;
}

OneChain OneChain::operator-(OneChain const& o) const {
  OneChain out = *this;
  for (auto const& [e, c] : o.coefficients) {
    out.add(e, -c);
  }
  return out;
}

OneChain OneChain::scaled_by(GroupRingElem const& s) const {
  OneChain out;
  for (auto const& [e, c] : coefficients) {
    out.add(e, c * s);
  }
  return out;
}

bool TwoChain::is_zero() const {
  for (auto const& [r, c] : coefficients) {
    if (!c.is_zero()) {
      return false;
    }
  }
  return true;
}

void TwoChain::add(int relation, GroupRingElem const& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, fresh] = coefficients.emplace(relation, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) {
      coefficients.erase(it);
    }
  }
}

GroupRingElem TwoChain::coefficient(int relation) const {
  auto it = coefficients.find(relation);
  return it == coefficients.end() ? GroupRingElem{} : it->second;
}

TwoChain TwoChain::operator+(TwoChain const& o) const {
  TwoChain out = *this;
  for (auto const& [r, c] : o.coefficients) {
    out.add(r, c);
  }
  return out;
}

TwoChain TwoChain::operator-(TwoChain const& o) const {
  TwoChain out = *this;
  for (auto const& [r, c] : o.coefficients) {
    out.add(r, -c);
  }
  return out;
}

TwoChain TwoChain::operator-() const {
  TwoChain out;
  for (auto const& [r, c] : coefficients) {
    out.coefficients.emplace(r, -c);
  }
  return out;
}

TwoChain TwoChain::translated(Monomial const& m) const {
  TwoChain out;
  for (auto const& [r, c] : coefficients) {
    out.coefficients.emplace(r, c.translated(m));
  }
  return out;
}

Monomial abelianize(Presentation const& p, Word const& w) {
  Monomial m = Monomial::zero(p.rank());
  for (letter_t x : w) {
    m.exp[x] += 1;
  }
  return m;
}

OneChain fox(Presentation const& p, Word const& w) {
  OneChain out;
  Monomial prefix = Monomial::zero(p.rank());
  for (letter_t x : w) {
    out.add(x, GroupRingElem(prefix));
    prefix.exp[x] += 1;
  }
  return out;
}

OneChain fox_boundary(Presentation const& p, int relation) {
  Relation const& r = p.relation(relation);
  return fox(p, r.lhs) - fox(p, r.rhs);
}

TwoChain witness_chain(Presentation const& p, Witness const& wit) {
  TwoChain out;
  Word w = wit.start;
  for (size_t i = 0; i < wit.steps.size(); ++i) {
    ElementaryStep const& s = wit.steps[i];
    if (!step_applies(p, w, s)) {
      throw error("witness chain: replay failed at step " + std::to_string(i));
    }
    Word prefix(w.begin(), w.begin() + s.prefix_len);
    GroupRingElem coef(abelianize(p, prefix), s.forward ? 1 : -1);
    out.add(s.relation, coef);
    w = apply_step(p, w, s);
  }
  return out;
}

OneChain boundary(Presentation const& p, TwoChain const& ch) {
  OneChain out;
  for (auto const& [rel, coef] : ch.coefficients) {
    out = out + fox_boundary(p, rel).scaled_by(coef);
  }
  return out;
}

TwoChain divide_chain(Presentation const& p, TwoChain const& ch, Word const& left) {
  return ch.translated(-abelianize(p, left));
}

bool is_cycle(Presentation const& p, TwoChain const& ch) {
  return boundary(p, ch).is_zero();
}

TwoChain pi_class_chain(Presentation const& p, Twin const& twin, Witness const& wit1,
                        Witness const& wit2) {
  NCTuple const& t1 = twin.first;
  NCTuple const& t2 = twin.second;
  if (wit1.start != concat(t1.a, t1.b, t1.d) || replay_witness(p, wit1) != concat(t1.a, t1.c, t1.d)) {
    throw error("pi_class_chain: first witness does not connect a.b.d to a.c.d");
  }
  if (wit2.start != concat(t2.a, t2.b, t2.d) || replay_witness(p, wit2) != concat(t2.a, t2.c, t2.d)) {
    throw error("pi_class_chain: second witness does not connect a'.b.d' to a'.c.d'");
  }
  return divide_chain(p, witness_chain(p, wit1), t1.a) -
         divide_chain(p, witness_chain(p, wit2), t2.a);
}

std::vector<TwoChain> inertia_chain_generators(Presentation const& p, RewriteGraph const& g) {
  std::vector<TwoChain> out;
  for (auto const& loop : cycle_basis(p, g)) {
    out.push_back(witness_chain(p, Witness{loop.base, loop.steps}));
  }
  return out;
}

std::optional<UnitMonomial> unit_equal(TwoChain const& ch1, TwoChain const& ch2) {
  if (ch1.is_zero() && ch2.is_zero()) {
    return UnitMonomial{1, Monomial{{}}};
  }
  if (ch1.is_zero() || ch2.is_zero()) {
    return std::nullopt;
  }
  int pivot = ch2.coefficients.begin()->first;
  GroupRingElem const c2 = ch2.coefficient(pivot);
  GroupRingElem const c1 = ch1.coefficient(pivot);
  if (c1.is_zero()) {
    return std::nullopt;
  }
  auto [m1, k1] = c1.leading_term();
  auto [m2, k2] = c2.leading_term();
  int sign;
  if (k1 == k2) {
    sign = 1;
  } else if (k1 == -k2) {
    sign = -1;
  } else {
    return std::nullopt;
  }
  Monomial shift = m1 - m2;
  TwoChain candidate = ch2.translated(shift);
  if (sign < 0) {
    candidate = -candidate;
  }
  if (candidate == ch1) {
    return UnitMonomial{sign, shift};
  }
  return std::nullopt;
}

namespace {

// Enumerates the exponent box [-radius, radius]^k in lex order.
std::vector<Monomial> box_monomials(size_t k, int radius) {
  std::vector<Monomial> out;
  Monomial m;
  m.exp.assign(k, -radius);
  while (true) {
    out.push_back(m);
    size_t i = k;
    while (i > 0) {
      --i;
      if (m.exp[i] < radius) {
        m.exp[i] += 1;
        for (size_t j = i + 1; j < k; ++j) {
          m.exp[j] = -radius;
        }
        break;
      }
      if (i == 0) {
        return out;
      }
    }
    if (k == 0) {
      return out;
    }
  }
}

}  // namespace

std::vector<TwoChain> box_kernel_basis(Presentation const& p, int radius, size_t max_columns) {
  if (radius < 1) {
    throw error("box oracle radius must be >= 1");
  }
  size_t k = p.rank();
  std::vector<Monomial> box = box_monomials(k, radius);
  size_t ncols = p.relations().size() * box.size();
  if (ncols == 0) {
    return {};
  }
  if (ncols > max_columns) {
    throw error("box oracle overflow: " + std::to_string(ncols) + " columns exceeds limit of " +
                std::to_string(max_columns));
  }

  std::vector<OneChain> fox_cache;
  for (size_t r = 0; r < p.relations().size(); ++r) {
    fox_cache.push_back(fox_boundary(p, static_cast<int>(r)));
  }

  // Row keys (letter, monomial) are discovered as columns are assembled.
  std::map<std::pair<letter_t, Monomial>, size_t> row_index;
  std::vector<std::vector<std::pair<size_t, int64_t>>> sparse_cols(ncols);
  for (size_t r = 0; r < p.relations().size(); ++r) {
    for (size_t vi = 0; vi < box.size(); ++vi) {
      size_t col = r * box.size() + vi;
      for (auto const& [e, coef] : fox_cache[r].coefficients) {
        for (auto const& [m, c] : coef.terms()) {
          auto key = std::make_pair(e, m + box[vi]);
          auto [it, fresh] = row_index.emplace(key, row_index.size());
          sparse_cols[col].emplace_back(it->second, c);
        }
      }
    }
  }
  size_t nrows = row_index.size();
  if (nrows * ncols > 50000000) {
    throw error("box oracle overflow: dense matrix too large");
  }
  IntMat M(nrows, std::vector<int64_t>(ncols, 0));
  for (size_t col = 0; col < ncols; ++col) {
    for (auto const& [row, c] : sparse_cols[col]) {
      M[row][col] += c;
    }
  }
  auto kernel = integer_kernel_basis(std::move(M));
  std::vector<TwoChain> out;
  for (auto const& vec : kernel) {
    TwoChain ch;
    for (size_t r = 0; r < p.relations().size(); ++r) {
      GroupRingElem coef;
      for (size_t vi = 0; vi < box.size(); ++vi) {
        int64_t c = vec[r * box.size() + vi];
        if (c != 0) {
          coef.add_term(box[vi], c);
        }
      }
      ch.add(static_cast<int>(r), coef);
    }
    out.push_back(std::move(ch));
  }
  return out;
}

std::optional<std::vector<int64_t>> express_in_basis(Presentation const& p,
                                                     std::vector<TwoChain> const& basis,
                                                     TwoChain const& target) {
  (void)p;
  std::map<std::pair<int, Monomial>, size_t> row_index;
  auto intern = [&](TwoChain const& ch) {
    for (auto const& [r, coef] : ch.coefficients) {
      for (auto const& [m, c] : coef.terms()) {
        row_index.emplace(std::make_pair(r, m), row_index.size());
      }
    }
  };
  intern(target);
  for (auto const& b : basis) {
    intern(b);
  }
  size_t nrows = row_index.size();
  IntMat A(nrows, std::vector<int64_t>(basis.size(), 0));
  std::vector<int64_t> rhs(nrows, 0);
  for (size_t j = 0; j < basis.size(); ++j) {
    for (auto const& [r, coef] : basis[j].coefficients) {
      for (auto const& [m, c] : coef.terms()) {
        A[row_index.at({r, m})][j] = c;
      }
    }
  }
  for (auto const& [r, coef] : target.coefficients) {
    for (auto const& [m, c] : coef.terms()) {
      rhs[row_index.at({r, m})] = c;
    }
  }
  return lattice_solve(std::move(A), rhs);
}

std::optional<GroupRingElem> divide_by_chain(TwoChain const& ch, TwoChain const& gen) {
  if (gen.is_zero()) {
    if (ch.is_zero()) {
      return GroupRingElem{};
    }
    return std::nullopt;
  }
  int pivot = gen.coefficients.begin()->first;
  auto q = laurent_divide_exact(ch.coefficient(pivot), gen.coefficient(pivot));
  if (!q) {
    return std::nullopt;
  }
  // Verify across every relation cell.
  std::set<int> rels;
  for (auto const& [r, c] : ch.coefficients) {
    rels.insert(r);
  }
  for (auto const& [r, c] : gen.coefficients) {
    rels.insert(r);
  }
  for (int r : rels) {
    if (!(gen.coefficient(r) * *q == ch.coefficient(r))) {
      return std::nullopt;
    }
  }
  return q;
}

std::string format_group_ring(Presentation const&, GroupRingElem const& e) {
  if (e.is_zero()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (auto const& [m, c] : e.terms()) {
    int64_t coef = c;
    if (first) {
      if (coef < 0) {
        out << "-";
        coef = -coef;
      }
    } else {
      out << (coef < 0 ? " - " : " + ");
      coef = std::llabs(coef);
    }
    std::string mono;
    for (size_t i = 0; i < m.exp.size(); ++i) {
      if (m.exp[i] == 0) {
        continue;
      }
      if (!mono.empty()) {
        mono += "*";
      }
      mono += "x" + std::to_string(i + 1);
      if (m.exp[i] != 1) {
        mono += "^" + std::to_string(m.exp[i]);
      }
    }
    if (mono.empty()) {
      out << coef;
    } else {
      if (coef != 1) {
        out << coef << "*";
      }
      out << mono;
    }
    first = false;
  }
  return out.str();
}

std::string format_two_chain(Presentation const& p, TwoChain const& ch) {
  if (ch.is_zero()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (auto const& [r, coef] : ch.coefficients) {
    if (!first) {
      out << " + ";
    }
    out << p.relation(r).label << "*(" << format_group_ring(p, coef) << ")";
    first = false;
  }
  return out.str();
}

nlohmann::json two_chain_to_json(Presentation const& p, TwoChain const& ch) {
  nlohmann::json cells = nlohmann::json::object();
  for (auto const& [r, coef] : ch.coefficients) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto const& [m, c] : coef.terms()) {
      terms.push_back({{"exp", m.exp}, {"coef", c}});
    }
    cells[p.relation(r).label] = std::move(terms);
  }
  return {{"cells", std::move(cells)}};
}

TwoChain two_chain_from_json(Presentation const& p, nlohmann::json const& j) {
  TwoChain ch;
  for (auto const& [label, terms] : j.at("cells").items()) {
    int r = p.relation_index(label);
    if (r < 0) {
      throw error("unknown relation label in chain: " + label);
    }
    GroupRingElem coef;
    for (auto const& t : terms) {
      Monomial m;
      m.exp = t.at("exp").get<std::vector<int32_t>>();
      if (m.exp.size() != p.rank()) {
        throw error("chain exponent vector has wrong rank");
      }
      coef.add_term(m, t.at("coef").get<int64_t>());
    }
    ch.add(r, coef);
  }
  return ch;
}

}  // namespace pi2
