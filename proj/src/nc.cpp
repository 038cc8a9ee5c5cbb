#include "pi2/nc.hpp"

#include <algorithm>
#include <map>

namespace pi2 {

bool Kernel::certifies() const {
  bool has_b = std::find(b_class.begin(), b_class.end(), b) != b_class.end();
  bool has_c = std::find(b_class.begin(), b_class.end(), c) != b_class.end();
  return has_b && !has_c;
}

std::optional<Kernel> certify_kernel(Presentation const& p, Word const& b, Word const& c,
                                     SearchLimits const& limits) {
  ClassEnumeration cls = enumerate_class(p, b, limits);
  if (!cls.exhaustive()) {
    return std::nullopt;
  }
  if (cls.contains(c)) {
    return std::nullopt;  // b ~ c: not a kernel
  }
  Kernel k;
  k.b = b;
  k.c = c;
  k.b_class = cls.words();
  return k;
}

namespace {

// Monoid-element equality and flank enumeration need exhaustive classes over
// and over; ClassCache shares one enumeration per class.

// Words of length <= max over the alphabet, in (length, lex) order.
std::vector<Word> words_up_to(Presentation const& p, size_t max_len) {
  std::vector<Word> out;
  out.push_back({});
  size_t begin = 0;
  for (size_t len = 1; len <= max_len; ++len) {
    size_t end = out.size();
    for (size_t i = begin; i < end; ++i) {
      for (letter_t x = 0; x < static_cast<letter_t>(p.rank()); ++x) {
        Word w = out[i];
        w.push_back(x);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

}  // namespace

NCCheck check_nc_tuple(Presentation const& p, Word const& a, Word const& b, Word const& c,
                       Word const& d, SearchLimits const& limits) {
  NCCheck out;
  auto kernel = certify_kernel(p, b, c, limits);
  if (!kernel) {
    // Either b ~ c (not a kernel) or the class search was cut short.
    ClassEnumeration cls = enumerate_class(p, b, limits);
    if (!cls.exhaustive()) {
      out.unknown = true;
      out.bound = cls.bound_hit();
    }
    return out;
  }
  Word abd = concat(a, b, d);
  Word acd = concat(a, c, d);
  EquivalenceVerdict verdict = decide_equivalent(p, abd, acd, limits);
  if (verdict.kind == VerdictKind::unknown) {
    out.unknown = true;
    out.bound = verdict.bound;
    return out;
  }
  if (verdict.kind == VerdictKind::inequivalent) {
    return out;
  }
  NCTuple t;
  t.a = a;
  t.b = b;
  t.c = c;
  t.d = d;
  t.relation_witness = *verdict.witness;
  t.kernel = std::move(*kernel);
  out.tuple = std::move(t);
  return out;
}

namespace {

// Deduplicate flank words by class representative; non-exhaustive classes
// keep the raw word (they can only arise in non-homogeneous presentations and
// are reported via the unknown list when the NC check itself is cut short).
struct FlankEnumerator {
  ClassCache& cache;

  std::vector<Word> reps(Presentation const& p, size_t max_len) {
    std::vector<Word> out;
    std::set<Word> seen;
    for (auto const& w : words_up_to(p, max_len)) {
      auto cls = cache.lookup(w);
      Word rep = cls ? cls->representative() : w;
      if (seen.insert(rep).second) {
        out.push_back(w);  // keep the first raw word in (length, lex) order
      }
    }
    return out;
  }
};

}  // namespace

NCSearchResult search_nc_over_kernel(Presentation const& p, Kernel const& kernel,
                                     size_t max_flank_length, SearchLimits const& limits) {
  if (!kernel.certifies()) {
    throw error("search_nc_over_kernel: kernel certificate is invalid");
  }
  NCSearchResult result;
  bool homogeneous = classify_presentation(p).homogeneous;
  if (homogeneous && kernel.b.size() != kernel.c.size()) {
    // Equal-degree obstruction: a.b.d and a.c.d can never be equivalent.
    return result;
  }
  ClassCache cache(p, limits);
  FlankEnumerator flanks{cache};
  std::vector<Word> as = flanks.reps(p, max_flank_length);
  std::vector<Word> ds = as;
  for (auto const& a : as) {
    for (auto const& d : ds) {
      Word abd = concat(a, kernel.b, d);
      Word acd = concat(a, kernel.c, d);
      auto eq = cache.equivalent(abd, acd);
      if (!eq.has_value()) {
        result.unknown.emplace_back(a, d);
        continue;
      }
      if (!*eq) {
        continue;
      }
      // Mint the shortest witness for the certified tuple.
      EquivalenceVerdict verdict = decide_equivalent(p, abd, acd, limits);
      if (!verdict.is_equivalent()) {
        result.unknown.emplace_back(a, d);
        continue;
      }
      NCTuple t;
      t.a = a;
      t.b = kernel.b;
      t.c = kernel.c;
      t.d = d;
      t.relation_witness = *verdict.witness;
      t.kernel = kernel;
      result.tuples.push_back(std::move(t));
    }
  }
  return result;
}

namespace {

// Classes of all suffixes (resp. prefixes) of all representatives of the
// class of w, as (representative word used, divisor word) pairs deduplicated
// by divisor class.  Returns nullopt when any enumeration is inexhaustive.
std::optional<std::vector<Word>> divisor_candidates(ClassCache& cache, Word const& w,
                                                    bool suffixes) {
  auto cls = cache.lookup(w);
  if (!cls) {
    return std::nullopt;
  }
  std::set<Word> seen_reps;
  std::vector<Word> out;
  for (auto const& member : cls->words()) {
    for (size_t len = 0; len <= member.size(); ++len) {
      Word part = suffixes ? Word(member.end() - len, member.end())
                           : Word(member.begin(), member.begin() + len);
      auto pcls = cache.lookup(part);
      if (!pcls) {
        return std::nullopt;
      }
      if (seen_reps.insert(pcls->representative()).second) {
        out.push_back(part);
      }
    }
  }
  return out;
}

bool same_class(ClassCache& cache, Word const& u, Word const& v, bool& unknown) {
  auto eq = cache.equivalent(u, v);
  if (!eq.has_value()) {
    unknown = true;
    return false;
  }
  return *eq;
}

}  // namespace

ClassificationVerdict is_reduced(Presentation const& p, NCTuple const& t,
                                 SearchLimits const& limits) {
  ClassificationVerdict v;
  ClassCache cache(p, limits);
  auto right_divisors = divisor_candidates(cache, t.a, /*suffixes=*/true);
  auto left_divisors = divisor_candidates(cache, t.d, /*suffixes=*/false);
  if (!right_divisors || !left_divisors) {
    v.status = Status::unknown;
    v.bound = Bound::states;
    return v;
  }
  bool unknown = false;
  for (auto const& a2 : *right_divisors) {
    for (auto const& d2 : *left_divisors) {
      bool a_same = same_class(cache, a2, t.a, unknown);
      bool d_same = same_class(cache, d2, t.d, unknown);
      if (a_same && d_same) {
        continue;  // not strictly smaller
      }
      NCCheck check = check_nc_tuple(p, a2, t.b, t.c, d2, limits);
      if (check.unknown) {
        unknown = true;
        continue;
      }
      if (check.tuple) {
        v.status = Status::no;
        v.smaller = std::move(check.tuple);
        return v;
      }
    }
  }
  if (unknown) {
    v.status = Status::unknown;
    v.bound = Bound::states;
    return v;
  }
  v.status = Status::yes;
  return v;
}

ClassificationVerdict is_minimal(Presentation const& p, NCTuple const& t,
                                 SearchLimits const& limits) {
  ClassificationVerdict v;
  ClassCache cache(p, limits);
  auto check_side = [&](bool left) -> std::optional<ClassificationVerdict> {
    auto div_b = divisor_candidates(cache, t.b, /*suffixes=*/!left);
    auto div_c = divisor_candidates(cache, t.c, /*suffixes=*/!left);
    if (!div_b || !div_c) {
      ClassificationVerdict u;
      u.status = Status::unknown;
      u.bound = Bound::states;
      return u;
    }
    // Intersect by class representative, excluding the unit.
    std::set<Word> reps_c;
    for (auto const& w : *div_c) {
      reps_c.insert(cache.lookup(w)->representative());
    }
    std::vector<Word> common;
    for (auto const& w : *div_b) {
      if (w.empty()) {
        continue;
      }
      Word rep = cache.lookup(w)->representative();
      if (rep.empty()) {
        continue;  // equivalent to the unit
      }
      if (reps_c.count(rep) > 0) {
        common.push_back(w);
      }
    }
    if (!common.empty()) {
      std::sort(common.begin(), common.end(), [](Word const& x, Word const& y) {
        return std::make_pair(x.size(), x) < std::make_pair(y.size(), y);
      });
      ClassificationVerdict no;
      no.status = Status::no;
      no.divisor = common.front();
      no.divisor_on_left = left;
      return no;
    }
    return std::nullopt;
  };
  if (auto bad = check_side(true)) {
    return *bad;
  }
  if (auto bad = check_side(false)) {
    return *bad;
  }
  v.status = Status::yes;
  return v;
}

namespace {

// Splits u1.u2 of every representative of the class of w, deduplicated by the
// class pair; nullopt when an enumeration is cut short.
std::optional<std::vector<std::pair<Word, Word>>> split_candidates(ClassCache& cache,
                                                                   Word const& w) {
  auto cls = cache.lookup(w);
  if (!cls) {
    return std::nullopt;
  }
  std::set<std::pair<Word, Word>> seen;
  std::vector<std::pair<Word, Word>> out;
  for (auto const& member : cls->words()) {
    for (size_t cut = 0; cut <= member.size(); ++cut) {
      Word u1(member.begin(), member.begin() + cut);
      Word u2(member.begin() + cut, member.end());
      auto c1 = cache.lookup(u1);
      auto c2 = cache.lookup(u2);
      if (!c1 || !c2) {
        return std::nullopt;
      }
      if (seen.emplace(c1->representative(), c2->representative()).second) {
        out.emplace_back(u1, u2);
      }
    }
  }
  return out;
}

bool commutes(ClassCache& cache, Word const& x, Word const& y, bool& unknown) {
  if (x.empty() || y.empty()) {
    return true;
  }
  auto eq = cache.equivalent(concat(x, y), concat(y, x));
  if (!eq.has_value()) {
    unknown = true;
    return false;
  }
  return *eq;
}

// Is (a, b, c, d) a non-cancellative tuple?  Light form for the
// decomposition search: kernel and relation checked through the cache.
bool is_nc(ClassCache& cache, Word const& a, Word const& b, Word const& c, Word const& d,
           bool& unknown) {
  auto bc = cache.equivalent(b, c);
  if (!bc.has_value()) {
    unknown = true;
    return false;
  }
  if (*bc) {
    return false;  // b ~ c: no kernel
  }
  auto eq = cache.equivalent(concat(a, b, d), concat(a, c, d));
  if (!eq.has_value()) {
    unknown = true;
    return false;
  }
  return *eq;
}

}  // namespace

ClassificationVerdict is_indecomposable(Presentation const& p, NCTuple const& t,
                                        SearchLimits const& limits) {
  ClassificationVerdict v;
  ClassCache cache(p, limits);
  auto sa = split_candidates(cache, t.a);
  auto sb = split_candidates(cache, t.b);
  auto sc = split_candidates(cache, t.c);
  auto sd = split_candidates(cache, t.d);
  if (!sa || !sb || !sc || !sd) {
    v.status = Status::unknown;
    v.bound = Bound::states;
    return v;
  }
  bool unknown = false;
  for (auto const& [a1, a2] : *sa) {
    for (auto const& [b1, b2] : *sb) {
      for (auto const& [c1, c2] : *sc) {
        for (auto const& [d1, d2] : *sd) {
          // Five commutation conditions making the two factors independent.
          if (!commutes(cache, d1, a2, unknown) || !commutes(cache, b1, a2, unknown) ||
              !commutes(cache, c1, a2, unknown) || !commutes(cache, d1, b2, unknown) ||
              !commutes(cache, d1, c2, unknown)) {
            continue;
          }
          if (!is_nc(cache, a1, b1, c1, d1, unknown) ||
              !is_nc(cache, a2, b2, c2, d2, unknown)) {
            continue;
          }
          v.status = Status::no;
          v.factors = std::array<Word, 8>{a1, b1, c1, d1, a2, b2, c2, d2};
          return v;
        }
      }
    }
  }
  if (unknown) {
    v.status = Status::unknown;
    v.bound = Bound::states;
    return v;
  }
  v.status = Status::yes;
  return v;
}

TwinSearchResult find_twins(Presentation const& p,
                            std::vector<std::pair<Word, Word>> const& kernels,
                            size_t max_flank_length, SearchLimits const& limits) {
  TwinSearchResult result;
  for (auto const& [b, c] : kernels) {
    bool homogeneous = classify_presentation(p).homogeneous;
    if (homogeneous && b.size() != c.size()) {
      continue;  // no NC tuples by the degree obstruction
    }
    auto kernel = certify_kernel(p, b, c, limits);
    if (!kernel) {
      ClassEnumeration cls = enumerate_class(p, b, limits);
      if (!cls.exhaustive()) {
        result.kernel_unknown = true;
      }
      continue;  // b ~ c: not a kernel
    }
    NCSearchResult search = search_nc_over_kernel(p, *kernel, max_flank_length, limits);
    result.unknown.insert(result.unknown.end(), search.unknown.begin(), search.unknown.end());
    std::vector<NCTuple> reduced;
    for (auto& t : search.tuples) {
      ClassificationVerdict verdict = is_reduced(p, t, limits);
      if (verdict.status == Status::yes) {
        reduced.push_back(std::move(t));
      } else if (verdict.status == Status::unknown) {
        result.unknown.emplace_back(t.a, t.d);
      }
    }
    for (size_t i = 0; i < reduced.size(); ++i) {
      for (size_t j = i + 1; j < reduced.size(); ++j) {
        result.twins.push_back(Twin{reduced[i], reduced[j]});
      }
    }
  }
  return result;
}

BoundaryLetterReport boundary_letter_invariant(Presentation const& p) {
  BoundaryLetterReport report;
  for (auto const& r : p.relations()) {
    if (r.lhs.empty() || r.rhs.empty()) {
      throw error("boundary letter invariant requires a positive presentation");
    }
    report.start_letters.insert(r.lhs.front());
    report.start_letters.insert(r.rhs.front());
    report.end_letters.insert(r.lhs.back());
    report.end_letters.insert(r.rhs.back());
  }
  for (letter_t x = 0; x < static_cast<letter_t>(p.rank()); ++x) {
    if (report.end_letters.count(x) == 0) {
      report.preserved_end.insert(x);
    }
    if (report.start_letters.count(x) == 0) {
      report.preserved_start.insert(x);
    }
  }
  return report;
}

ClassificationVerdict prove_no_one_sided_nc(Presentation const& p, Word const& b, Word const& c,
                                            FlankSide side) {
  ClassificationVerdict v;
  v.status = Status::unknown;
  if (b.empty() || c.empty()) {
    return v;
  }
  for (auto const& r : p.relations()) {
    if (r.lhs.empty() || r.rhs.empty()) {
      return v;  // the invariant argument needs a positive presentation
    }
  }
  BoundaryLetterReport report = boundary_letter_invariant(p);
  if (side == FlankSide::right) {
    // Tuples (P, 1): P.b vs P.c; final letters are rewrite invariants.
    letter_t lb = b.back();
    letter_t lc = c.back();
    if (lb != lc && report.preserved_end.count(lb) > 0 && report.preserved_end.count(lc) > 0) {
      v.status = Status::yes;
    }
  } else {
    // Tuples (1, P): b.P vs c.P; initial letters are rewrite invariants.
    letter_t fb = b.front();
    letter_t fc = c.front();
    if (fb != fc && report.preserved_start.count(fb) > 0 &&
        report.preserved_start.count(fc) > 0) {
      v.status = Status::yes;
    }
  }
  return v;
}

namespace {

BASimplex make_simplex(int tuple, char side, Word const& a, Word const& mid, Word const& d) {
  BASimplex s;
  s.tuple = tuple;
  s.side = side;
  // Unit entries collapse the 3-simplex to a 2-simplex.
  if (a.empty() && !d.empty()) {
    s.cells = {mid, d};
    s.dimension = 2;
  } else if (d.empty() && !a.empty()) {
    s.cells = {a, mid};
    s.dimension = 2;
  } else if (a.empty() && d.empty()) {
    s.cells = {mid};
    s.dimension = 1;
  } else {
    s.cells = {a, mid, d};
    s.dimension = 3;
  }
  return s;
}

BAEquivalence make_equivalence(int tuple, char side, Word const& a, Word const& mid,
                               Word const& d) {
  BAEquivalence e;
  e.tuple = tuple;
  e.side = side;
  e.loop = mid;
  e.through = concat(a, mid, d);
  e.left_flank = a;
  e.right_flank = d;
  return e;
}

}  // namespace

BACertificate ba_certificate(Presentation const& p, Twin const& twin) {
  (void)p;
  BACertificate cert;
  NCTuple const& t1 = twin.first;
  NCTuple const& t2 = twin.second;
  cert.simplices = {
      make_simplex(0, 'b', t1.a, t1.b, t1.d),
      make_simplex(0, 'c', t1.a, t1.c, t1.d),
      make_simplex(1, 'b', t2.a, t2.b, t2.d),
      make_simplex(1, 'c', t2.a, t2.c, t2.d),
  };
  cert.equivalences = {
      make_equivalence(0, 'b', t1.a, t1.b, t1.d),
      make_equivalence(0, 'c', t1.a, t1.c, t1.d),
      make_equivalence(1, 'b', t2.a, t2.b, t2.d),
      make_equivalence(1, 'c', t2.a, t2.c, t2.d),
  };
  cert.pairing = {0, 1};
  return cert;
}

nlohmann::json kernel_to_json(Presentation const& p, Kernel const& k) {
  nlohmann::json j;
  j["b"] = word_symbols(p, k.b);
  j["c"] = word_symbols(p, k.c);
  j["class"] = nlohmann::json::array();
  for (auto const& w : k.b_class) {
    j["class"].push_back(word_symbols(p, w));
  }
  return j;
}

Kernel kernel_from_json(Presentation const& p, nlohmann::json const& j) {
  Kernel k;
  k.b = word_from_symbols(p, j.at("b").get<std::vector<std::string>>());
  k.c = word_from_symbols(p, j.at("c").get<std::vector<std::string>>());
  for (auto const& w : j.at("class")) {
    k.b_class.push_back(word_from_symbols(p, w.get<std::vector<std::string>>()));
  }
  return k;
}

nlohmann::json nc_tuple_to_json(Presentation const& p, NCTuple const& t) {
  nlohmann::json j;
  j["a"] = word_symbols(p, t.a);
  j["b"] = word_symbols(p, t.b);
  j["c"] = word_symbols(p, t.c);
  j["d"] = word_symbols(p, t.d);
  j["witness"] = witness_to_json(p, t.relation_witness);
  j["kernel"] = kernel_to_json(p, t.kernel);
  return j;
}

NCTuple nc_tuple_from_json(Presentation const& p, nlohmann::json const& j) {
  NCTuple t;
  t.a = word_from_symbols(p, j.at("a").get<std::vector<std::string>>());
  t.b = word_from_symbols(p, j.at("b").get<std::vector<std::string>>());
  t.c = word_from_symbols(p, j.at("c").get<std::vector<std::string>>());
  t.d = word_from_symbols(p, j.at("d").get<std::vector<std::string>>());
  t.relation_witness = witness_from_json(p, j.at("witness"));
  t.kernel = kernel_from_json(p, j.at("kernel"));
  return t;
}

nlohmann::json twin_to_json(Presentation const& p, Twin const& t) {
  return {{"first", nc_tuple_to_json(p, t.first)}, {"second", nc_tuple_to_json(p, t.second)}};
}

nlohmann::json verdict_to_json(Presentation const& p, ClassificationVerdict const& v) {
  nlohmann::json j;
  switch (v.status) {
    case Status::yes:
      j["status"] = "yes";
      break;
    case Status::no:
      j["status"] = "no";
      break;
    case Status::unknown:
      j["status"] = "unknown";
      break;
  }
  if (v.smaller) {
    j["smaller"] = nc_tuple_to_json(p, *v.smaller);
  }
  if (v.divisor) {
    j["divisor"] = word_symbols(p, *v.divisor);
    j["divisor_side"] = v.divisor_on_left ? "left" : "right";
  }
  if (v.factors) {
    nlohmann::json f = nlohmann::json::array();
    for (auto const& w : *v.factors) {
      f.push_back(word_symbols(p, w));
    }
    j["factors"] = std::move(f);
  }
  return j;
}

nlohmann::json ba_certificate_to_json(Presentation const& p, BACertificate const& cert) {
  nlohmann::json j;
  j["simplices"] = nlohmann::json::array();
  for (auto const& s : cert.simplices) {
    nlohmann::json js;
    js["tuple"] = s.tuple;
    js["side"] = std::string(1, s.side);
    js["dimension"] = s.dimension;
    js["cells"] = nlohmann::json::array();
    for (auto const& w : s.cells) {
      js["cells"].push_back(word_symbols(p, w));
    }
    j["simplices"].push_back(std::move(js));
  }
  j["equivalences"] = nlohmann::json::array();
  for (auto const& e : cert.equivalences) {
    j["equivalences"].push_back({{"tuple", e.tuple},
                                 {"side", std::string(1, e.side)},
                                 {"loop", word_symbols(p, e.loop)},
                                 {"through", word_symbols(p, e.through)},
                                 {"left_flank", word_symbols(p, e.left_flank)},
                                 {"right_flank", word_symbols(p, e.right_flank)}});
  }
  j["pairings"] = nlohmann::json::array();
  j["pairings"].push_back(
      {{"first", cert.pairing.first}, {"second_inverted", cert.pairing.second}});
  return j;
}

BACertificate ba_certificate_from_json(Presentation const& p, nlohmann::json const& j) {
  BACertificate cert;
  for (auto const& js : j.at("simplices")) {
    BASimplex s;
    s.tuple = js.at("tuple").get<int>();
    s.side = js.at("side").get<std::string>().at(0);
    s.dimension = js.at("dimension").get<int>();
    for (auto const& w : js.at("cells")) {
      s.cells.push_back(word_from_symbols(p, w.get<std::vector<std::string>>()));
    }
    cert.simplices.push_back(std::move(s));
  }
  for (auto const& je : j.at("equivalences")) {
    BAEquivalence e;
    e.tuple = je.at("tuple").get<int>();
    e.side = je.at("side").get<std::string>().at(0);
    e.loop = word_from_symbols(p, je.at("loop").get<std::vector<std::string>>());
    e.through = word_from_symbols(p, je.at("through").get<std::vector<std::string>>());
    e.left_flank = word_from_symbols(p, je.at("left_flank").get<std::vector<std::string>>());
    e.right_flank = word_from_symbols(p, je.at("right_flank").get<std::vector<std::string>>());
    cert.equivalences.push_back(std::move(e));
  }
  auto const& jp = j.at("pairings").at(0);
  cert.pairing = {jp.at("first").get<int>(), jp.at("second_inverted").get<int>()};
  return cert;
}

}  // namespace pi2
