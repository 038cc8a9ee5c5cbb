#include "pi2/cli.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "pi2/example1.hpp"

namespace pi2 {

namespace {

using nlohmann::json;

std::string fingerprint(Presentation const& p) {
  std::string text = serialize_presentation(p).dump();
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << h;
  return out.str();
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
  }
};

json limits_json(SearchLimits const& lim) {
  return {{"max_word_length", lim.max_word_length},
          {"max_states", lim.max_states},
          {"max_depth", lim.max_depth}};
}

void stamp(Report& report, std::string const& command, RunConfig const& cfg,
           Presentation const* p, Timer const& timer) {
  report.doc["command"] = command;
  if (p != nullptr) {
    report.doc["presentation"] = {{"path", cfg.presentation},
                                  {"fingerprint", fingerprint(*p)},
                                  {"document", serialize_presentation(*p)}};
  }
  report.doc["limits"] = limits_json(cfg.limits);
  report.doc["duration_ms"] = timer.ms();
}

std::string bound_name(Bound b) {
  switch (b) {
    case Bound::word_length:
      return "max_word_length";
    case Bound::states:
      return "max_states";
    case Bound::depth:
      return "max_depth";
    default:
      return "none";
  }
}

std::string render_steps(Presentation const& p, std::vector<ElementaryStep> const& steps) {
  std::string out;
  for (size_t i = 0; i < steps.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += p.relation(steps[i].relation).label;
    if (!steps[i].forward) {
      out += "^-1";
    }
    out += "@" + std::to_string(steps[i].prefix_len);
  }
  return out;
}

json words_json(Presentation const& p, std::vector<Word> const& words) {
  json out = json::array();
  for (auto const& w : words) {
    out.push_back(word_symbols(p, w));
  }
  return out;
}

json classify_tuple(Presentation const& p, NCTuple const& t, SearchLimits const& limits,
                    bool& any_unknown) {
  json out;
  auto record = [&](char const* key, ClassificationVerdict const& v) {
    out[key] = verdict_to_json(p, v);
    if (v.status == Status::unknown) {
      any_unknown = true;
    }
  };
  record("reduced", is_reduced(p, t, limits));
  record("minimal", is_minimal(p, t, limits));
  record("indecomposable", is_indecomposable(p, t, limits));
  return out;
}

}  // namespace

std::vector<std::pair<Word, Word>> parse_kernels(Presentation const& p, std::string const& text) {
  std::vector<std::pair<Word, Word>> out;
  std::stringstream list(text);
  std::string item;
  while (std::getline(list, item, ';')) {
    if (item.empty()) {
      continue;
    }
    auto bar = item.find('|');
    if (bar == std::string::npos) {
      throw error("kernel syntax is \"b|c\": " + item);
    }
    out.emplace_back(parse_word(p, item.substr(0, bar)), parse_word(p, item.substr(bar + 1)));
  }
  if (out.empty()) {
    throw error("no kernels given");
  }
  return out;
}

std::vector<std::pair<Word, Word>> enumerate_kernels(Presentation const& p, size_t max_len,
                                                     SearchLimits const& limits) {
  bool homogeneous = classify_presentation(p).homogeneous;
  std::vector<Word> words;
  words.push_back({});
  {
    size_t begin = 0;
    for (size_t len = 1; len <= max_len; ++len) {
      size_t end = words.size();
      for (size_t i = begin; i < end; ++i) {
        for (letter_t x = 0; x < static_cast<letter_t>(p.rank()); ++x) {
          Word w = words[i];
          w.push_back(x);
          words.push_back(std::move(w));
        }
      }
      begin = end;
    }
  }
  ClassCache cache(p, limits);
  std::vector<std::pair<Word, Word>> kernels;
  std::set<std::pair<Word, Word>> seen;
  for (auto const& b : words) {
    if (b.empty()) {
      continue;  // kernels with an empty side cannot satisfy a.b.d ~ a.c.d
    }
    for (auto const& c : words) {
      if (c.empty() || b == c) {
        continue;
      }
      // Degree obstruction: in a homogeneous presentation, words of unequal
      // length admit no NC relation at all.
      if (homogeneous && b.size() != c.size()) {
        continue;
      }
      auto eq = cache.equivalent(b, c);
      if (!eq.has_value() || *eq) {
        continue;
      }
      auto cb = cache.lookup(b);
      auto cc = cache.lookup(c);
      Word rb = cb->representative();
      Word rc = cc->representative();
      auto key = rb < rc ? std::make_pair(rb, rc) : std::make_pair(rc, rb);
      if (seen.insert(key).second) {
        kernels.emplace_back(b, c);
      }
    }
  }
  return kernels;
}

Report cmd_equiv(RunConfig const& cfg, std::string const& u_text, std::string const& v_text) {
  Timer timer;
  Report report;
  Presentation p = load_presentation_any(cfg.presentation);
  Word u = parse_word(p, u_text);
  Word v = parse_word(p, v_text);
  auto result = distance(p, u, v, cfg.limits);
  auto const& verdict = result.verdict;

  json res;
  res["u"] = word_symbols(p, u);
  res["v"] = word_symbols(p, v);
  std::ostringstream text;
  switch (verdict.kind) {
    case VerdictKind::equivalent:
      res["verdict"] = "equivalent";
      res["distance"] = *result.distance;
      res["witness"] = witness_to_json(p, *verdict.witness);
      text << "equivalent, distance " << *result.distance;
      if (!verdict.witness->steps.empty()) {
        text << ": " << render_steps(p, verdict.witness->steps);
      }
      break;
    case VerdictKind::inequivalent:
      res["verdict"] = "inequivalent";
      res["class_certificate"] = words_json(p, verdict.class_certificate);
      text << "inequivalent: the class of " << format_word(p, u) << " has "
           << verdict.class_certificate.size() << " words and does not contain "
           << format_word(p, v);
      break;
    case VerdictKind::unknown:
      res["verdict"] = "unknown";
      res["bound"] = bound_name(verdict.bound);
      report.any_unknown = true;
      text << "unknown (" << bound_name(verdict.bound) << " hit)";
      break;
  }
  report.doc["results"] = std::move(res);
  report.doc["exhaustive"] = !report.any_unknown;
  report.text = text.str();
  stamp(report, "equiv", cfg, &p, timer);
  return report;
}

Report cmd_component(RunConfig const& cfg, std::string const& w_text, std::string const& dot_path) {
  Timer timer;
  Report report;
  Presentation p = load_presentation_any(cfg.presentation);
  Word w = parse_word(p, w_text);
  RewriteGraph g = build_component(p, w, cfg.limits);
  report.doc["results"] = component_report(p, g);
  report.any_unknown = !g.exhaustive();
  report.doc["exhaustive"] = g.exhaustive();
  std::string dot = export_dot(p, g);
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) {
      throw error("cannot write DOT file: " + dot_path);
    }
    out << dot;
    report.doc["dot_file"] = dot_path;
  }
  if (cfg.format == "dot") {
    report.text = dot;
  } else {
    std::ostringstream text;
    text << "component of " << format_word(p, w) << ": " << g.vertices().size() << " vertices, "
         << g.edges().size() << " edges";
    if (g.exhaustive()) {
      text << (is_tree(g) ? ", tree" : ", cycle rank " + std::to_string(g.cycle_rank()));
    } else {
      text << ", truncated (" << bound_name(g.bound_hit()) << ")";
    }
    report.text = text.str();
  }
  stamp(report, "component", cfg, &p, timer);
  return report;
}

Report cmd_nc(RunConfig const& cfg, std::string const& kernel_text, size_t flank,
              bool prove_one_sided) {
  Timer timer;
  Report report;
  Presentation p = load_presentation_any(cfg.presentation);
  auto kernels = parse_kernels(p, kernel_text);
  json results = json::array();
  std::ostringstream text;
  for (auto const& [b, c] : kernels) {
    json jk;
    jk["kernel"] = {{"b", word_symbols(p, b)}, {"c", word_symbols(p, c)}};
    auto kernel = certify_kernel(p, b, c, cfg.limits);
    if (!kernel) {
      ClassEnumeration cls = enumerate_class(p, b, cfg.limits);
      if (cls.exhaustive()) {
        jk["status"] = "not_a_kernel";  // b ~ c
        text << format_word(p, b) << "|" << format_word(p, c) << ": not a kernel (b ~ c)\n";
      } else {
        jk["status"] = "unknown";
        jk["bound"] = bound_name(cls.bound_hit());
        report.any_unknown = true;
        text << format_word(p, b) << "|" << format_word(p, c) << ": kernel status unknown\n";
      }
      results.push_back(std::move(jk));
      continue;
    }
    jk["status"] = "certified";
    jk["certificate"] = kernel_to_json(p, *kernel);
    NCSearchResult search = search_nc_over_kernel(p, *kernel, flank, cfg.limits);
    jk["tuples"] = json::array();
    for (auto const& t : search.tuples) {
      json jt = nc_tuple_to_json(p, t);
      jt["classification"] = classify_tuple(p, t, cfg.limits, report.any_unknown);
      jk["tuples"].push_back(std::move(jt));
    }
    if (!search.unknown.empty()) {
      report.any_unknown = true;
      jk["unknown_flanks"] = json::array();
      for (auto const& [a, d] : search.unknown) {
        jk["unknown_flanks"].push_back(
            {{"a", word_symbols(p, a)}, {"d", word_symbols(p, d)}});
      }
    }
    if (prove_one_sided) {
      auto right = prove_no_one_sided_nc(p, b, c, FlankSide::right);
      auto left = prove_no_one_sided_nc(p, b, c, FlankSide::left);
      jk["no_one_sided"] = {{"right_flanked", verdict_to_json(p, right)},
                            {"left_flanked", verdict_to_json(p, left)}};
    }
    text << format_word(p, b) << "|" << format_word(p, c) << ": " << search.tuples.size()
         << " NC tuples with flank <= " << flank << "\n";
    for (auto const& t : search.tuples) {
      text << "  (a, d) = (" << format_word(p, t.a) << ", " << format_word(p, t.d)
           << "), witness " << render_steps(p, t.relation_witness.steps) << "\n";
    }
    results.push_back(std::move(jk));
  }
  report.doc["results"] = {{"flank_bound", flank}, {"kernels", std::move(results)}};
  report.doc["exhaustive"] = !report.any_unknown;
  report.text = text.str();
  stamp(report, "nc", cfg, &p, timer);
  return report;
}

Report cmd_twins(RunConfig const& cfg, std::string const& kernels_text, int all_kernels_up_to,
                 size_t flank) {
  Timer timer;
  Report report;
  Presentation p = load_presentation_any(cfg.presentation);
  std::vector<std::pair<Word, Word>> kernels;
  if (all_kernels_up_to > 0) {
    kernels = enumerate_kernels(p, static_cast<size_t>(all_kernels_up_to), cfg.limits);
  } else {
    kernels = parse_kernels(p, kernels_text);
  }
  TwinSearchResult result = find_twins(p, kernels, flank, cfg.limits);
  report.any_unknown = result.kernel_unknown || !result.unknown.empty();

  json jtwins = json::array();
  for (auto const& twin : result.twins) {
    jtwins.push_back(twin_to_json(p, twin));
  }
  report.doc["results"] = {{"kernels_examined", kernels.size()},
                           {"flank_bound", flank},
                           {"twins", std::move(jtwins)},
                           {"unknown_flanks", result.unknown.size()}};
  report.doc["exhaustive"] = !report.any_unknown;
  std::ostringstream text;
  text << result.twins.size() << " twins over " << kernels.size() << " kernels (flank <= "
       << flank << ")";
  for (auto const& twin : result.twins) {
    text << "\n  (" << format_word(p, twin.first.a) << ", " << format_word(p, twin.first.d)
         << ") and (" << format_word(p, twin.second.a) << ", " << format_word(p, twin.second.d)
         << ") over (" << format_word(p, twin.first.b) << ", " << format_word(p, twin.first.c)
         << ")";
  }
  report.text = text.str();
  stamp(report, "twins", cfg, &p, timer);
  return report;
}

Report cmd_pi2(RunConfig const& cfg, std::string const& kernels_text, size_t flank,
               int oracle_radius, bool with_ba) {
  Timer timer;
  Report report;
  Presentation p = load_presentation_any(cfg.presentation);
  auto kernels = parse_kernels(p, kernels_text);
  TwinSearchResult found = find_twins(p, kernels, flank, cfg.limits);
  report.any_unknown = found.kernel_unknown || !found.unknown.empty();

  std::ostringstream text;
  json jtwins = json::array();
  std::vector<TwoChain> chains;
  for (auto const& twin : found.twins) {
    TwoChain chain =
        pi_class_chain(p, twin, twin.first.relation_witness, twin.second.relation_witness);
    json jt;
    jt["twin"] = twin_to_json(p, twin);
    jt["pi_chain"] = two_chain_to_json(p, chain);
    jt["pi_chain_text"] = format_two_chain(p, chain);
    jt["is_cycle"] = is_cycle(p, chain);
    jt["nonzero"] = !chain.is_zero();

    // Division inertia generators from the two component loop spaces.
    auto inertia = [&](NCTuple const& t) {
      json out = json::array();
      RewriteGraph g = build_component(p, concat(t.a, t.b, t.d), cfg.limits);
      if (!g.exhaustive()) {
        report.any_unknown = true;
        return out;
      }
      for (auto const& gen : inertia_chain_generators(p, g)) {
        TwoChain divided = divide_chain(p, gen, t.a);
        out.push_back(two_chain_to_json(p, divided));
      }
      return out;
    };
    jt["inertia_generators"] = {{"first", inertia(twin.first)}, {"second", inertia(twin.second)}};
    if (with_ba) {
      jt["ba_certificate"] = ba_certificate_to_json(p, ba_certificate(p, twin));
    }
    text << "twin ((" << format_word(p, twin.first.a) << ", " << format_word(p, twin.first.d)
         << "), (" << format_word(p, twin.second.a) << ", " << format_word(p, twin.second.d)
         << ")) over (" << format_word(p, twin.first.b) << ", " << format_word(p, twin.first.c)
         << ")\n  Pi-chain: " << format_two_chain(p, chain)
         << "\n  cycle: " << (is_cycle(p, chain) ? "yes" : "no") << "\n";
    jtwins.push_back(std::move(jt));
    chains.push_back(std::move(chain));
  }

  // Pairwise unit comparison across every computed Pi-chain.
  json junit = json::array();
  for (size_t i = 0; i < chains.size(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < chains.size(); ++j) {
      auto unit = unit_equal(chains[i], chains[j]);
      if (unit) {
        row.push_back({{"sign", unit->sign}, {"exp", unit->monomial.exp}});
      } else {
        row.push_back(nullptr);
      }
    }
    junit.push_back(std::move(row));
  }

  json joracle;
  if (oracle_radius > 0) {
    auto basis = box_kernel_basis(p, oracle_radius);
    joracle["radius"] = oracle_radius;
    joracle["basis_size"] = basis.size();
    // Deterministic generator pick: smallest total support, then smallest
    // serialized form.
    auto support = [&](TwoChain const& ch) {
      size_t n = 0;
      for (auto const& [r, coef] : ch.coefficients) {
        n += coef.support_size();
      }
      return n;
    };
    int best = -1;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (best < 0 || support(basis[i]) < support(basis[best]) ||
          (support(basis[i]) == support(basis[best]) &&
           two_chain_to_json(p, basis[i]).dump() < two_chain_to_json(p, basis[best]).dump())) {
        best = static_cast<int>(i);
      }
    }
    if (best >= 0) {
      TwoChain const& gen = basis[best];
      joracle["generator"] = two_chain_to_json(p, gen);
      joracle["generator_text"] = format_two_chain(p, gen);
      bool generated = true;
      for (auto const& elem : basis) {
        if (!divide_by_chain(elem, gen)) {
          generated = false;
          break;
        }
      }
      joracle["basis_generated_by_single_chain"] = generated;
      json memberships = json::array();
      for (auto const& chain : chains) {
        json m;
        auto unit = unit_equal(chain, gen);
        if (unit) {
          m["unit_of_generator"] = {{"sign", unit->sign}, {"exp", unit->monomial.exp}};
        } else {
          m["unit_of_generator"] = nullptr;
        }
        auto quotient = divide_by_chain(chain, gen);
        m["multiple_of_generator"] = quotient.has_value();
        m["in_basis_span"] = express_in_basis(p, basis, chain).has_value();
        memberships.push_back(std::move(m));
      }
      joracle["pi_chains"] = std::move(memberships);
    }
  }

  report.doc["results"] = {{"flank_bound", flank},
                           {"twins", std::move(jtwins)},
                           {"unit_matrix", std::move(junit)}};
  if (oracle_radius > 0) {
    report.doc["results"]["oracle"] = std::move(joracle);
  }
  report.doc["exhaustive"] = !report.any_unknown;
  report.text = text.str();
  stamp(report, "pi2", cfg, &p, timer);
  return report;
}

Report cmd_example1(RunConfig const& cfg, int m, size_t length_bound) {
  Timer timer;
  Report report;
  Presentation p = example1_presentation(m);
  RunConfig stamped = cfg;
  stamped.presentation = "example1(m=" + std::to_string(m) + ")";

  json res;
  res["m"] = m;
  res["length_bound"] = length_bound;

  // The commutation ab ~ ba, found by breadth-first search.
  Word ab = parse_word(p, "a b");
  Word ba = parse_word(p, "b a");
  auto commutation = distance(p, ab, ba, SearchLimits::for_pair(p, ab, ba));
  if (commutation.verdict.is_equivalent()) {
    res["commutation"] = {{"distance", *commutation.distance},
                          {"witness", witness_to_json(p, *commutation.verdict.witness)}};
  } else {
    res["commutation"] = nullptr;
    report.any_unknown = true;
  }

  // Bounded sweep: every word up to the bound is dragged to its canonical
  // form a^p b^q by a constructed, replay-validated witness; equal values
  // must land on equal forms.
  std::vector<Word> words;
  words.push_back({});
  {
    size_t begin = 0;
    for (size_t len = 1; len <= length_bound; ++len) {
      size_t end = words.size();
      for (size_t i = begin; i < end; ++i) {
        for (letter_t x = 0; x < 2; ++x) {
          Word w = words[i];
          w.push_back(x);
          words.push_back(std::move(w));
        }
      }
      begin = end;
    }
  }
  std::map<int64_t, std::set<Word>> forms_by_value;
  std::map<int64_t, std::vector<Word>> words_by_value;
  size_t witness_failures = 0;
  for (auto const& w : words) {
    int64_t value = example1_value(m, w);
    Witness wit = example1_normal_form_witness(p, m, w);
    Word nf = replay_witness(p, wit);
    if (nf != example1_normal_form(m, w) || example1_value(m, nf) != value) {
      ++witness_failures;
      continue;
    }
    forms_by_value[value].insert(nf);
    words_by_value[value].push_back(w);
  }
  bool single_form_per_value = true;
  for (auto const& [value, forms] : forms_by_value) {
    if (forms.size() != 1) {
      single_form_per_value = false;
    }
  }
  res["sweep"] = {{"words", words.size()},
                  {"distinct_values", forms_by_value.size()},
                  {"witness_failures", witness_failures},
                  {"single_form_per_value", single_form_per_value}};

  // Direct probes: bounded equivalence search on a few equal-value pairs must
  // never certify inequivalence (classes here are infinite, so a sound
  // verdict is equivalent-or-unknown).
  SearchLimits probe;
  probe.max_states = 5000;
  probe.max_word_length = 2 * length_bound + 2 * (2 * static_cast<size_t>(m) + 1);
  json jprobes = json::array();
  size_t probes = 0;
  bool inequivalent_seen = false;
  for (auto const& [value, bucket] : words_by_value) {
    if (bucket.size() < 2 || probes >= 10) {
      continue;
    }
    Word const& u = bucket.front();
    Word const& v = bucket.back();
    auto verdict = decide_equivalent(p, u, v, probe);
    std::string verdict_name = verdict.kind == VerdictKind::equivalent     ? "equivalent"
                               : verdict.kind == VerdictKind::inequivalent ? "inequivalent"
                                                                           : "unknown";
    if (verdict.kind == VerdictKind::inequivalent) {
      inequivalent_seen = true;
    }
    if (verdict.kind == VerdictKind::unknown) {
      report.any_unknown = true;
    }
    jprobes.push_back({{"u", word_symbols(p, u)},
                       {"v", word_symbols(p, v)},
                       {"value", value},
                       {"verdict", verdict_name}});
    ++probes;
  }
  res["probes"] = std::move(jprobes);
  res["inequivalent_equal_value_pair_found"] = inequivalent_seen;

  report.ok = !inequivalent_seen && witness_failures == 0 && single_form_per_value;
  std::ostringstream text;
  text << "example1 m=" << m << ": ab ~ ba "
       << (commutation.verdict.is_equivalent()
               ? "in " + std::to_string(*commutation.distance) + " steps"
               : "NOT FOUND")
       << "; " << words.size() << " words up to length " << length_bound
       << " reduced to canonical forms, " << forms_by_value.size() << " values, "
       << (single_form_per_value ? "one form per value" : "FORM COLLISION") << ", "
       << witness_failures << " witness failures";
  report.text = text.str();
  report.doc["results"] = std::move(res);
  report.doc["exhaustive"] = false;  // classes are infinite; everything is bounded
  stamp(report, "example1", stamped, &p, timer);
  return report;
}

namespace {

// Replay-only re-checking of an emitted report: every embedded certificate is
// validated against the embedded presentation.
struct Verifier {
  Presentation const& p;
  std::vector<std::string> failures;
  size_t checked = 0;

  void note(bool ok, std::string const& what) {
    ++checked;
    if (!ok) {
      failures.push_back(what);
    }
  }

  void check_witness(json const& j) {
    try {
      Witness wit = witness_from_json(p, j);
      replay_witness(p, wit);
      note(true, "");
    } catch (std::exception const& e) {
      note(false, std::string("witness replay failed: ") + e.what());
    }
  }

  void check_kernel(json const& j) {
    try {
      Kernel k = kernel_from_json(p, j);
      bool ok = k.certifies();
      // Closure: the class certificate must be closed under every
      // applicable step, which makes the inequivalence sound.
      std::set<Word> cls(k.b_class.begin(), k.b_class.end());
      for (auto const& w : k.b_class) {
        for (auto const& s : applicable_steps(p, w)) {
          if (cls.count(apply_step(p, w, s)) == 0) {
            ok = false;
          }
        }
      }
      note(ok, "kernel certificate not closed or b/c membership wrong");
    } catch (std::exception const& e) {
      note(false, std::string("kernel check failed: ") + e.what());
    }
  }

  void check_tuple(json const& j) {
    try {
      NCTuple t = nc_tuple_from_json(p, j);
      bool ok = t.relation_witness.start == concat(t.a, t.b, t.d) &&
                replay_witness(p, t.relation_witness) == concat(t.a, t.c, t.d) &&
                t.kernel.b == t.b && t.kernel.c == t.c;
      note(ok, "NC tuple witness does not connect a.b.d to a.c.d");
    } catch (std::exception const& e) {
      note(false, std::string("NC tuple check failed: ") + e.what());
    }
  }

  void walk(json const& j) {
    if (j.is_object()) {
      if (j.contains("start") && j.contains("steps")) {
        check_witness(j);
      }
      if (j.contains("b") && j.contains("c") && j.contains("class")) {
        check_kernel(j);
      }
      if (j.contains("a") && j.contains("b") && j.contains("c") && j.contains("d") &&
          j.contains("witness") && j.contains("kernel")) {
        check_tuple(j);
      }
      if (j.contains("pi_chain") && j.contains("is_cycle")) {
        // Chains stated to be cycles must have zero boundary.
        try {
          TwoChain ch = two_chain_from_json(p, j.at("pi_chain"));
          note(is_cycle(p, ch) == j.at("is_cycle").get<bool>(), "chain cycle flag wrong");
        } catch (std::exception const& e) {
          note(false, std::string("chain check failed: ") + e.what());
        }
      }
      for (auto const& [key, value] : j.items()) {
        walk(value);
      }
    } else if (j.is_array()) {
      for (auto const& item : j) {
        walk(item);
      }
    }
  }
};

}  // namespace

Report cmd_verify(std::string const& report_path) {
  Timer timer;
  Report report;
  std::ifstream in(report_path);
  if (!in) {
    throw error("cannot open report: " + report_path);
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (json::parse_error const& e) {
    throw error(std::string("report is not valid JSON: ") + e.what());
  }
  if (!doc.contains("presentation") || !doc["presentation"].contains("document")) {
    throw error("report does not embed its presentation");
  }
  Presentation p = parse_presentation(doc["presentation"]["document"]);
  Verifier verifier{p, {}, 0};
  verifier.walk(doc.contains("results") ? doc["results"] : doc);

  report.ok = verifier.failures.empty();
  report.doc["command"] = "verify";
  report.doc["report"] = report_path;
  report.doc["certificates_checked"] = verifier.checked;
  report.doc["failures"] = verifier.failures;
  report.doc["duration_ms"] = timer.ms();
  std::ostringstream text;
  text << (report.ok ? "OK" : "FAILED") << ": " << verifier.checked << " certificates checked";
  if (!report.ok) {
    text << ", " << verifier.failures.size() << " failures";
  }
  report.text = text.str();
  return report;
}

Report cmd_corpus(std::string const& dump_name) {
  Timer timer;
  Report report;
  report.doc["command"] = "corpus";
  json names = json::array();
  for (auto const& [name, text] : corpus_files()) {
    names.push_back(name);
  }
  report.doc["presentations"] = names;
  std::ostringstream text;
  if (dump_name.empty()) {
    for (auto const& [name, body] : corpus_files()) {
      text << name << "\n";
    }
  } else {
    auto body = corpus_file(dump_name);
    if (!body) {
      throw error("no such corpus presentation: " + dump_name);
    }
    report.doc["document"] = json::parse(*body);
    text << *body;
  }
  report.doc["duration_ms"] = timer.ms();
  report.text = text.str();
  return report;
}

}  // namespace pi2
