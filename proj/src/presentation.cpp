#include "pi2/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace pi2 {

Presentation::Presentation(std::vector<std::string> alphabet, std::vector<Relation> relations)
    : alphabet_(std::move(alphabet)), relations_(std::move(relations)) {
  validate_and_index();
}

void Presentation::validate_and_index() {
  for (size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i].empty()) {
      throw error("empty alphabet symbol at position " + std::to_string(i));
    }
    auto [it, fresh] = symbol_index_.emplace(alphabet_[i], static_cast<letter_t>(i));
    if (!fresh) {
      throw error("duplicate alphabet symbol: " + alphabet_[i]);
    }
  }
  auto check_word = [&](Word const& w, std::string const& where) {
    for (letter_t x : w) {
      if (x < 0 || static_cast<size_t>(x) >= alphabet_.size()) {
        throw error("letter index out of range in " + where);
      }
    }
  };
  for (size_t i = 0; i < relations_.size(); ++i) {
    Relation const& r = relations_[i];
    if (r.label.empty()) {
      throw error("empty relation label at position " + std::to_string(i));
    }
    check_word(r.lhs, "relation " + r.label);
    check_word(r.rhs, "relation " + r.label);
    if (r.lhs == r.rhs) {
      throw error("relation " + r.label + " has identical sides");
    }
    auto [it, fresh] = label_index_.emplace(r.label, static_cast<int>(i));
    if (!fresh) {
      throw error("duplicate relation label: " + r.label);
    }
  }
  by_label_.resize(relations_.size());
  std::iota(by_label_.begin(), by_label_.end(), 0);
  std::sort(by_label_.begin(), by_label_.end(),
            [&](int a, int b) { return relations_[a].label < relations_[b].label; });
}

letter_t Presentation::letter_index(std::string const& symbol) const {
  auto it = symbol_index_.find(symbol);
  return it == symbol_index_.end() ? -1 : it->second;
}

int Presentation::relation_index(std::string const& label) const {
  auto it = label_index_.find(label);
  return it == label_index_.end() ? -1 : it->second;
}

size_t Presentation::longest_relation_side() const {
  size_t n = 0;
  for (auto const& r : relations_) {
    n = std::max({n, r.lhs.size(), r.rhs.size()});
  }
  return n;
}

PresentationClass classify_presentation(Presentation const& p) {
  PresentationClass c;
  c.positive = true;
  c.homogeneous = true;
  for (auto const& r : p.relations()) {
    if (r.lhs.empty() || r.rhs.empty()) {
      c.positive = false;
    }
    if (r.lhs.size() != r.rhs.size()) {
      c.homogeneous = false;
    }
  }
  return c;
}

namespace {

Word word_from_json(Presentation const& p, nlohmann::json const& arr, std::string const& where) {
  if (!arr.is_array()) {
    throw error(where + " is not an array of symbols");
  }
  Word w;
  w.reserve(arr.size());
  for (auto const& s : arr) {
    if (!s.is_string()) {
      throw error(where + " contains a non-string entry");
    }
    letter_t i = p.letter_index(s.get<std::string>());
    if (i < 0) {
      throw error("unknown symbol \"" + s.get<std::string>() + "\" in " + where);
    }
    w.push_back(i);
  }
  return w;
}

}  // namespace

Presentation parse_presentation(nlohmann::json const& document) {
  if (!document.is_object() || !document.contains("alphabet") || !document.contains("relations")) {
    throw error("presentation document must have \"alphabet\" and \"relations\" keys");
  }
  std::vector<std::string> alphabet;
  for (auto const& s : document.at("alphabet")) {
    if (!s.is_string()) {
      throw error("alphabet entries must be strings");
    }
    alphabet.push_back(s.get<std::string>());
  }
  // A throwaway relation-free presentation gives us symbol lookup while the
  // relation words are decoded.
  Presentation letters_only(alphabet, {});
  std::vector<Relation> relations;
  for (auto const& r : document.at("relations")) {
    Relation rel;
    rel.label = r.at("label").get<std::string>();
    rel.lhs = word_from_json(letters_only, r.at("lhs"), "lhs of relation " + rel.label);
    rel.rhs = word_from_json(letters_only, r.at("rhs"), "rhs of relation " + rel.label);
    relations.push_back(std::move(rel));
  }
  return Presentation(std::move(alphabet), std::move(relations));
}

Presentation parse_presentation_text(std::string const& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw error(std::string("invalid JSON: ") + e.what());
  }
  return parse_presentation(doc);
}

Presentation load_presentation_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw error("cannot open presentation file: " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation_text(buf.str());
}

nlohmann::json serialize_presentation(Presentation const& p) {
  nlohmann::json doc;
  doc["alphabet"] = p.alphabet();
  doc["relations"] = nlohmann::json::array();
  for (auto const& r : p.relations()) {
    nlohmann::json jr;
    jr["label"] = r.label;
    jr["lhs"] = word_symbols(p, r.lhs);
    jr["rhs"] = word_symbols(p, r.rhs);
    doc["relations"].push_back(std::move(jr));
  }
  return doc;
}

Presentation yoshinaga_presentation(int n, std::vector<std::vector<int>> const& permutations,
                                    std::vector<std::string> const& labels,
                                    std::vector<std::string> const& symbols) {
  if (n < 1) {
    throw error("yoshinaga_presentation: n must be >= 1");
  }
  if (!labels.empty() && labels.size() != permutations.size()) {
    throw error("yoshinaga_presentation: label count does not match permutation count");
  }
  std::vector<std::string> alphabet;
  if (symbols.empty()) {
    for (int i = 1; i <= n; ++i) {
      alphabet.push_back("g" + std::to_string(i));
    }
  } else {
    if (static_cast<int>(symbols.size()) != n) {
      throw error("yoshinaga_presentation: symbol count does not match n");
    }
    alphabet = symbols;
  }

  Word lhs(n);
  std::iota(lhs.begin(), lhs.end(), 0);

  std::vector<Relation> relations;
  for (size_t k = 0; k < permutations.size(); ++k) {
    auto const& perm = permutations[k];
    if (static_cast<int>(perm.size()) != n) {
      throw error("yoshinaga_presentation: permutation " + std::to_string(k + 1) +
                  " has wrong length");
    }
    std::vector<bool> seen(n, false);
    Word rhs;
    for (int v : perm) {
      if (v < 1 || v > n || seen[v - 1]) {
        throw error("yoshinaga_presentation: entry list " + std::to_string(k + 1) +
                    " is not a permutation of 1.." + std::to_string(n));
      }
      seen[v - 1] = true;
      rhs.push_back(v - 1);
    }
    if (rhs == lhs) {
      throw error("yoshinaga_presentation: identity permutation at position " +
                  std::to_string(k + 1));
    }
    Relation r;
    r.label = labels.empty() ? "R" + std::to_string(k + 1) : labels[k];
    r.lhs = lhs;
    r.rhs = std::move(rhs);
    relations.push_back(std::move(r));
  }
  return Presentation(std::move(alphabet), std::move(relations));
}

Word parse_word(Presentation const& p, std::string const& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  std::vector<std::string> tokens;
  while (in >> tok) {
    tokens.push_back(tok);
  }
  bool single_char_alphabet = true;
  for (auto const& s : p.alphabet()) {
    if (s.size() != 1) {
      single_char_alphabet = false;
      break;
    }
  }
  for (auto const& t : tokens) {
    letter_t i = p.letter_index(t);
    if (i >= 0) {
      w.push_back(i);
      continue;
    }
    // Compact form: split the token into single characters.
    if (!single_char_alphabet) {
      throw error("unknown symbol \"" + t + "\" in word");
    }
    for (char ch : t) {
      letter_t j = p.letter_index(std::string(1, ch));
      if (j < 0) {
        throw error("unknown symbol \"" + std::string(1, ch) + "\" in word");
      }
      w.push_back(j);
    }
  }
  return w;
}

std::string format_word(Presentation const& p, Word const& w) {
  bool compact = true;
  for (auto const& s : p.alphabet()) {
    if (s.size() != 1) {
      compact = false;
      break;
    }
  }
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) {
      out += ' ';
    }
    out += p.symbol(w[i]);
  }
  return out;
}

std::vector<std::string> word_symbols(Presentation const& p, Word const& w) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (letter_t x : w) {
    out.push_back(p.symbol(x));
  }
  return out;
}

Word word_from_symbols(Presentation const& p, std::vector<std::string> const& symbols) {
  Word w;
  w.reserve(symbols.size());
  for (auto const& s : symbols) {
    letter_t i = p.letter_index(s);
    if (i < 0) {
      throw error("unknown symbol \"" + s + "\" in word");
    }
    w.push_back(i);
  }
  return w;
}

Word concat(Word const& a, Word const& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word concat(Word const& a, Word const& b, Word const& c) {
  Word out;
  out.reserve(a.size() + b.size() + c.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

}  // namespace pi2
