#include "pi2/example1.hpp"

#include <algorithm>

namespace pi2 {

namespace {

constexpr letter_t kA = 0;
constexpr letter_t kB = 1;

struct Builder {
  Presentation const& p;
  Word word;
  std::vector<ElementaryStep> steps;

  void apply(ElementaryStep const& s) {
    word = apply_step(p, word, s);
    steps.push_back(s);
  }

  // Swap ab -> ba at offset i: insert the relator after the pair, then
  // delete it starting at the pair.
  void swap_ab(int32_t i) {
    apply({i + 2, 0, false});
    apply({i, 0, true});
  }

  // Swap ba -> ab at offset i: insert the relator at the pair, then delete
  // it two positions later.
  void swap_ba(int32_t i) {
    apply({i, 0, false});
    apply({i + 2, 0, true});
  }
};

}  // namespace

Presentation example1_presentation(int m) {
  if (m < 1) {
    throw error("example1 requires m >= 1");
  }
  Word relator;
  for (int i = 0; i < m; ++i) {
    relator.push_back(kA);
    relator.push_back(kB);
  }
  relator.push_back(kA);
  return Presentation({"a", "b"}, {Relation{"R", relator, {}}});
}

int64_t example1_value(int m, Word const& w) {
  int64_t v = 0;
  for (letter_t x : w) {
    v += (x == kA) ? m : -(m + 1);
  }
  return v;
}

Word example1_normal_form(int m, Word const& w) {
  int64_t p = std::count(w.begin(), w.end(), kA);
  int64_t q = std::count(w.begin(), w.end(), kB);
  while (p >= m + 1 && q >= m) {
    p -= m + 1;
    q -= m;
  }
  Word out;
  out.insert(out.end(), p, kA);
  out.insert(out.end(), q, kB);
  return out;
}

Witness example1_normal_form_witness(Presentation const& p, int m, Word const& w) {
  Builder build{p, w, {}};

  // Phase 1: sort all a's to the front, clearing ba patterns left to right.
  while (true) {
    int32_t pos = -1;
    for (size_t i = 0; i + 1 < build.word.size(); ++i) {
      if (build.word[i] == kB && build.word[i + 1] == kA) {
        pos = static_cast<int32_t>(i);
        break;
      }
    }
    if (pos < 0) {
      break;
    }
    build.swap_ba(pos);
  }

  // Phase 2: factor out the relator while the sorted word a^P b^Q allows it.
  while (true) {
    int64_t P = std::count(build.word.begin(), build.word.end(), kA);
    int64_t Q = static_cast<int64_t>(build.word.size()) - P;
    if (P < m + 1 || Q < m) {
      break;
    }
    // Interleave the first m b's to assemble (ab)^m a ending at the a-block:
    // the k-th b (0-based, sitting at position P+k) hops left m-k times.
    int32_t s = static_cast<int32_t>(P) - m - 1;
    for (int k = 0; k < m; ++k) {
      int32_t cur = static_cast<int32_t>(P) + k;
      for (int hop = 0; hop < m - k; ++hop) {
        build.swap_ab(cur - 1);
        --cur;
      }
    }
    build.apply({s, 0, true});
  }

  return Witness{w, build.steps};
}

}  // namespace pi2
