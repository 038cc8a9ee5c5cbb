#include "doctest.h"
#include "pi2/corpus.hpp"
#include "pi2/presentation.hpp"

using namespace pi2;

namespace {

Presentation threelines() { return load_presentation_any("threelines"); }

}  // namespace

TEST_CASE("parse threelines document") {
  Presentation p = threelines();
  CHECK(p.rank() == 3);
  CHECK(p.relations().size() == 3);
  CHECK(p.relation(0).label == "A");
  CHECK(p.relation(0).lhs == Word{0, 1, 2});
  CHECK(p.relation(0).rhs == Word{0, 2, 1});
  CHECK(p.relation(1).rhs == Word{2, 0, 1});
  CHECK(p.relation(2).rhs == Word{1, 2, 0});
}

TEST_CASE("free presentation parses") {
  Presentation p = parse_presentation_text(R"({"alphabet": ["a", "b"], "relations": []})");
  CHECK(p.rank() == 2);
  CHECK(p.relations().empty());
}

TEST_CASE("degenerate documents are rejected") {
  CHECK_THROWS_AS(
      parse_presentation_text(R"({"alphabet": ["a", "a"], "relations": []})"), error);
  CHECK_THROWS_AS(parse_presentation_text(R"({"alphabet": ["a"],
      "relations": [{"label": "R", "lhs": ["a"], "rhs": ["b"]}]})"),
                  error);
  CHECK_THROWS_AS(parse_presentation_text(R"({"alphabet": ["a", "b"],
      "relations": [{"label": "R", "lhs": ["a"], "rhs": ["a"]}]})"),
                  error);
  CHECK_THROWS_AS(parse_presentation_text(R"({"alphabet": ["a", "b"],
      "relations": [{"label": "R", "lhs": ["a"], "rhs": ["b"]},
                    {"label": "R", "lhs": ["b"], "rhs": ["a"]}]})"),
                  error);
  // The fully empty relation generates nothing and is rejected.
  CHECK_THROWS_AS(parse_presentation_text(R"({"alphabet": ["a"],
      "relations": [{"label": "R", "lhs": [], "rhs": []}]})"),
                  error);
}

TEST_CASE("classification flags") {
  PresentationClass three = classify_presentation(threelines());
  CHECK(three.semi_positive);
  CHECK(three.positive);
  CHECK(three.homogeneous);

  Presentation ex1 = load_presentation_any("example1_m1");
  PresentationClass c1 = classify_presentation(ex1);
  CHECK(c1.semi_positive);
  CHECK_FALSE(c1.positive);
  CHECK_FALSE(c1.homogeneous);

  Presentation free = parse_presentation_text(R"({"alphabet": ["a"], "relations": []})");
  PresentationClass cf = classify_presentation(free);
  CHECK(cf.positive);
  CHECK(cf.homogeneous);
}

TEST_CASE("serialize round-trips the canonical document") {
  for (auto const& name : {"threelines", "a3", "bii_I", "commutative3", "example1_m2"}) {
    Presentation p = load_presentation_any(name);
    nlohmann::json doc = serialize_presentation(p);
    Presentation q = parse_presentation(doc);
    CHECK(p == q);
    CHECK(serialize_presentation(q) == doc);
  }
}

TEST_CASE("yoshinaga presentation of three generic lines") {
  Presentation p = yoshinaga_presentation(3, {{1, 3, 2}, {3, 1, 2}, {2, 3, 1}});
  CHECK(p.alphabet() == std::vector<std::string>{"g1", "g2", "g3"});
  Presentation three = threelines();
  REQUIRE(p.relations().size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(p.relation(i).lhs == three.relation(i).lhs);
    CHECK(p.relation(i).rhs == three.relation(i).rhs);
  }
  CHECK(classify_presentation(p).homogeneous);
}

TEST_CASE("yoshinaga presentation of the A3 arrangement matches the corpus") {
  Presentation generated = yoshinaga_presentation(
      5,
      {{1, 4, 2, 3, 5}, {1, 3, 4, 2, 5}, {1, 3, 4, 5, 2}, {3, 4, 5, 1, 2}, {4, 5, 1, 2, 3},
       {4, 1, 2, 3, 5}},
      {"R1", "R2", "R3", "R4", "R5", "R6"}, {"1", "2", "3", "4", "5"});
  Presentation corpus = load_presentation_any("a3");
  CHECK(generated == corpus);
}

TEST_CASE("yoshinaga rejects bad input") {
  CHECK_THROWS_AS(yoshinaga_presentation(3, {{1, 2, 2}}), error);
  CHECK_THROWS_AS(yoshinaga_presentation(3, {{1, 2}}), error);
  CHECK_THROWS_AS(yoshinaga_presentation(3, {{1, 2, 3}}), error);  // identity
  CHECK_THROWS_AS(yoshinaga_presentation(3, {{0, 1, 2}}), error);
}

TEST_CASE("smallest commuting case") {
  Presentation p = yoshinaga_presentation(2, {{2, 1}});
  REQUIRE(p.relations().size() == 1);
  CHECK(p.relation(0).lhs == Word{0, 1});
  CHECK(p.relation(0).rhs == Word{1, 0});
}

TEST_CASE("degree is word length") {
  Presentation p = threelines();
  CHECK(degree(p, parse_word(p, "1 2 3")) == 3);
  CHECK(degree(p, parse_word(p, "")) == 0);
  CHECK(degree(p, parse_word(p, "2 3 1 2 3")) == 5);
}

TEST_CASE("word parsing accepts compact and spaced forms") {
  Presentation p = threelines();
  CHECK(parse_word(p, "123") == Word{0, 1, 2});
  CHECK(parse_word(p, "1 2 3") == Word{0, 1, 2});
  CHECK(parse_word(p, "23 123") == Word{1, 2, 0, 1, 2});
  CHECK(format_word(p, Word{1, 2, 0, 1, 2}) == "23123");
  CHECK_THROWS_AS(parse_word(p, "4"), error);

  Presentation multi = yoshinaga_presentation(2, {{2, 1}});
  CHECK(parse_word(multi, "g1 g2") == Word{0, 1});
  CHECK(format_word(multi, Word{0, 1}) == "g1 g2");
  CHECK_THROWS_AS(parse_word(multi, "g1g2"), error);
}
