#include <doctest.h>

#include <algorithm>
#include <random>

#include "graphmonads/errors.hpp"
#include "graphmonads/label.hpp"

using namespace graphmonads;

namespace {
VertexLabel L(const char* text) { return VertexLabel::parse(text); }
}  // namespace

TEST_CASE("atom validation") {
  CHECK(VertexLabel::atom("a").token() == "a");
  CHECK(VertexLabel::atom("x_12'").str() == "x_12'");
  CHECK_THROWS_AS(VertexLabel::atom(""), InvalidLabel);
  CHECK_THROWS_AS(VertexLabel::atom("a b"), InvalidLabel);
  CHECK_THROWS_AS(VertexLabel::atom("a\tb"), InvalidLabel);
  CHECK_THROWS_AS(VertexLabel::atom("a~0"), InvalidLabel);
  CHECK_THROWS_AS(VertexLabel::atom("{x}"), InvalidLabel);
  CHECK_THROWS_AS(VertexLabel::atom("a,b"), InvalidLabel);
}

TEST_CASE("tagged and set constructors") {
  VertexLabel a = VertexLabel::atom("a");
  VertexLabel b = VertexLabel::atom("b");
  CHECK(VertexLabel::tagged(a, 0).str() == "a~0");
  CHECK(VertexLabel::tagged(VertexLabel::tagged(a, 1), 0).str() == "a~1~0");
  CHECK_THROWS_AS(VertexLabel::tagged(a, 2), InvalidLabel);

  CHECK(VertexLabel::set({a}).str() == "{a}");
  CHECK(VertexLabel::set({b, a}).str() == "{a,b}");   // sorted canonically
  CHECK(VertexLabel::set({a, a}).str() == "{a}");     // set semantics
  CHECK_THROWS_AS(VertexLabel::set({}), InvalidLabel);
  CHECK_THROWS_AS(VertexLabel::set({a, b, VertexLabel::atom("c")}), InvalidLabel);

  CHECK(VertexLabel::pair(a, b).str() == "(a,b)");
  CHECK(VertexLabel::pair(b, a).str() == "(b,a)");  // pairs are ordered
}

TEST_CASE("canonical order: kinds first, then recursion") {
  VertexLabel a = L("a");
  VertexLabel b = L("b");
  CHECK(a < b);
  CHECK(b < VertexLabel::tagged(a, 0));                        // Atom < Tagged
  CHECK(VertexLabel::tagged(b, 1) < VertexLabel::set({a}));    // Tagged < Set
  CHECK(VertexLabel::set({a, b}) < VertexLabel::pair(a, a));   // Set < Pair
  CHECK(VertexLabel::tagged(a, 0) < VertexLabel::tagged(a, 1));
  CHECK(VertexLabel::set({a}) < VertexLabel::set({a, b}));     // prefix before extension
  CHECK(VertexLabel::set({a, b}) < VertexLabel::set({b}));
  CHECK(VertexLabel::pair(a, b) < VertexLabel::pair(b, a));
}

TEST_CASE("equality is structural") {
  CHECK(L("{b,a}") == L("{a,b}"));
  CHECK(L("(a,b)") != L("(b,a)"));
  CHECK(L("a~0~1") == VertexLabel::tagged(VertexLabel::tagged(L("a"), 0), 1));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(VertexLabel::parse(""), InvalidLabel);
  CHECK_THROWS_AS(VertexLabel::parse("a~2"), InvalidLabel);
  CHECK_THROWS_AS(VertexLabel::parse("a~"), InvalidLabel);
  CHECK_THROWS_AS(VertexLabel::parse("(a"), InvalidLabel);
  CHECK_THROWS_AS(VertexLabel::parse("(a,b"), InvalidLabel);
  CHECK_THROWS_AS(VertexLabel::parse("{a,b,c}"), InvalidLabel);
  CHECK_THROWS_AS(VertexLabel::parse("a b"), InvalidLabel);
  CHECK_THROWS_AS(VertexLabel::parse("a)"), InvalidLabel);
  CHECK_THROWS_AS(VertexLabel::parse("{}"), InvalidLabel);
}

namespace {

// random label generator for the round-trip property
VertexLabel random_label(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 3 : 0);
  static const char* atoms[] = {"a", "b", "cd", "x1"};
  switch (pick(rng)) {
    case 1:
      return VertexLabel::tagged(random_label(rng, depth - 1),
                                 std::uniform_int_distribution<int>(0, 1)(rng));
    case 2: {
      VertexLabel first = random_label(rng, depth - 1);
      if (std::uniform_int_distribution<int>(0, 1)(rng)) {
        VertexLabel second = random_label(rng, depth - 1);
        if (second != first) return VertexLabel::set({first, second});
      }
      return VertexLabel::set({first});
    }
    case 3:
      return VertexLabel::pair(random_label(rng, depth - 1), random_label(rng, depth - 1));
    default:
      return VertexLabel::atom(atoms[std::uniform_int_distribution<int>(0, 3)(rng)]);
  }
}

}  // namespace

TEST_CASE("parse inverts str on random labels") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    VertexLabel lab = random_label(rng, 3);
    CHECK(VertexLabel::parse(lab.str()) == lab);
  }
}

TEST_CASE("ordering is a strict total order on a sample") {
  std::mt19937 rng(11);
  std::vector<VertexLabel> sample;
  for (int i = 0; i < 60; ++i) sample.push_back(random_label(rng, 2));
  std::sort(sample.begin(), sample.end());
  for (std::size_t i = 0; i + 1 < sample.size(); ++i) {
    CHECK(!(sample[i + 1] < sample[i]));
    if (sample[i] == sample[i + 1]) {
      CHECK(sample[i].str() == sample[i + 1].str());
    }
  }
}
