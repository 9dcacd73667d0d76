#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clc/labelled.hpp"

using namespace clc;

TEST_CASE("labelled parse/format round trip") {
  for (const char* text :
       {"C1 T1 a b", "C2 z x y", "K1 x y", "S^{1,1} K1 K <a, b>", "S^{2,1} a b <x, y, z>",
        "<a, b>", "<a, <b, c>>", "F1", "K (S^{1,1,2} a b <c, d, e, f>) T1"}) {
    LTermPtr t = parse_lterm(text);
    CHECK(equal(parse_lterm(format_lterm(t)), t));
  }
}

TEST_CASE("label admissibility") {
  CHECK_THROWS_AS(LTerm::labelled(Sym::C, {3}), ShapeMismatch);
  CHECK_THROWS_AS(LTerm::labelled(Sym::T, {2}), ShapeMismatch);
  CHECK_THROWS_AS(LTerm::labelled(Sym::S, {1}), ShapeMismatch);
  CHECK_THROWS_AS(LTerm::labelled(Sym::S, {1, 0}), ShapeMismatch);
  CHECK_NOTHROW(LTerm::labelled(Sym::S, {1, 1}));
  CHECK_NOTHROW(LTerm::labelled(Sym::C, {2}));
}

TEST_CASE("one-element tuples collapse") {
  LTermPtr a = LTerm::variable("a");
  CHECK(equal(LTerm::tuple({a}), a));
  CHECK_THROWS_AS(LTerm::tuple({}), ShapeMismatch);
  CHECK(LTerm::tuple({a, a})->is_tuple());
}

TEST_CASE("classify") {
  CHECK(classify(parse_lterm("K x y")) == LKind::ITerm);
  CHECK(classify(parse_lterm("C1 T1 a b")) == LKind::STerm);
  CHECK(classify(parse_lterm("<a, b>")) == LKind::Tuple);
  CHECK(classify(parse_lterm("x <a, b>")) == LKind::Other);
  CHECK(classify(parse_lterm("K (K1 a b)")) == LKind::Other);
}

TEST_CASE("embedding and i-terms") {
  TermPtr q = parse_term("S K K (C T a b)");
  LTermPtr t = embed(q);
  CHECK(is_iterm(t));
  auto back = as_iterm(t);
  REQUIRE(back.has_value());
  CHECK(equal(*back, q));
  CHECK_FALSE(is_iterm(parse_lterm("K1 a b")));
  CHECK_FALSE(is_iterm(parse_lterm("K <a, b>")));
  CHECK_FALSE(as_iterm(parse_lterm("K1 a b")).has_value());
}

TEST_CASE("leftmost erasure") {
  CHECK(format_term(leftmost_erase(parse_lterm("S^{1,1} K1 K <a, b>"))) == "S K K a");
  CHECK(format_term(leftmost_erase(parse_lterm("C1 T1 F1 q"))) == "C T F q");
  CHECK(format_term(leftmost_erase(parse_lterm("K1 <x, y> z"))) == "K x z");
}

TEST_CASE("all erasures") {
  auto es = erasures(parse_lterm("S^{1,1} K1 K <a, b>"));
  REQUIRE(es.size() == 2);
  CHECK(format_term(es[0]) == "S K K a");
  CHECK(format_term(es[1]) == "S K K b");

  es = erasures(parse_lterm("<a, b> <c, d>"));
  CHECK(es.size() == 4);

  es = erasures(parse_lterm("K1 x y"));
  REQUIRE(es.size() == 1);
  CHECK(format_term(es[0]) == "K x y");
}

TEST_CASE("refinement") {
  CHECK(refines(parse_lterm("S^{1,1} K1 K <a, a>"), parse_term("S K K a")));
  CHECK_FALSE(refines(parse_lterm("<a, b>"), parse_term("a")));
  CHECK_FALSE(refines(parse_lterm("S^{1,1} K1 K <a, b>"), parse_term("S K K a")));
  CHECK(refines(embed(parse_term("K x y")), parse_term("K x y")));
  // every erasure of <a, a> is a, but it is a tuple, still a refinement
  CHECK(refines(parse_lterm("<a, a>"), parse_term("a")));
}

TEST_CASE("labelled positions and navigation") {
  LTermPtr t = parse_lterm("K1 <x, y> z");
  CHECK(equal(lsubterm_at(t, {0, 1, 1}), LTerm::variable("y")));
  CHECK(equal(lreplace_at(t, {0, 1, 0}, LTerm::constant(Sym::F)), parse_lterm("K1 <F, y> z")));
  CHECK_THROWS_AS(lsubterm_at(t, {0, 1, 2}), PositionError);

  auto ps = lterm_positions(parse_lterm("<a, b>"));
  CHECK(ps.size() == 3);
}

TEST_CASE("label count") {
  CHECK(parse_lterm("K x y")->label_count() == 0);
  CHECK(parse_lterm("C1 T1 a b")->label_count() == 2);
  CHECK(parse_lterm("S^{1,1} K1 K <a, b>")->label_count() == 2);
  CHECK(parse_lterm("K1 (K1 a b) c")->label_count() == 2);
}

TEST_CASE("labelled parse errors") {
  CHECK_THROWS_AS(parse_lterm("<a>"), ParseError);
  CHECK_THROWS_AS(parse_lterm("S^{1}"), ShapeMismatch);
  CHECK_THROWS_AS(parse_lterm("S^{}"), ParseError);
  CHECK_THROWS_AS(parse_lterm("<a, b"), ParseError);
  CHECK_THROWS_AS(parse_lterm("C3"), ShapeMismatch);
}
