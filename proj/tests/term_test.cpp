#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clc/term.hpp"

using namespace clc;

TEST_CASE("parsing is left-associative") {
  TermPtr t = parse_term("K x y");
  REQUIRE(t->is_app());
  CHECK(equal(t, Term::app(Term::app(Term::constant(Sym::K), Term::variable("x")),
                           Term::variable("y"))));

  TermPtr s = parse_term("S x y z");
  CHECK(equal(s, Term::app(Term::constant(Sym::S), Term::variable("x"), Term::variable("y"),
                           Term::variable("z"))));

  TermPtr c = parse_term("C (K F) T");
  CHECK(equal(c, Term::app(Term::app(Term::constant(Sym::C),
                                     Term::app(Term::constant(Sym::K), Term::constant(Sym::F))),
                           Term::constant(Sym::T))));
}

TEST_CASE("formatting uses minimal parentheses") {
  CHECK(format_term(parse_term("K x y")) == "K x y");
  CHECK(format_term(Term::app(Term::constant(Sym::K),
                              Term::app(Term::variable("x"), Term::variable("y")))) == "K (x y)");
  CHECK(format_term(Term::constant(Sym::F)) == "F");
}

TEST_CASE("parse/format round trip") {
  for (const char* text : {"K x y", "S x y z", "C (K F) T", "x", "S", "a (b c) (d e f)",
                           "C z (C z x x) (K y y)"}) {
    TermPtr t = parse_term(text);
    CHECK(equal(parse_term(format_term(t)), t));
  }
}

TEST_CASE("parse errors carry an offset") {
  CHECK_THROWS_AS(parse_term(""), ParseError);
  CHECK_THROWS_AS(parse_term("K ("), ParseError);
  CHECK_THROWS_AS(parse_term("K )"), ParseError);
  CHECK_THROWS_AS(parse_term("Q"), ParseError);
}

TEST_CASE("non-linear matching") {
  auto sigma = match_pattern(parse_term("C z x x"), parse_term("C T (K a b) (K a b)"));
  REQUIRE(sigma.has_value());
  CHECK(equal(sigma->bindings.at("z"), parse_term("T")));
  CHECK(equal(sigma->bindings.at("x"), parse_term("K a b")));

  CHECK_FALSE(match_pattern(parse_term("C z x x"), parse_term("C T a b")).has_value());

  auto km = match_pattern(parse_term("K x y"), parse_term("K F T"));
  REQUIRE(km.has_value());
  CHECK(equal(km->bindings.at("x"), parse_term("F")));
  CHECK(equal(km->bindings.at("y"), parse_term("T")));
}

TEST_CASE("subterm, replace, substitution") {
  CHECK(equal(subterm_at(parse_term("K x y"), {0, 1}), parse_term("x")));
  CHECK(equal(replace_at(parse_term("K x y"), {1}, parse_term("F")), parse_term("K x F")));
  Substitution sigma;
  sigma.bindings["x"] = parse_term("F");
  CHECK(equal(apply_subst(sigma, parse_term("K x x")), parse_term("K F F")));

  CHECK_THROWS_AS(subterm_at(parse_term("x"), {0}), PositionError);
  CHECK_THROWS_AS(replace_at(parse_term("K x y"), {1, 1, 1}, parse_term("F")), PositionError);
}

TEST_CASE("replace at own subterm is identity") {
  TermPtr t = parse_term("C z (C z x x) (K y y)");
  for (const Position& p : {Position{}, Position{0}, Position{1}, Position{0, 1}, Position{1, 1}})
    CHECK(equal(replace_at(t, p, subterm_at(t, p)), t));
}

TEST_CASE("match agrees with substitution") {
  TermPtr pat = parse_term("C z x x");
  Substitution sigma;
  sigma.bindings["z"] = parse_term("K a b");
  sigma.bindings["x"] = parse_term("S T");
  auto back = match_pattern(pat, apply_subst(sigma, pat));
  REQUIRE(back.has_value());
  CHECK(equal(back->bindings.at("z"), sigma.bindings.at("z")));
  CHECK(equal(back->bindings.at("x"), sigma.bindings.at("x")));
}

TEST_CASE("size counts nodes") {
  CHECK(parse_term("F")->size() == 1);
  CHECK(parse_term("K x")->size() == 3);
  CHECK(parse_term("K x y")->size() == 5);
}

TEST_CASE("position helpers") {
  CHECK(position_le({}, {0, 1}));
  CHECK(position_le({0}, {0, 1}));
  CHECK_FALSE(position_le({1}, {0, 1}));
  CHECK(positions_disjoint({0}, {1}));
  CHECK_FALSE(positions_disjoint({0}, {0, 1}));
  CHECK(position_cat({0}, {1, 0}) == Position{0, 1, 0});
}
