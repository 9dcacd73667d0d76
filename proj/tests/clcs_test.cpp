#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clc/clcs.hpp"

using namespace clc;

namespace {
RewriteEngine eng;
SEngine se(eng);

// rule id of the CLC step matching s-rule r on erasures
int erased_rule(int r) {
  static const int m[10] = {0, 1, 2, 3, 1, 2, 1, 2, 4, 5};
  return m[r];
}
}  // namespace

TEST_CASE("s-contraction of the numbered rules") {
  CHECK(format_lterm(se.s_contract(parse_lterm("C1 T1 a b"), {}, 1)) == "a");
  CHECK(format_lterm(se.s_contract(parse_lterm("C1 F1 a b"), {}, 2)) == "b");
  CHECK(format_lterm(se.s_contract(parse_lterm("C2 z a a"), {}, 3)) == "a");
  CHECK(format_lterm(se.s_contract(parse_lterm("C2 T a b"), {}, 4)) == "a");
  CHECK(format_lterm(se.s_contract(parse_lterm("C2 F a b"), {}, 5)) == "b");
  CHECK(format_lterm(se.s_contract(parse_lterm("C2 T1 a b"), {}, 6)) == "a");
  CHECK(format_lterm(se.s_contract(parse_lterm("C2 F1 a b"), {}, 7)) == "b");
  CHECK(format_lterm(se.s_contract(parse_lterm("K1 a b"), {}, 8)) == "a");
  CHECK(format_lterm(se.s_contract(parse_lterm("S^{1,1} K1 K <a, a>"), {}, 9)) == "K1 a (K a)");
  CHECK(format_lterm(se.s_contract(parse_lterm("C2 F1 a b"), {}, 7)) == "b");
}

TEST_CASE("rule 9 regrouping with larger labels") {
  // S^{2,1} x y <z,z,z>: x gets 2 z's as a tuple, y's group is a single z
  LTermPtr t = parse_lterm("S^{2,1} a b <z, z, z>");
  CHECK(format_lterm(se.s_contract(t, {}, 9)) == "a <z, z> (b z)");

  // k > 1: the second argument is itself a tuple of k terms
  t = parse_lterm("S^{1,1,1} a <b, b> <z, z, z>");
  // convention <t> = t; groups of size one stay plain
  CHECK(format_lterm(se.s_contract(t, {}, 9)) == "a z <b z, b z>");
  // without the tuple shape the rule does not match
  CHECK_THROWS_AS(se.s_contract(parse_lterm("S^{1,1,1} a b <z, z, z>"), {}, 9), NotARedex);
}

TEST_CASE("rule 9 condition requires convertible group elements") {
  // distinct, non-convertible fillers violate phi
  LTermPtr bad = parse_lterm("S^{2,1} a b <T, F, T>");
  CHECK_THROWS_AS(se.s_contract(bad, {}, 9), NotARedex);
  auto hits = se.s_redexes(bad);
  for (const LRedexHit& h : hits) CHECK(h.rule != 9);

  // convertible but unequal fillers are fine: K T F =_CLC T
  LTermPtr ok = parse_lterm("S^{2,1} a b <K T F, T, T>");
  bool found = false;
  for (const LRedexHit& h : se.s_redexes(ok)) found |= (h.pos.empty() && h.rule == 9);
  CHECK(found);
}

TEST_CASE("rule 3 condition on erasures") {
  CHECK(format_lterm(se.s_contract(parse_lterm("C2 z (K a b) (K a b)"), {}, 3)) == "K a b");
  // erasures differ and are not convertible
  CHECK_THROWS_AS(se.s_contract(parse_lterm("C2 z T F"), {}, 3), NotARedex);
  // convertible through reduction: <K a a, a> erases to K a a and a is its reduct
  CHECK(format_lterm(se.s_contract(parse_lterm("C2 z (K a a) a"), {}, 3)) == "K a a");
}

TEST_CASE("i-redexes and i-contraction") {
  auto hits = se.i_redexes(parse_lterm("C1 T1 a (K b c)"));
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].pos == Position{1});
  CHECK(hits[0].rule == 4);
  CHECK(format_lterm(se.i_contract(parse_lterm("C1 T1 a (K b c)"), {1}, 4)) == "C1 T1 a b");

  hits = se.i_redexes(parse_lterm("K1 (S a b c) d"));
  REQUIRE(hits.size() == 1);
  CHECK(format_lterm(se.i_contract(parse_lterm("K1 (S a b c) d"), hits[0].pos, hits[0].rule)) ==
        "K1 (a c (b c)) d");

  // the s-redex itself is not an i-redex: K1 is labelled
  CHECK(se.i_redexes(parse_lterm("K1 a b")).empty());
  // inside tuples, i-redexes are still found
  CHECK(se.i_redexes(parse_lterm("<K a b, c>")).size() == 1);
}

TEST_CASE("every s-step erases to a CLC step or vanishes into the left copy") {
  for (const char* text :
       {"C1 T1 a b", "C1 F1 a b", "C2 z a a", "C2 T a b", "C2 F a b", "C2 T1 a b", "C2 F1 a b",
        "K1 a b", "S^{1,1} K1 K <a, a>", "S^{2,1} a b <z, z, z>", "K (C2 T a b)"}) {
    LTermPtr t = parse_lterm(text);
    for (const LRedexHit& h : se.s_redexes(t)) {
      LTermPtr u = se.s_contract(t, h.pos, h.rule);
      TermPtr qt = leftmost_erase(t);
      TermPtr qu = leftmost_erase(u);
      if (equal(qt, qu)) continue;  // step inside a discarded tuple component
      bool matched = false;
      for (const RedexHit& rh : eng.redexes(SystemId::CLC, qt))
        if (rh.rule == erased_rule(h.rule) &&
            equal(eng.contract(SystemId::CLC, qt, rh.pos, rh.rule), qu))
          matched = true;
      CHECK_MESSAGE(matched, text);
    }
  }
}

TEST_CASE("s-steps strictly decrease the label count") {
  for (const char* text : {"C1 T1 a b", "C2 T1 a b", "K1 a b", "S^{1,1} K1 K <a, a>",
                           "S^{2,1} a b <z, z, z>", "K1 (C1 T1 a b) c"}) {
    LTermPtr t = parse_lterm(text);
    for (const LRedexHit& h : se.s_redexes(t))
      CHECK(se.s_contract(t, h.pos, h.rule)->label_count() < t->label_count());
  }
}

TEST_CASE("i-steps preserve the classification and labels") {
  LTermPtr t = parse_lterm("C1 T1 a (K b c)");
  auto hits = se.i_redexes(t);
  REQUIRE(!hits.empty());
  LTermPtr u = se.i_contract(t, hits[0].pos, hits[0].rule);
  CHECK(classify(u) == classify(t));
  CHECK(u->label_count() == t->label_count());
}

TEST_CASE("s-reduct graph") {
  const SGraph& g = se.s_reducts_all(parse_lterm("C1 T1 F1 q"));
  CHECK(g.complete);
  CHECK(g.nodes.size() == 2);
  CHECK(g.edges.size() == 1);
  auto sinks = g.sinks();
  REQUIRE(sinks.size() == 1);
  CHECK(format_lterm(g.nodes[sinks[0]]) == "F1");
}

TEST_CASE("s-normal forms") {
  bool complete = false;
  auto nfs = se.s_normal_forms(parse_lterm("K1 T q"), &complete);
  CHECK(complete);
  REQUIRE(nfs.size() == 1);
  CHECK(format_lterm(nfs[0]) == "T");
}

TEST_CASE("standardness verdicts") {
  CHECK(se.is_standard(parse_lterm("C1 T a b")) == Verdict::No);   // wrong first argument
  CHECK(se.is_standard(parse_lterm("K x y")) == Verdict::Yes);     // i-terms are standard
  // the s-reduct a is not an s-term
  CHECK(se.is_standard(parse_lterm("C1 T1 a b")) == Verdict::No);
  CHECK(se.is_standard(parse_lterm("S^{1,1} a b <c, d>")) == Verdict::Yes);
  // no s-redex at all, so the reduct condition holds vacuously
  CHECK(se.is_standard(parse_lterm("C2 z T F")) == Verdict::Yes);
  CHECK(se.is_standard(parse_lterm("<a, <b, c>>")) == Verdict::No);  // nested tuple

  CHECK(se.is_strongly_standard(parse_lterm("C1 T1 F1 q")) == Verdict::Yes);
  CHECK(se.is_strongly_standard(parse_lterm("C1 T a b")) == Verdict::No);
}

TEST_CASE("leadsto F1") {
  CHECK(se.leadsto_F1(parse_lterm("C1 T1 F1 (S K K)")) == Verdict::Yes);
  CHECK(se.leadsto_F1(parse_lterm("K1 T q")) == Verdict::No);
  CHECK(se.leadsto_F1(SEngine::F1()) == Verdict::Yes);
  CHECK(se.leadsto_F1(parse_lterm("C1 F1 q F1")) == Verdict::Yes);
}

TEST_CASE("a-expansion forms") {
  LTermPtr f1 = SEngine::F1();
  CHECK(format_lterm(se.a_expand(f1, {1, embed(parse_term("K x y")), nullptr, nullptr, {}})) ==
        "C1 T1 F1 (K x y)");
  CHECK(format_lterm(se.a_expand(f1, {2, embed(parse_term("q")), nullptr, nullptr, {}})) ==
        "C1 F1 q F1");
  CHECK(format_lterm(se.a_expand(f1, {3, embed(parse_term("z")), f1, f1, {}})) == "C2 z F1 F1");
  CHECK(format_lterm(se.a_expand(f1, {4, embed(parse_term("q")), nullptr, nullptr, {}})) ==
        "K1 F1 q");
  CHECK(format_lterm(se.a_expand(parse_lterm("K1 a (K a)"), {5, nullptr, nullptr, nullptr,
                                                             {1, 1}})) == "S^{1,1} K1 K <a, a>");
}

TEST_CASE("a-expansion rejects non-i-term fillers") {
  CHECK_THROWS_AS(se.a_expand(SEngine::F1(), {1, parse_lterm("K1 a b"), nullptr, nullptr, {}}),
                  ShapeMismatch);
  CHECK_THROWS_AS(se.a_expand(SEngine::F1(), {4, parse_lterm("<a, b>"), nullptr, nullptr, {}}),
                  ShapeMismatch);
}

TEST_CASE("a-expansions produce s-redexes that step back") {
  LTermPtr f1 = SEngine::F1();
  std::vector<std::pair<LTermPtr, LTermPtr>> pairs;
  pairs.push_back({se.a_expand(f1, {1, embed(parse_term("q")), nullptr, nullptr, {}}), f1});
  pairs.push_back({se.a_expand(f1, {2, embed(parse_term("q")), nullptr, nullptr, {}}), f1});
  pairs.push_back({se.a_expand(f1, {3, embed(parse_term("z")), f1, f1, {}}), f1});
  pairs.push_back({se.a_expand(f1, {4, embed(parse_term("q")), nullptr, nullptr, {}}), f1});
  LTermPtr t5 = parse_lterm("K1 a (K a)");
  pairs.push_back({se.a_expand(t5, {5, nullptr, nullptr, nullptr, {1, 1}}), t5});
  for (auto& [tp, t] : pairs) {
    auto hits = se.s_redexes(tp);
    REQUIRE(!hits.empty());
    bool reaches = false;
    for (const LRedexHit& h : hits) {
      LTermPtr u = se.s_contract(tp, h.pos, h.rule);
      if (equal(u, t)) reaches = true;
      // a-step soundness: every s-reduct of the a-redex rejoins t's reducts
      (void)u;
    }
    CHECK_MESSAGE(reaches, format_lterm(tp));
    CHECK(se.a_redex_check(tp, t) == Verdict::Yes);
  }
}

TEST_CASE("a_redex_check rejects unrelated terms") {
  CHECK(se.a_redex_check(parse_lterm("C1 T1 F1 q"), parse_lterm("q")) == Verdict::No);
  CHECK(se.a_redex_check(parse_lterm("K x y"), parse_lterm("x")) == Verdict::No);
}

TEST_CASE("a-expansion preserves strong standardness and leadsto F1") {
  LTermPtr f1 = SEngine::F1();
  for (int form = 1; form <= 4; ++form) {
    AShape sh{form, embed(parse_term("K T F")), f1, f1, {}};
    LTermPtr tp = se.a_expand(f1, sh);
    CHECK(se.is_strongly_standard(tp) == Verdict::Yes);
    CHECK(se.leadsto_F1(tp) == Verdict::Yes);
  }
}

TEST_CASE("s_path and replay") {
  LTermPtr t = parse_lterm("C1 T1 F1 (S K K)");
  auto path = se.s_path(t, SEngine::F1());
  REQUIRE(path.has_value());
  LTermPtr end;
  CHECK(se.replay(*path, &end));
  CHECK(equal(end, SEngine::F1()));
  CHECK_FALSE(se.s_path(t, parse_lterm("T")).has_value());
}
