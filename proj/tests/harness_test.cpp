#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unordered_set>

#include "clc/harness.hpp"

using namespace clc;

namespace {
RewriteEngine eng;
SEngine se(eng);
Simulator sim(se);

std::vector<TermPtr> const_alphabet() {
  return {parse_term("C"), parse_term("T"), parse_term("F"), parse_term("K"), parse_term("S")};
}
}  // namespace

TEST_CASE("generator is deterministic per seed") {
  Generator g1({42, 15, 8, 1}), g2({42, 15, 8, 1}), g3({43, 15, 8, 1});
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 50; ++i) {
    TermPtr a = g1.term(15), b = g2.term(15), c = g3.term(15);
    all_equal = all_equal && equal(a, b);
    any_diff = any_diff || !equal(a, c);
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("generated terms respect the size cap") {
  Generator g({7, 25, 8, 1});
  for (int i = 0; i < 200; ++i) CHECK(g.term(25)->size() <= 25);
  for (int i = 0; i < 200; ++i) CHECK(g.lterm(19)->size() <= 19);
}

TEST_CASE("enumeration counts by atom count") {
  auto ts = enumerate_terms(1, const_alphabet());
  CHECK(ts.size() == 5);
  ts = enumerate_terms(2, const_alphabet());
  CHECK(ts.size() == 30);  // 5 atoms + 25 two-atom applications
  ts = enumerate_terms(3, const_alphabet());
  // 3 atoms: a (b c) and (a b) c, 125 each
  CHECK(ts.size() == 280);
  // duplicate-free
  std::unordered_set<TermPtr, TermHash, TermEq> seen(ts.begin(), ts.end());
  CHECK(seen.size() == ts.size());
}

TEST_CASE("labelled enumeration builds tuples") {
  std::vector<LTermPtr> alphabet = {parse_lterm("T"), parse_lterm("F1")};
  auto ts = enumerate_lterms(2, alphabet, true);
  bool tup = false, app = false;
  for (const LTermPtr& t : ts) {
    tup = tup || t->is_tuple();
    app = app || t->is_app();
  }
  CHECK(tup);
  CHECK(app);
  auto no_tup = enumerate_lterms(2, alphabet, false);
  for (const LTermPtr& t : no_tup) CHECK_FALSE(t->is_tuple());
}

TEST_CASE("convertible_to_F replays back to F") {
  Generator g({5, 25, 8, 1});
  for (int i = 0; i < 30; ++i) {
    ConversionSequence conv = g.convertible_to_F(eng);
    TermPtr end;
    REQUIRE(eng.replay(conv, &end));
    CHECK(format_term(end) == "F");
  }
}

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  CHECK(names.size() == 8);
  CHECK_THROWS_AS(run_suite("no-such-suite", sim, {}), std::invalid_argument);
}

TEST_CASE("every suite passes a small configuration") {
  for (const std::string& name : suite_names()) {
    SuiteConfig cfg;
    cfg.gen.seed = 11;
    cfg.gen.max_size = 13;
    cfg.gen.max_expansions = 4;
    cfg.cases = 25;
    cfg.size_bound = 3;
    SuiteReport r = run_suite(name, sim, cfg);
    CHECK_MESSAGE(r.ok(), name, ": ", r.failures.empty() ? "" : r.failures[0]);
    CHECK(r.passed > 0);
  }
}

TEST_CASE("suite reports are reproducible") {
  SuiteConfig cfg;
  cfg.gen.seed = 3;
  cfg.cases = 40;
  cfg.size_bound = 3;
  SuiteReport a = run_suite("postpone", sim, cfg);
  SuiteReport b = run_suite("postpone", sim, cfg);
  CHECK(a.passed == b.passed);
  CHECK(a.failed == b.failed);
  CHECK(a.unknown == b.unknown);
  CHECK(a.measure == b.measure);
}

TEST_CASE("target measure stops the sn suite early") {
  SuiteConfig cfg;
  cfg.gen.seed = 9;
  cfg.cases = 1000000;
  cfg.target_measure = 50;
  SuiteReport r = run_suite("sn", sim, cfg);
  CHECK(r.ok());
  CHECK(r.measure >= 50);
}
