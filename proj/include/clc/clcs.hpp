#pragma once

#include "clc/labelled.hpp"
#include "clc/systems.hpp"

namespace clc {

enum class LStepKind : uint8_t { S, I, A };

// One step over labelled terms. S and I steps replay from (pos, rule);
// A steps and backward I steps additionally need the recorded result.
struct LStep {
  LStepKind kind;
  Position pos;        // for A steps: position of the contracted a-redex
  int rule = 0;        // s-rule 1..9 for S, CLC rule id for I, 0 for A
  bool forward = true; // backward I steps are i-expansions
  LTermPtr to;         // term after the step (required for A and backward I)
};

struct LTrace {
  LTermPtr start;
  std::vector<LStep> steps;
};

struct LRedexHit {
  Position pos;
  int rule;
};

struct LCondReport {
  struct Entry {
    Position pos;
    int rule;
  };
  std::vector<Entry> unknown;
  bool any() const { return !unknown.empty(); }
};

struct SGraph {
  std::vector<LTermPtr> nodes;
  struct Edge {
    int from, to;
    Position pos;
    int rule;
  };
  std::vector<Edge> edges;
  bool complete = true;
  std::vector<int> sinks() const;
};

// Descriptor of one of the five a-redex forms of Def. "a-redex"; used by
// a_expand to build the redex above a given contractum.
struct AShape {
  int form;        // 1: C1 T1 t q, 2: C1 F1 q t, 3: C2 q t1 t2, 4: K1 t q, 5: S regrouping
  LTermPtr q;      // i-term filler (forms 1-4: the discarded argument; form 3: first argument)
  LTermPtr t1, t2; // form 3: targets, both s-reachable from the contractum
  std::vector<int> label;  // form 5: the vector n0,...,nk describing the regrouping
};

// Significant (s-), insignificant (i-) and auxiliary (a-) contraction over
// labelled terms. Conditions are decided by the unlabelled engine's eq on
// leftmost erasures; Unknown verdicts are reported, never guessed.
class SEngine {
 public:
  explicit SEngine(RewriteEngine& eng) : eng_(eng) {}

  RewriteEngine& engine() { return eng_; }
  static const LTermPtr& F1();

  static int s_rule_count() { return 9; }

  std::vector<LRedexHit> s_redexes(const LTermPtr& t, LCondReport* report = nullptr);
  LTermPtr s_contract(const LTermPtr& t, const Position& p, int rule);

  // i-redexes: positions whose subterm is an i-term matching a CLC rule at
  // its root (rule-3 condition via eq).
  std::vector<LRedexHit> i_redexes(const LTermPtr& t, LCondReport* report = nullptr);
  LTermPtr i_contract(const LTermPtr& t, const Position& p, int rule);

  // Exhaustive s-reduct graph; finite by strong normalization (the number
  // of labelled constants decreases with every s-step).
  const SGraph& s_reducts_all(const LTermPtr& t);
  std::vector<LTermPtr> s_normal_forms(const LTermPtr& t, bool* complete = nullptr);

  Verdict is_standard(const LTermPtr& t, LCondReport* report = nullptr);
  Verdict is_strongly_standard(const LTermPtr& t, LCondReport* report = nullptr);
  // t is strongly standard and F1 is its only s-normal form
  Verdict leadsto_F1(const LTermPtr& t, LCondReport* report = nullptr);

  // Builds the a-redex t' with t' ->a t for the given shape; verifies all
  // side conditions (i-term-ness, reachability, the erasure conditions).
  LTermPtr a_expand(const LTermPtr& t, const AShape& shape);
  // Whole-term relation t' ->a t (at some position).
  Verdict a_redex_check(const LTermPtr& tp, const LTermPtr& t);

  bool replay(const LTrace& tr, LTermPtr* end = nullptr);

  // Path t ->*s goal inside the reduct graph, or nullopt (graph may be
  // incomplete).
  std::optional<LTrace> s_path(const LTermPtr& t, const LTermPtr& goal);

 private:
  Verdict s_cond(const LTermPtr& t, int rule);  // condition of rule at root of t
  Verdict root_a_step(const LTermPtr& rp, const LTermPtr& r);  // rp ->a r at the root

  RewriteEngine& eng_;
  std::unordered_map<LTermPtr, SGraph, LTermHash, LTermEq> graph_memo_;
  std::unordered_map<LTermPtr, Verdict, LTermHash, LTermEq> std_memo_;
};

}  // namespace clc
