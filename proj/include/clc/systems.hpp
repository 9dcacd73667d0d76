#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "clc/term.hpp"

namespace clc {

// The four unlabelled systems. CLC0 is unconditional; CLC's and CLCPLUS's
// conditional rules refer to their own equality (stratified by levels); R's
// conditions refer to CLC equality directly.
enum class SystemId : uint8_t { CLC0, CLC, CLCPLUS, R };

const char* system_name(SystemId sys);
std::optional<SystemId> system_from_name(const std::string& name);

struct Fuel {
  long max_steps = 10000;   // search-node budget per bounded search
  int max_term_size = 60;   // size cap on intermediate terms
  int max_level = 8;        // condition-recursion depth
};

struct Step {
  SystemId sys;
  int rule;  // 1-based rule id within the system's table
  Position pos;
  int level = 0;  // 0 for unconditional steps, 1 + witness level otherwise
};

struct Trace {
  TermPtr start;
  std::vector<Step> steps;
};

struct ConvStep {
  Step step;
  bool forward = true;  // forward: contraction; backward: expansion
  // Term after this step. For backward steps the step replays from `to`
  // (contracting `to` yields the previous term); without it expansions
  // would not be replayable.
  TermPtr to;
};

struct ConversionSequence {
  TermPtr start;
  std::vector<ConvStep> steps;
};

enum class Verdict : uint8_t { Yes, No, Unknown };

struct JoinWitness {
  TermPtr common;
  Trace left, right;
};

struct EqResult {
  Verdict verdict = Verdict::Unknown;
  int level = 0;  // certified level of a Yes witness
  std::optional<JoinWitness> join;
  std::optional<ConversionSequence> conversion;
  // No verdicts compare fully explored CLC reduction graphs and are sound
  // only given confluence of CLC.
  bool theorem_dependent = false;
};

struct RedexHit {
  Position pos;
  int rule;
  int level;
};

// Positions skipped during a redex scan because a condition came back Unknown.
struct CondReport {
  struct Entry {
    Position pos;
    int rule;
  };
  std::vector<Entry> unknown;
  bool any() const { return !unknown.empty(); }
};

struct NormalizeResult {
  TermPtr term;
  Trace trace;
  bool complete = false;
};

struct ReductionGraph {
  std::vector<TermPtr> nodes;
  struct Edge {
    int from, to;
    Step step;
  };
  std::vector<Edge> edges;
  bool complete = true;  // false if cut off by fuel or an Unknown condition
  std::vector<int> sinks() const;
};

// Rewriting, equality and joinability oracles for the unlabelled systems.
// Not thread-safe (internal memo tables); use one engine per worker.
class RewriteEngine {
 public:
  explicit RewriteEngine(Fuel fuel = {}) : fuel_(fuel) {}

  const Fuel& fuel() const { return fuel_; }

  std::vector<RedexHit> redexes(SystemId sys, const TermPtr& t, CondReport* report = nullptr);
  TermPtr contract(SystemId sys, const TermPtr& t, const Position& p, int rule);

  // Sound three-valued equality: Yes carries a replayable witness; No means
  // both CLC reduction graphs were fully explored and are disjoint.
  EqResult eq(SystemId sys, const TermPtr& a, const TermPtr& b);

  std::optional<JoinWitness> joinable(SystemId sys, const TermPtr& a, const TermPtr& b);

  // Independent oracle: bidirectional BFS over the symmetric CLC0 step
  // relation, expansions drawing filler subterms from a finite pool.
  std::optional<ConversionSequence> conversion_search_clc0(const TermPtr& a, const TermPtr& b);

  // Leftmost-outermost; ties broken by smaller rule id.
  NormalizeResult normalize(SystemId sys, const TermPtr& t);

  ReductionGraph reduction_graph(SystemId sys, const TermPtr& t, long max_nodes = -1);

  // true iff t has no redex and no condition came back Unknown during the scan
  bool is_complete_normal_form(SystemId sys, const TermPtr& t);

  bool replay(const Trace& tr, TermPtr* end = nullptr);
  bool replay(const ConversionSequence& conv, TermPtr* end = nullptr);

  // Chain of terms visited by a conversion (length = steps + 1); throws if
  // the sequence does not replay.
  std::vector<TermPtr> conversion_chain(const ConversionSequence& conv);

  int rule_count(SystemId sys) const;

 private:
  struct CondVerdict {
    Verdict verdict;
    int level;  // witness level when Yes
  };

  std::vector<RedexHit> redexes_at_levels(SystemId sys, const TermPtr& t, int cond_levels,
                                          CondReport* report);
  CondVerdict eval_condition(SystemId sys, int rule, const Substitution& sigma, int cond_levels);
  EqResult eq_levels(SystemId sys, const TermPtr& a, const TermPtr& b, int cond_levels);

  struct ReductSet {
    std::unordered_map<TermPtr, std::pair<int, Step>, TermHash, TermEq> parent;  // node -> (pred id, step)
    std::vector<TermPtr> order;
    bool complete = true;
  };
  ReductSet explore(SystemId sys, const TermPtr& t, int cond_levels, long node_budget);
  Trace trace_to(const ReductSet& rs, const TermPtr& start, const TermPtr& goal);

  Fuel fuel_;

  struct EqKey {
    SystemId sys;
    int levels;
    TermPtr a, b;
  };
  struct EqKeyHash {
    size_t operator()(const EqKey& k) const;
  };
  struct EqKeyEq {
    bool operator()(const EqKey& x, const EqKey& y) const;
  };
  std::unordered_map<EqKey, EqResult, EqKeyHash, EqKeyEq> eq_memo_;
};

}  // namespace clc
