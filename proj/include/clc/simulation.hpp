#pragma once

#include "clc/clcs.hpp"

namespace clc {

struct SimResult {
  LTermPtr result;
  LTrace trace;
};

// The constructive content of the confluence proof, built on SEngine.
// Every algorithm validates its own output by replay before returning.
class Simulator {
 public:
  explicit Simulator(SEngine& se) : se_(se), eng_(se.engine()) {}

  SEngine& sengine() { return se_; }

  // t strongly standard, t |> q, and q -> q' in CLC0 by `step`; returns t'
  // with t ->*{i,s} t' and t' |> q'.
  SimResult simulate_contraction(const LTermPtr& t, const TermPtr& q, const Step& step);

  // t standard, t |> q, and q_from -> q in CLC0 by `step`; returns t' with
  // t' ->*{i,a} t and t' |> q_from. The trace starts at t'.
  SimResult simulate_expansion(const LTermPtr& t, const TermPtr& q, const Step& step,
                               const TermPtr& q_from);

  // Input composite t <->i u ->s t' (i_step connects t and u; s_step applies
  // to u). Output trace from t: one s-step followed by at most one i-step,
  // ending at t'.
  LTrace postpone_i(const LTermPtr& t, const LStep& i_step, const LStep& s_step);

  // Input: replayable s-reduction to F1. Output: equivalent s-reduction with
  // no step inside a tuple.
  LTrace detuple_reduction(const LTrace& trace);

  // conv replays in CLC0 from q to F; returns a CLC reduction q ->* F.
  Trace extract_reduction_to_F(const ConversionSequence& conv);

  // conv replays in CLC0 from q1 to q2; returns a common CLC reduct with
  // replayable CLC traces (via joinability in R and R-to-CLC step mapping).
  JoinWitness join_in_clc(const TermPtr& q1, const TermPtr& q2,
                          const ConversionSequence& conv);

  struct UnReport {
    long terms_checked = 0;
    long components = 0;
    long unknown_skipped = 0;
    std::vector<std::pair<TermPtr, TermPtr>> nf_violations;      // distinct convertible NFs
    std::vector<TermPtr> transfer_violations;                    // CLC-redex without CLC0-redex
    bool ok() const { return nf_violations.empty() && transfer_violations.empty(); }
  };
  // Enumerates terms up to size_bound over {C,T,F,K,S,x}; checks unique
  // normal forms in CLC0 and CLC-to-CLC0 redex transfer.
  UnReport check_un_property(int size_bound);

 private:
  void sim_contr_rec(LTermPtr& cur, std::vector<LStep>& steps, const Position& tpos,
                     const TermPtr& q, const Position& qrel, int rule);
  void sim_exp_rec(LTermPtr& cur, std::vector<LStep>& steps_rev, const Position& tpos,
                   const TermPtr& q, const TermPtr& q_from, const Position& qrel, int rule);

  // CLC trace z ->* F, from eq's witness or the full pipeline.
  Trace reduction_to_F(const TermPtr& z);

  SEngine& se_;
  RewriteEngine& eng_;
};

// Position of `rel` (a path into an s-redex, below a variable of `rule`'s
// left side) in the contractum; nullopt if the variable is erased. `redex`
// is the matched redex (needed for rule 9's group sizes).
std::optional<Position> map_through_s_rule(const LTermPtr& redex, int rule, const Position& rel);

}  // namespace clc
