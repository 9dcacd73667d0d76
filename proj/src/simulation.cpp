#include "clc/simulation.hpp"

#include <algorithm>
#include <functional>

namespace clc {

namespace {

void spine(const LTermPtr& t, LTermPtr& head, std::vector<LTermPtr>& args) {
  if (t->is_app()) {
    spine(t->left(), head, args);
    args.push_back(t->right());
  } else {
    head = t;
  }
}

bool is_c1(const LTermPtr& t) { return t->is_label(Sym::C) && t->label()[0] == 1; }
bool is_c2(const LTermPtr& t) { return t->is_label(Sym::C) && t->label()[0] == 2; }

bool starts_with(const Position& p, const Position& prefix) {
  return position_le(prefix, p);
}

Position drop_prefix(const Position& p, size_t n) {
  return Position(p.begin() + n, p.end());
}

// true if some strict prefix of p addresses a tuple node
bool inside_tuple(const LTermPtr& t, const Position& p) {
  LTermPtr cur = t;
  for (size_t i = 0; i < p.size(); ++i) {
    if (cur->is_tuple()) return true;
    cur = lsubterm_at(cur, {p[i]});
  }
  return false;
}

}  // namespace

std::optional<Position> map_through_s_rule(const LTermPtr& redex, int rule, const Position& rel) {
  static const Position slot_z = {0, 0, 1};
  static const Position slot_x = {0, 1};
  static const Position slot_y = {1};

  auto under = [&](const Position& slot) { return starts_with(rel, slot); };
  auto rest_of = [&](const Position& slot) { return drop_prefix(rel, slot.size()); };

  if (rule >= 1 && rule <= 8) {
    // which argument slot survives on the right side
    bool keeps_x;
    switch (rule) {
      case 1: case 3: case 4: case 6: case 8: keeps_x = true; break;
      case 2: case 5: case 7: keeps_x = false; break;
      default: keeps_x = true;
    }
    // only rule 3 has a variable in the guard slot; the other guards are
    // constants, so nothing maps from below them
    if (rule != 8 && under(slot_z)) {
      if (rule == 3) return std::nullopt;
      throw PreconditionViolated("path is below the constant guard of the rule");
    }
    if (under(slot_x)) return keeps_x ? std::optional(rest_of(slot_x)) : std::nullopt;
    if (under(slot_y)) return keeps_x ? std::nullopt : std::optional(rest_of(slot_y));
    throw PreconditionViolated("path is not below a variable of the rule");
  }
  if (rule == 9) {
    LTermPtr head;
    std::vector<LTermPtr> args;
    spine(redex, head, args);
    const std::vector<int>& n = head->label();
    size_t k = n.size() - 1;
    if (under(slot_z)) {
      Position out = {0, 0};
      Position r = rest_of(slot_z);
      out.insert(out.end(), r.begin(), r.end());
      return out;
    }
    if (under(slot_x)) {
      // the y-group <y1,...,yk>
      Position r = rest_of(slot_x);
      size_t i;
      if (k == 1) {
        i = 1;
      } else {
        if (r.empty()) throw PreconditionViolated("path addresses the y-tuple itself");
        i = static_cast<size_t>(r[0]) + 1;
        r = drop_prefix(r, 1);
      }
      Position out = k == 1 ? Position{1, 0} : Position{1, static_cast<int>(i) - 1, 0};
      out.insert(out.end(), r.begin(), r.end());
      return out;
    }
    if (under(slot_y)) {
      Position r = rest_of(slot_y);
      if (r.empty()) throw PreconditionViolated("path addresses the z-tuple itself");
      int flat = r[0];
      r = drop_prefix(r, 1);
      int g = 0, off = 0;
      while (flat >= off + n[g]) {
        off += n[g];
        ++g;
      }
      int jg = flat - off;
      Position out;
      if (g == 0) {
        out = {0, 1};
      } else {
        out = k == 1 ? Position{1} : Position{1, g - 1};
        out.push_back(1);
      }
      if (n[g] > 1) out.push_back(jg);
      out.insert(out.end(), r.begin(), r.end());
      return out;
    }
    throw PreconditionViolated("path is not below a variable of the rule");
  }
  throw PreconditionViolated("unknown s-rule");
}

void Simulator::sim_contr_rec(LTermPtr& cur, std::vector<LStep>& steps, const Position& tpos,
                              const TermPtr& q, const Position& qrel, int rule) {
  LTermPtr sub = lsubterm_at(cur, tpos);

  if (sub->is_tuple()) {
    size_t count = sub->elems().size();
    for (size_t i = 0; i < count; ++i)
      sim_contr_rec(cur, steps, position_cat(tpos, {static_cast<int>(i)}), q, qrel, rule);
    return;
  }
  if (is_iterm(sub)) {  // sub == q; a single i-step suffices
    Position p = position_cat(tpos, qrel);
    LTermPtr next = se_.i_contract(cur, p, rule);
    steps.push_back({LStepKind::I, p, rule, true, next});
    cur = next;
    return;
  }
  if (!qrel.empty()) {
    int c = qrel[0];
    sim_contr_rec(cur, steps, position_cat(tpos, {c}), subterm_at(q, {c}),
                  drop_prefix(qrel, 1), rule);
    return;
  }

  // root case: sub is an s-term refining the contracted redex q
  LTermPtr head;
  std::vector<LTermPtr> args;
  spine(sub, head, args);
  auto s_step = [&](int srule) {
    LTermPtr next = se_.s_contract(cur, tpos, srule);
    steps.push_back({LStepKind::S, tpos, srule, true, next});
    cur = next;
  };
  switch (rule) {
    case 1:  // C T q1 q2 -> q1
    case 2: {  // C F q1 q2 -> q2
      bool tr = rule == 1;
      if (is_c1(head)) {
        s_step(tr ? 1 : 2);
      } else if (is_c2(head)) {
        const LTermPtr& z = args[0];
        if (z->is_const(tr ? Sym::T : Sym::F)) s_step(tr ? 4 : 5);
        else if (z->is_label(tr ? Sym::T : Sym::F)) s_step(tr ? 6 : 7);
        else throw PreconditionViolated("first argument of C2 does not refine the Boolean");
      } else {
        throw PreconditionViolated("head does not refine C");
      }
      return;
    }
    case 3: {  // C q0 q1 q1 -> q1
      if (is_c2(head)) {
        s_step(3);  // erasures of the last two arguments are identical
        return;
      }
      if (!is_c1(head)) throw PreconditionViolated("head does not refine C");
      // reduce the first argument to T1 or F1, then fire rule 1 or 2
      const LTermPtr& t0 = args[0];
      Position p0 = position_cat(tpos, {0, 0, 1});
      for (bool want_t : {true, false}) {
        LTermPtr goal = LTerm::labelled(want_t ? Sym::T : Sym::F, {1});
        if (auto path = se_.s_path(t0, goal)) {
          for (const LStep& st : path->steps) {
            Position p = position_cat(p0, st.pos);
            LTermPtr next = se_.s_contract(cur, p, st.rule);
            steps.push_back({LStepKind::S, p, st.rule, true, next});
            cur = next;
          }
          s_step(want_t ? 1 : 2);
          return;
        }
      }
      if (!se_.s_reducts_all(t0).complete)
        throw ConditionUnknown("reduct enumeration of the C1 guard exhausted fuel");
      throw PreconditionViolated("C1 guard reduces to neither T1 nor F1");
    }
    case 4: {  // K q1 q2 -> q1
      if (!head->is_label(Sym::K)) throw PreconditionViolated("head does not refine K");
      s_step(8);
      return;
    }
    case 5: {  // S q0 q1 q2 -> q0 q2 (q1 q2)
      if (!head->is_label(Sym::S)) throw PreconditionViolated("head does not refine S");
      s_step(9);
      return;
    }
    default:
      throw PreconditionViolated("unknown CLC0 rule");
  }
}

SimResult Simulator::simulate_contraction(const LTermPtr& t, const TermPtr& q, const Step& step) {
  if (!refines(t, q)) throw PreconditionViolated("t does not refine q");
  TermPtr q_next = eng_.contract(SystemId::CLC0, q, step.pos, step.rule);

  LTermPtr cur = t;
  std::vector<LStep> steps;
  sim_contr_rec(cur, steps, {}, q, step.pos, step.rule);

  LTrace trace{t, steps};
  LTermPtr end;
  if (!se_.replay(trace, &end) || !equal(end, cur) || !refines(cur, q_next))
    throw PreconditionViolated("contraction simulation failed self-validation");
  return {cur, std::move(trace)};
}

void Simulator::sim_exp_rec(LTermPtr& cur, std::vector<LStep>& steps_rev, const Position& tpos,
                            const TermPtr& q, const TermPtr& q_from, const Position& qrel,
                            int rule) {
  LTermPtr sub = lsubterm_at(cur, tpos);

  if (sub->is_tuple()) {
    size_t count = sub->elems().size();
    for (size_t i = 0; i < count; ++i)
      sim_exp_rec(cur, steps_rev, position_cat(tpos, {static_cast<int>(i)}), q, q_from, qrel,
                  rule);
    return;
  }
  if (is_iterm(sub)) {  // sub == q; a single i-expansion suffices
    LTermPtr old = cur;
    cur = lreplace_at(cur, tpos, embed(q_from));
    steps_rev.push_back({LStepKind::I, position_cat(tpos, qrel), rule, true, old});
    return;
  }
  if (!qrel.empty()) {
    int c = qrel[0];
    sim_exp_rec(cur, steps_rev, position_cat(tpos, {c}), subterm_at(q, {c}),
                subterm_at(q_from, {c}), drop_prefix(qrel, 1), rule);
    return;
  }

  // root case: sub is an s-term refining the contractum; build an a-redex
  auto a_step = [&](const AShape& shape) {
    LTermPtr redex = se_.a_expand(sub, shape);
    LTermPtr old = cur;
    cur = lreplace_at(cur, tpos, redex);
    steps_rev.push_back({LStepKind::A, tpos, 0, true, old});
  };
  switch (rule) {
    case 1:  // q_from = C T q q2
      a_step({1, embed(subterm_at(q_from, {1})), nullptr, nullptr, {}});
      return;
    case 2:  // q_from = C F q1 q
      a_step({2, embed(subterm_at(q_from, {0, 1})), nullptr, nullptr, {}});
      return;
    case 3:  // q_from = C q0 q q
      a_step({3, embed(subterm_at(q_from, {0, 0, 1})), sub, sub, {}});
      return;
    case 4:  // q_from = K q q1
      a_step({4, embed(subterm_at(q_from, {1})), nullptr, nullptr, {}});
      return;
    case 5: {  // q_from = S q0 q1 q2; sub = ta tb tc with the (*) decomposition
      if (!sub->is_app() || !sub->left()->is_app())
        throw PreconditionViolated("contractum does not decompose for the S case");
      LTermPtr tb = sub->left()->right();
      LTermPtr tc = sub->right();
      int m = tb->is_tuple() ? static_cast<int>(tb->elems().size()) : 1;
      std::vector<LTermPtr> tcs =
          tc->is_tuple() ? tc->elems() : std::vector<LTermPtr>{tc};
      std::vector<int> label{m};
      for (const LTermPtr& ti : tcs) {
        if (!ti->is_app())
          throw PreconditionViolated("tuple element does not decompose for the S case");
        const LTermPtr& zi = ti->right();
        label.push_back(zi->is_tuple() ? static_cast<int>(zi->elems().size()) : 1);
      }
      a_step({5, nullptr, nullptr, nullptr, std::move(label)});
      return;
    }
    default:
      throw PreconditionViolated("unknown CLC0 rule");
  }
}

SimResult Simulator::simulate_expansion(const LTermPtr& t, const TermPtr& q, const Step& step,
                                        const TermPtr& q_from) {
  if (!refines(t, q)) throw PreconditionViolated("t does not refine q");
  TermPtr check = eng_.contract(SystemId::CLC0, q_from, step.pos, step.rule);
  if (!equal(check, q)) throw PreconditionViolated("step does not contract q_from to q");

  LTermPtr cur = t;
  std::vector<LStep> steps_rev;
  sim_exp_rec(cur, steps_rev, {}, q, q_from, step.pos, step.rule);
  std::reverse(steps_rev.begin(), steps_rev.end());

  LTrace trace{cur, std::move(steps_rev)};
  LTermPtr end;
  if (!se_.replay(trace, &end) || !equal(end, t) || !refines(cur, q_from))
    throw PreconditionViolated("expansion simulation failed self-validation");
  return {cur, std::move(trace)};
}

LTrace Simulator::postpone_i(const LTermPtr& t, const LStep& i_step, const LStep& s_step) {
  if (i_step.kind != LStepKind::I || s_step.kind != LStepKind::S)
    throw PreconditionViolated("expected one i-step and one s-step");
  LTermPtr u;
  if (i_step.forward) {
    u = se_.i_contract(t, i_step.pos, i_step.rule);
    if (i_step.to && !equal(u, i_step.to))
      throw PreconditionViolated("i-step does not produce the recorded term");
  } else {
    u = i_step.to;
    if (!u || !equal(se_.i_contract(u, i_step.pos, i_step.rule), t))
      throw PreconditionViolated("backward i-step does not contract to t");
  }
  LTermPtr tp = se_.s_contract(u, s_step.pos, s_step.rule);

  const Position& pu = i_step.pos;
  const Position& ps = s_step.pos;

  std::vector<LStep> out;
  if (positions_disjoint(pu, ps)) {
    LTermPtr v = se_.s_contract(t, ps, s_step.rule);
    out.push_back({LStepKind::S, ps, s_step.rule, true, v});
    if (i_step.forward) {
      out.push_back({LStepKind::I, pu, i_step.rule, true, tp});
    } else {
      out.push_back({LStepKind::I, pu, i_step.rule, false, tp});
    }
  } else if (position_le(ps, pu) && pu != ps) {
    Position rel = drop_prefix(pu, ps.size());
    if ((s_step.rule == 4 || s_step.rule == 5) && rel == Position{0, 0, 1}) {
      // The i-step sits exactly on the constant guard T/F, so the rule no
      // longer matches in t; rule 3 recovers the branch when its condition
      // holds, otherwise postponement is genuinely impossible.
      LTermPtr v;
      try {
        v = se_.s_contract(t, ps, 3);
      } catch (const ConditionUnknown&) {
        throw;
      } catch (const ClcError&) {
        throw PreconditionViolated("i-step at the Boolean guard cannot be postponed");
      }
      if (!equal(v, tp))
        throw PreconditionViolated("i-step at the Boolean guard cannot be postponed");
      out.push_back({LStepKind::S, ps, 3, true, v});
    } else {
      auto mapped = map_through_s_rule(lsubterm_at(u, ps), s_step.rule, rel);
      LTermPtr v = se_.s_contract(t, ps, s_step.rule);
      out.push_back({LStepKind::S, ps, s_step.rule, true, v});
      if (mapped) {
        Position pi = position_cat(ps, *mapped);
        out.push_back({LStepKind::I, pi, i_step.rule, i_step.forward, tp});
      }
      // erased i-redex: the s-step alone reaches t'
    }
  } else {
    throw PreconditionViolated("i-redex cannot contain the s-redex");
  }

  LTrace trace{t, std::move(out)};
  LTermPtr end;
  if (!se_.replay(trace, &end) || !equal(end, tp))
    throw PreconditionViolated("postponement failed self-validation");
  return trace;
}

LTrace Simulator::detuple_reduction(const LTrace& trace) {
  LTermPtr end;
  if (!se_.replay(trace, &end) || !equal(end, SEngine::F1()))
    throw PreconditionViolated("input trace does not replay to F1");

  // recursive cleanup: returns steps with no in-tuple contraction
  std::function<std::vector<LStep>(const LTermPtr&, const std::vector<LStep>&, size_t)> fix =
      [&](const LTermPtr& t, const std::vector<LStep>& steps, size_t from) -> std::vector<LStep> {
    if (from >= steps.size()) return {};
    const LStep& s0 = steps[from];
    LTermPtr t1 = se_.s_contract(t, s0.pos, s0.rule);
    std::vector<LStep> rest = fix(t1, steps, from + 1);
    if (!inside_tuple(t, s0.pos)) {
      rest.insert(rest.begin(), {LStepKind::S, s0.pos, s0.rule, true, t1});
      return rest;
    }
    // defer s0 past the clean tail
    std::vector<LStep> out;
    LTermPtr cur = t;
    Position d = s0.pos;
    bool deferred = true;
    auto emit = [&](const Position& p, int rule) {
      cur = se_.s_contract(cur, p, rule);
      out.push_back({LStepKind::S, p, rule, true, cur});
    };
    for (size_t i = 0; i < rest.size(); ++i) {
      const LStep& tau = rest[i];
      if (!deferred) {
        emit(tau.pos, tau.rule);
        continue;
      }
      if (positions_disjoint(tau.pos, d)) {
        emit(tau.pos, tau.rule);
      } else if (position_le(tau.pos, d) && tau.pos != d) {
        // deferred redex sits below a variable of tau's rule
        auto mapped = map_through_s_rule(lsubterm_at(cur, tau.pos), tau.rule,
                                         drop_prefix(d, tau.pos.size()));
        emit(tau.pos, tau.rule);
        if (mapped) {
          d = position_cat(tau.pos, *mapped);
        } else {
          deferred = false;  // the enclosing tuple got erased with the redex
        }
      } else {
        // first step at or inside the contractum's descendant: release now
        emit(d, s0.rule);
        deferred = false;
        emit(tau.pos, tau.rule);
      }
    }
    if (deferred) emit(d, s0.rule);
    return out;
  };

  std::vector<LStep> cleaned = fix(trace.start, trace.steps, 0);
  LTrace result{trace.start, std::move(cleaned)};
  LTermPtr cur = trace.start;
  for (const LStep& st : result.steps) {
    if (inside_tuple(cur, st.pos))
      throw PreconditionViolated("detupling left an in-tuple step");
    cur = st.to;
  }
  LTermPtr end2;
  if (!se_.replay(result, &end2) || !equal(end2, SEngine::F1()))
    throw PreconditionViolated("detupling failed self-validation");
  return result;
}

Trace Simulator::extract_reduction_to_F(const ConversionSequence& conv) {
  const TermPtr F = Term::constant(Sym::F);
  std::vector<TermPtr> chain = eng_.conversion_chain(conv);  // throws if it does not replay
  if (!equal(chain.back(), F))
    throw PreconditionViolated("conversion does not end at F");

  // walk the conversion backward from F, lifting F1 to a labelled t |> q
  LTermPtr t = SEngine::F1();
  for (size_t i = chain.size() - 1; i > 0; --i) {
    const ConvStep& cs = conv.steps[i - 1];
    if (cs.forward) {
      // chain[i-1] -> chain[i]: expand
      t = simulate_expansion(t, chain[i], cs.step, chain[i - 1]).result;
    } else {
      // chain[i] -> chain[i-1]: contract
      t = simulate_contraction(t, chain[i], cs.step).result;
    }
  }
  const TermPtr& q = chain.front();

  auto path = se_.s_path(t, SEngine::F1());
  if (!path) {
    if (!se_.s_reducts_all(t).complete)
      throw ConditionUnknown("s-reduct enumeration exhausted fuel before reaching F1");
    throw PreconditionViolated("lifted term does not s-reduce to F1");
  }
  LTrace clean = detuple_reduction(*path);

  // erase step by step; positions carry over since no step is inside a tuple
  static const int erased_rule[10] = {0, 1, 2, 3, 1, 2, 1, 2, 4, 5};
  Trace out{q, {}};
  TermPtr cur_q = q;
  for (const LStep& st : clean.steps) {
    int rule = erased_rule[st.rule];
    int level = 0;
    for (const RedexHit& hit : eng_.redexes(SystemId::CLC, cur_q)) {
      if (hit.pos == st.pos && hit.rule == rule) {
        level = hit.level;
        break;
      }
    }
    cur_q = eng_.contract(SystemId::CLC, cur_q, st.pos, rule);
    out.steps.push_back({SystemId::CLC, rule, st.pos, level});
  }
  TermPtr end;
  if (!eng_.replay(out, &end) || !equal(end, F))
    throw PreconditionViolated("extracted reduction failed self-validation");
  return out;
}

Trace Simulator::reduction_to_F(const TermPtr& z) {
  const TermPtr F = Term::constant(Sym::F);
  if (equal(z, F)) return Trace{z, {}};
  EqResult er = eng_.eq(SystemId::CLC, z, F);
  if (er.verdict != Verdict::Yes)
    throw ConditionUnknown("could not certify z = F in CLC");
  if (er.join && equal(er.join->common, F)) return er.join->left;
  if (er.conversion) return extract_reduction_to_F(*er.conversion);
  if (auto conv = eng_.conversion_search_clc0(z, F)) return extract_reduction_to_F(*conv);
  throw ConditionUnknown("no usable witness for z = F");
}

JoinWitness Simulator::join_in_clc(const TermPtr& q1, const TermPtr& q2,
                                   const ConversionSequence& conv) {
  TermPtr end;
  if (!eng_.replay(conv, &end) || !equal(conv.start, q1) || !equal(end, q2))
    throw PreconditionViolated("conversion does not replay from q1 to q2");

  auto jw = eng_.joinable(SystemId::R, q1, q2);
  if (!jw) throw ConditionUnknown("joinability search in R exhausted fuel");

  // map each R-step to CLC steps
  auto to_clc = [&](const Trace& rtrace) {
    Trace out{rtrace.start, {}};
    TermPtr cur = rtrace.start;
    for (const Step& st : rtrace.steps) {
      if (st.rule == 2) {
        // C z x y -> y needs z ->* F first
        Position zp = position_cat(st.pos, {0, 0, 1});
        Trace zf = reduction_to_F(subterm_at(cur, zp));
        for (const Step& zs : zf.steps) {
          Position p = position_cat(zp, zs.pos);
          cur = eng_.contract(SystemId::CLC, cur, p, zs.rule);
          out.steps.push_back({SystemId::CLC, zs.rule, p, zs.level});
        }
        cur = eng_.contract(SystemId::CLC, cur, st.pos, 2);
        out.steps.push_back({SystemId::CLC, 2, st.pos, 0});
      } else {
        int rule = st.rule;  // R rules 1,3,4,5 coincide with CLC rules
        cur = eng_.contract(SystemId::CLC, cur, st.pos, rule);
        out.steps.push_back({SystemId::CLC, rule, st.pos, st.level});
      }
    }
    return out;
  };

  JoinWitness out{jw->common, to_clc(jw->left), to_clc(jw->right)};
  TermPtr e1, e2;
  if (!eng_.replay(out.left, &e1) || !eng_.replay(out.right, &e2) || !equal(e1, e2) ||
      !equal(e1, out.common))
    throw PreconditionViolated("CLC join failed self-validation");
  return out;
}

Simulator::UnReport Simulator::check_un_property(int size_bound) {
  UnReport report;
  // enumerate all terms with up to size_bound atoms over the constants plus
  // one variable
  std::vector<std::vector<TermPtr>> by_size(size_bound + 1);
  if (size_bound >= 1) {
    for (Sym s : {Sym::C, Sym::T, Sym::F, Sym::K, Sym::S}) by_size[1].push_back(Term::constant(s));
    by_size[1].push_back(Term::variable("x"));
  }
  for (int n = 2; n <= size_bound; ++n)
    for (int l = 1; l <= n - 1; ++l)
      for (const TermPtr& a : by_size[l])
        for (const TermPtr& b : by_size[n - l]) by_size[n].push_back(Term::app(a, b));

  std::unordered_map<TermPtr, int, TermHash, TermEq> ids;
  std::vector<int> parent;
  std::function<int(int)> find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto get_id = [&](const TermPtr& t) {
    auto [it, inserted] = ids.emplace(t, static_cast<int>(parent.size()));
    if (inserted) parent.push_back(it->second);
    return it->second;
  };

  for (int n = 1; n <= size_bound; ++n) {
    for (const TermPtr& t : by_size[n]) {
      ++report.terms_checked;

      // redex transfer: a definite CLC-redex implies a CLC0-redex
      CondReport rep;
      bool clc_redex = !eng_.redexes(SystemId::CLC, t, &rep).empty();
      bool clc0_redex = !eng_.redexes(SystemId::CLC0, t).empty();
      if (clc_redex && !clc0_redex) report.transfer_violations.push_back(t);
      if (!clc_redex && !clc0_redex && rep.any()) ++report.unknown_skipped;

      // union everything reachable from t in CLC0
      if (ids.count(t)) continue;  // already explored as a reduct
      ReductionGraph g = eng_.reduction_graph(SystemId::CLC0, t);
      int root = get_id(t);
      for (const TermPtr& node : g.nodes) {
        int id = get_id(node);
        parent[find(id)] = find(root);
      }
      if (!g.complete) ++report.unknown_skipped;
    }
  }

  // distinct CLC0-normal forms inside one component violate UN
  std::unordered_map<int, TermPtr> nf_of_component;
  std::unordered_set<int> comps;
  for (const auto& [t, id] : ids) {
    comps.insert(find(id));
    if (!eng_.redexes(SystemId::CLC0, t).empty()) continue;
    int c = find(id);
    auto [it, inserted] = nf_of_component.emplace(c, t);
    if (!inserted && !equal(it->second, t)) report.nf_violations.emplace_back(it->second, t);
  }
  report.components = static_cast<long>(comps.size());
  return report;
}

}  // namespace clc
