#include "clc/clcs.hpp"

#include <algorithm>
#include <deque>

namespace clc {

std::vector<int> SGraph::sinks() const {
  std::vector<bool> has_out(nodes.size(), false);
  for (const auto& e : edges) has_out[e.from] = true;
  std::vector<int> out;
  for (size_t i = 0; i < nodes.size(); ++i)
    if (!has_out[i]) out.push_back(static_cast<int>(i));
  return out;
}

const LTermPtr& SEngine::F1() {
  static const LTermPtr f1 = LTerm::labelled(Sym::F, {1});
  return f1;
}

namespace {

// head + arguments of the application spine
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
bool is_t1(const LTermPtr& t) { return t->is_label(Sym::T); }
bool is_f1(const LTermPtr& t) { return t->is_label(Sym::F); }
bool is_k1(const LTermPtr& t) { return t->is_label(Sym::K); }

std::vector<LTermPtr> tuple_view(const LTermPtr& t, size_t k) {
  // reads t as <y1,...,yk> under the convention <y> == y
  if (k == 1) return {t};
  if (!t->is_tuple() || t->elems().size() != k) return {};
  return t->elems();
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::No || b == Verdict::No) return Verdict::No;
  if (a == Verdict::Unknown || b == Verdict::Unknown) return Verdict::Unknown;
  return Verdict::Yes;
}

}  // namespace

Verdict SEngine::s_cond(const LTermPtr& r, int rule) {
  LTermPtr head;
  std::vector<LTermPtr> args;
  spine(r, head, args);
  if (rule == 3) {
    return eng_.eq(SystemId::CLC, leftmost_erase(args[1]), leftmost_erase(args[2])).verdict;
  }
  if (rule == 9) {
    const std::vector<int>& n = head->label();
    size_t k = n.size() - 1;
    std::vector<LTermPtr> ys = tuple_view(args[1], k);
    Verdict v = Verdict::Yes;
    TermPtr y0 = leftmost_erase(ys[0]);
    for (size_t i = 1; i < ys.size(); ++i)
      v = combine(v, eng_.eq(SystemId::CLC, y0, leftmost_erase(ys[i])).verdict);
    const std::vector<LTermPtr>& zs = args[2]->elems();
    TermPtr z0 = leftmost_erase(zs[0]);
    for (size_t i = 1; i < zs.size(); ++i)
      v = combine(v, eng_.eq(SystemId::CLC, z0, leftmost_erase(zs[i])).verdict);
    return v;
  }
  return Verdict::Yes;
}

// rules matching at the root of r, as (rule id, contractum); conditions not
// yet evaluated
static std::vector<std::pair<int, LTermPtr>> match_s_root(const LTermPtr& r) {
  std::vector<std::pair<int, LTermPtr>> out;
  LTermPtr head;
  std::vector<LTermPtr> args;
  spine(r, head, args);
  if (!head->is_label()) return out;

  if (is_k1(head) && args.size() == 2) {
    out.emplace_back(8, args[0]);
    return out;
  }
  if (args.size() != 3) return out;
  const LTermPtr& z = args[0];
  const LTermPtr& x = args[1];
  const LTermPtr& y = args[2];
  if (is_c1(head)) {
    if (is_t1(z)) out.emplace_back(1, x);
    if (is_f1(z)) out.emplace_back(2, y);
    return out;
  }
  if (is_c2(head)) {
    out.emplace_back(3, x);  // conditional on erasure equality
    if (z->is_const(Sym::T)) out.emplace_back(4, x);
    if (z->is_const(Sym::F)) out.emplace_back(5, y);
    if (is_t1(z)) out.emplace_back(6, x);
    if (is_f1(z)) out.emplace_back(7, y);
    return out;
  }
  if (head->is_label(Sym::S)) {
    const std::vector<int>& n = head->label();
    size_t k = n.size() - 1;
    int total = 0;
    for (int ni : n) total += ni;
    std::vector<LTermPtr> ys = tuple_view(x, k);
    if (ys.empty()) return out;
    if (!y->is_tuple() || static_cast<int>(y->elems().size()) != total) return out;
    const std::vector<LTermPtr>& zs = y->elems();
    // x <z0> <y1 <z1>, ..., yk <zk>>
    size_t idx = 0;
    auto group = [&](int ni) {
      std::vector<LTermPtr> g(zs.begin() + idx, zs.begin() + idx + ni);
      idx += ni;
      return LTerm::tuple(std::move(g));
    };
    LTermPtr res = LTerm::app(z, group(n[0]));
    std::vector<LTermPtr> outer;
    for (size_t i = 1; i <= k; ++i) outer.push_back(LTerm::app(ys[i - 1], group(n[i])));
    out.emplace_back(9, LTerm::app(res, LTerm::tuple(std::move(outer))));
  }
  return out;
}

std::vector<LRedexHit> SEngine::s_redexes(const LTermPtr& t, LCondReport* report) {
  std::vector<LRedexHit> hits;
  for (const Position& p : lterm_positions(t)) {
    LTermPtr sub = lsubterm_at(t, p);
    for (const auto& [rule, res] : match_s_root(sub)) {
      Verdict v = s_cond(sub, rule);
      if (v == Verdict::Yes) hits.push_back({p, rule});
      else if (v == Verdict::Unknown && report) report->unknown.push_back({p, rule});
    }
  }
  return hits;
}

LTermPtr SEngine::s_contract(const LTermPtr& t, const Position& p, int rule) {
  LTermPtr sub = lsubterm_at(t, p);
  for (const auto& [r, res] : match_s_root(sub)) {
    if (r != rule) continue;
    Verdict v = s_cond(sub, rule);
    if (v == Verdict::Unknown)
      throw ConditionUnknown("s-rule condition could not be decided within fuel");
    if (v == Verdict::No) throw NotARedex("s-rule condition fails");
    return lreplace_at(t, p, res);
  }
  throw NotARedex("no s-rule matches at position");
}

std::vector<LRedexHit> SEngine::i_redexes(const LTermPtr& t, LCondReport* report) {
  std::vector<LRedexHit> hits;
  // scan maximal i-subterms; every i-redex lies inside one
  for (const Position& p : lterm_positions(t)) {
    auto q = as_iterm(lsubterm_at(t, p));
    if (!q) continue;
    if (!p.empty()) {
      Position parent(p.begin(), p.end() - 1);
      if (is_iterm(lsubterm_at(t, parent))) continue;  // not maximal
    }
    CondReport rep;
    for (const RedexHit& hit : eng_.redexes(SystemId::CLC, *q, report ? &rep : nullptr)) {
      hits.push_back({position_cat(p, hit.pos), hit.rule});
    }
    if (report)
      for (const auto& e : rep.unknown)
        report->unknown.push_back({position_cat(p, e.pos), e.rule});
  }
  return hits;
}

LTermPtr SEngine::i_contract(const LTermPtr& t, const Position& p, int rule) {
  auto q = as_iterm(lsubterm_at(t, p));
  if (!q) throw NotARedex("subterm is not an i-term");
  return lreplace_at(t, p, embed(eng_.contract(SystemId::CLC, *q, {}, rule)));
}

const SGraph& SEngine::s_reducts_all(const LTermPtr& t) {
  if (auto it = graph_memo_.find(t); it != graph_memo_.end()) return it->second;
  SGraph g;
  std::unordered_map<LTermPtr, int, LTermHash, LTermEq> ids;
  g.nodes.push_back(t);
  ids.emplace(t, 0);
  std::deque<int> frontier{0};
  long cap = eng_.fuel().max_steps;
  while (!frontier.empty()) {
    int id = frontier.front();
    frontier.pop_front();
    LTermPtr cur = g.nodes[id];
    LCondReport rep;
    for (const LRedexHit& hit : s_redexes(cur, &rep)) {
      LTermPtr next = s_contract(cur, hit.pos, hit.rule);
      auto it = ids.find(next);
      int nid;
      if (it == ids.end()) {
        if (static_cast<long>(g.nodes.size()) >= cap) {
          g.complete = false;
          continue;
        }
        nid = static_cast<int>(g.nodes.size());
        g.nodes.push_back(next);
        ids.emplace(next, nid);
        frontier.push_back(nid);
      } else {
        nid = it->second;
      }
      g.edges.push_back({id, nid, hit.pos, hit.rule});
    }
    if (rep.any()) g.complete = false;
  }
  return graph_memo_.emplace(t, std::move(g)).first->second;
}

std::vector<LTermPtr> SEngine::s_normal_forms(const LTermPtr& t, bool* complete) {
  const SGraph& g = s_reducts_all(t);
  if (complete) *complete = g.complete;
  std::vector<LTermPtr> out;
  for (int i : g.sinks()) out.push_back(g.nodes[i]);
  return out;
}

Verdict SEngine::is_standard(const LTermPtr& t, LCondReport* report) {
  if (auto it = std_memo_.find(t); it != std_memo_.end() && it->second != Verdict::Unknown && !report)
    return it->second;
  Verdict result = Verdict::Yes;
  for (const Position& p : lterm_positions(t)) {
    LTermPtr sub = lsubterm_at(t, p);
    // 1: every subterm is an i-term, an s-term or a tuple
    if (!is_iterm(sub) && !is_sterm(sub) && !sub->is_tuple()) return Verdict::No;
    LTermPtr head;
    std::vector<LTermPtr> args;
    spine(sub, head, args);
    // 2: C1 t0 t1 t2 with t0 in s-NF forces t0 = T1 or F1
    if (is_c1(head) && args.size() == 3) {
      LCondReport rep;
      bool has_redex = !s_redexes(args[0], &rep).empty();
      if (!has_redex) {
        if (rep.any()) {
          result = Verdict::Unknown;
          if (report) report->unknown.push_back({p, 0});
        } else if (!is_t1(args[0]) && !is_f1(args[0])) {
          return Verdict::No;
        }
      }
    }
    // 3: S^{n0..nk} t0 t1 t2 shape constraints
    if (head->is_label(Sym::S) && args.size() == 3) {
      const std::vector<int>& n = head->label();
      size_t k = n.size() - 1;
      int total = 0;
      for (int ni : n) total += ni;
      if (!args[2]->is_tuple() || static_cast<int>(args[2]->elems().size()) != total)
        return Verdict::No;
      if (k > 1 && (!args[1]->is_tuple() || args[1]->elems().size() != k)) return Verdict::No;
    }
    // 5: no nested tuples
    if (sub->is_tuple()) {
      for (const LTermPtr& e : sub->elems())
        if (e->is_tuple()) return Verdict::No;
    }
  }
  // 4: s-term subterms only s-reduce to s-terms
  for (const Position& p : lterm_positions(t)) {
    LTermPtr sub = lsubterm_at(t, p);
    if (!is_sterm(sub)) continue;
    const SGraph& g = s_reducts_all(sub);
    for (const LTermPtr& n : g.nodes)
      if (!is_sterm(n)) return Verdict::No;
    if (!g.complete) {
      result = Verdict::Unknown;
      if (report) report->unknown.push_back({p, 0});
    }
  }
  if (!report) std_memo_[t] = result;
  return result;
}

Verdict SEngine::is_strongly_standard(const LTermPtr& t, LCondReport* report) {
  const SGraph& g = s_reducts_all(t);
  Verdict result = g.complete ? Verdict::Yes : Verdict::Unknown;
  for (const LTermPtr& n : g.nodes) result = combine(result, is_standard(n, report));
  return result;
}

Verdict SEngine::leadsto_F1(const LTermPtr& t, LCondReport* report) {
  Verdict v = is_strongly_standard(t, report);
  if (v == Verdict::No) return Verdict::No;
  const SGraph& g = s_reducts_all(t);
  for (int i : g.sinks())
    if (!equal(g.nodes[i], F1())) return Verdict::No;
  if (!g.complete) return Verdict::Unknown;
  return v;
}

Verdict SEngine::root_a_step(const LTermPtr& rp, const LTermPtr& r) {
  if (!is_sterm(r)) return Verdict::No;
  LTermPtr head;
  std::vector<LTermPtr> args;
  spine(rp, head, args);
  if (!head->is_label()) return Verdict::No;

  if (is_k1(head) && args.size() == 2)
    return (equal(args[0], r) && is_iterm(args[1])) ? Verdict::Yes : Verdict::No;
  if (args.size() != 3) return Verdict::No;

  if (is_c1(head)) {
    if (is_t1(args[0]) && equal(args[1], r) && is_iterm(args[2])) return Verdict::Yes;
    if (is_f1(args[0]) && is_iterm(args[1]) && equal(args[2], r)) return Verdict::Yes;
    return Verdict::No;
  }
  if (is_c2(head)) {
    if (!is_iterm(args[0])) return Verdict::No;
    const SGraph& g = s_reducts_all(r);
    auto reach = [&](const LTermPtr& goal) {
      for (const LTermPtr& n : g.nodes)
        if (equal(n, goal)) return Verdict::Yes;
      return g.complete ? Verdict::No : Verdict::Unknown;
    };
    return combine(reach(args[1]), reach(args[2]));
  }
  if (head->is_label(Sym::S)) {
    auto matches = match_s_root(rp);
    if (matches.empty()) return Verdict::No;
    // no si or rij may be a tuple
    const std::vector<int>& n = head->label();
    size_t k = n.size() - 1;
    for (const LTermPtr& y : tuple_view(args[1], k))
      if (y->is_tuple()) return Verdict::No;
    for (const LTermPtr& z : args[2]->elems())
      if (z->is_tuple()) return Verdict::No;
    if (!equal(matches[0].second, r)) return Verdict::No;
    return s_cond(rp, 9);
  }
  return Verdict::No;
}

LTermPtr SEngine::a_expand(const LTermPtr& t, const AShape& shape) {
  if (!is_sterm(t)) throw PreconditionViolated("a-contractum must be an s-term");
  auto require_iterm = [](const LTermPtr& q) {
    if (!q || !is_iterm(q)) throw ShapeMismatch("a-redex filler must be an i-term");
  };
  switch (shape.form) {
    case 1:
      require_iterm(shape.q);
      return LTerm::app(LTerm::labelled(Sym::C, {1}), LTerm::labelled(Sym::T, {1}), t, shape.q);
    case 2:
      require_iterm(shape.q);
      return LTerm::app(LTerm::labelled(Sym::C, {1}), LTerm::labelled(Sym::F, {1}), shape.q, t);
    case 3: {
      require_iterm(shape.q);
      if (!shape.t1 || !shape.t2) throw ShapeMismatch("C2 form needs both targets");
      const SGraph& g = s_reducts_all(t);
      for (const LTermPtr& goal : {shape.t1, shape.t2}) {
        bool found = false;
        for (const LTermPtr& n : g.nodes)
          if (equal(n, goal)) { found = true; break; }
        if (!found) {
          if (!g.complete)
            throw ConditionUnknown("reachability search exhausted fuel");
          throw PreconditionViolated("target is not an s-reduct of the contractum");
        }
      }
      return LTerm::app(LTerm::labelled(Sym::C, {2}), shape.q, shape.t1, shape.t2);
    }
    case 4:
      require_iterm(shape.q);
      return LTerm::app(LTerm::labelled(Sym::K, {1}), t, shape.q);
    case 5: {
      // t = t0 <r0> <s1 <r1>, ..., sk <rk>>; label = n0,...,nk
      const std::vector<int>& n = shape.label;
      if (n.size() < 2) throw ShapeMismatch("S form needs at least two group sizes");
      size_t k = n.size() - 1;
      if (!t->is_app() || !t->left()->is_app()) throw ShapeMismatch("contractum too small for S form");
      LTermPtr t0 = t->left()->left();
      LTermPtr b0 = t->left()->right();
      LTermPtr b1 = t->right();
      auto ungroup = [](const LTermPtr& g, int ni) {
        std::vector<LTermPtr> v = ni == 1 ? std::vector<LTermPtr>{g}
                                          : (g->is_tuple() && static_cast<int>(g->elems().size()) == ni
                                                 ? g->elems()
                                                 : std::vector<LTermPtr>{});
        if (v.empty()) throw ShapeMismatch("group does not match its size");
        for (const LTermPtr& e : v)
          if (e->is_tuple()) throw ShapeMismatch("group elements must not be tuples");
        return v;
      };
      std::vector<LTermPtr> zs = ungroup(b0, n[0]);
      std::vector<LTermPtr> outer = tuple_view(b1, k);
      if (outer.empty()) throw ShapeMismatch("second group count does not match k");
      std::vector<LTermPtr> ys;
      for (size_t i = 0; i < k; ++i) {
        const LTermPtr& e = outer[i];
        if (n[i + 1] == 1) {
          if (!e->is_app()) throw ShapeMismatch("element is not an application");
          ys.push_back(e->left());
          std::vector<LTermPtr> zi = ungroup(e->right(), 1);
          zs.insert(zs.end(), zi.begin(), zi.end());
        } else {
          if (!e->is_app()) throw ShapeMismatch("element is not an application");
          ys.push_back(e->left());
          std::vector<LTermPtr> zi = ungroup(e->right(), n[i + 1]);
          zs.insert(zs.end(), zi.begin(), zi.end());
        }
        if (ys.back()->is_tuple()) throw ShapeMismatch("yi must not be a tuple");
      }
      LTermPtr redex = LTerm::app(LTerm::labelled(Sym::S, n), t0, LTerm::tuple(ys), LTerm::tuple(zs));
      Verdict v = s_cond(redex, 9);
      if (v == Verdict::Unknown) throw ConditionUnknown("phi could not be decided within fuel");
      if (v == Verdict::No) throw PreconditionViolated("phi fails for the regrouping");
      return redex;
    }
    default:
      throw ShapeMismatch("unknown a-redex form");
  }
}

Verdict SEngine::a_redex_check(const LTermPtr& tp, const LTermPtr& t) {
  Verdict result = Verdict::No;
  for (const Position& p : lterm_positions(tp)) {
    LTermPtr r;
    try {
      r = lsubterm_at(t, p);
      if (!equal(lreplace_at(tp, p, r), t)) continue;
    } catch (const PositionError&) {
      continue;
    }
    Verdict v = root_a_step(lsubterm_at(tp, p), r);
    if (v == Verdict::Yes) return Verdict::Yes;
    if (v == Verdict::Unknown) result = Verdict::Unknown;
  }
  return result;
}

bool SEngine::replay(const LTrace& tr, LTermPtr* end) {
  LTermPtr cur = tr.start;
  try {
    for (const LStep& st : tr.steps) {
      switch (st.kind) {
        case LStepKind::S: {
          LTermPtr next = s_contract(cur, st.pos, st.rule);
          if (st.to && !equal(next, st.to)) return false;
          cur = next;
          break;
        }
        case LStepKind::I: {
          if (st.forward) {
            LTermPtr next = i_contract(cur, st.pos, st.rule);
            if (st.to && !equal(next, st.to)) return false;
            cur = next;
          } else {
            if (!st.to) return false;
            if (!equal(i_contract(st.to, st.pos, st.rule), cur)) return false;
            cur = st.to;
          }
          break;
        }
        case LStepKind::A: {
          if (!st.to) return false;
          LTermPtr r = lsubterm_at(st.to, st.pos);
          if (!equal(lreplace_at(cur, st.pos, r), st.to)) return false;
          if (root_a_step(lsubterm_at(cur, st.pos), r) != Verdict::Yes) return false;
          cur = st.to;
          break;
        }
      }
    }
  } catch (const ClcError&) {
    return false;
  }
  if (end) *end = cur;
  return true;
}

std::optional<LTrace> SEngine::s_path(const LTermPtr& t, const LTermPtr& goal) {
  const SGraph& g = s_reducts_all(t);
  int target = -1;
  for (size_t i = 0; i < g.nodes.size(); ++i)
    if (equal(g.nodes[i], goal)) { target = static_cast<int>(i); break; }
  if (target < 0) return std::nullopt;
  std::vector<std::vector<size_t>> adj(g.nodes.size());
  for (size_t e = 0; e < g.edges.size(); ++e) adj[g.edges[e].from].push_back(e);
  std::vector<int> pred_edge(g.nodes.size(), -2);
  pred_edge[0] = -1;
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    int id = frontier.front();
    frontier.pop_front();
    if (id == target) break;
    for (size_t e : adj[id]) {
      int to = g.edges[e].to;
      if (pred_edge[to] == -2) {
        pred_edge[to] = static_cast<int>(e);
        frontier.push_back(to);
      }
    }
  }
  if (pred_edge[target] == -2) return std::nullopt;
  std::vector<LStep> rev;
  int cur = target;
  while (pred_edge[cur] >= 0) {
    const SGraph::Edge& e = g.edges[pred_edge[cur]];
    rev.push_back({LStepKind::S, e.pos, e.rule, true, g.nodes[e.to]});
    cur = e.from;
  }
  std::reverse(rev.begin(), rev.end());
  return LTrace{t, std::move(rev)};
}

}  // namespace clc
