#include "clc/systems.hpp"

#include <algorithm>
#include <deque>

namespace clc {

const char* system_name(SystemId sys) {
  switch (sys) {
    case SystemId::CLC0: return "CLC0";
    case SystemId::CLC: return "CLC";
    case SystemId::CLCPLUS: return "CLC+";
    case SystemId::R: return "R";
  }
  return "?";
}

std::optional<SystemId> system_from_name(const std::string& name) {
  if (name == "CLC0" || name == "clc0") return SystemId::CLC0;
  if (name == "CLC" || name == "clc") return SystemId::CLC;
  if (name == "CLC+" || name == "clc+" || name == "CLCPLUS" || name == "clcplus")
    return SystemId::CLCPLUS;
  if (name == "R" || name == "r") return SystemId::R;
  return std::nullopt;
}

namespace {

enum class Cond : uint8_t {
  None,
  EqXY,        // x = y in the system's own equality (level-stratified)
  EqZF,        // z =_CLC F
  NeqZFEqXY,   // z !=_CLC F  and  x =_CLC y
};

struct Rule {
  TermPtr lhs, rhs;
  Cond cond;
};

struct RuleTable {
  std::vector<Rule> rules;  // index 0 <-> rule id 1
};

const RuleTable& rule_table(SystemId sys) {
  static const RuleTable clc0 = {{
      {parse_term("C T x y"), parse_term("x"), Cond::None},
      {parse_term("C F x y"), parse_term("y"), Cond::None},
      {parse_term("C z x x"), parse_term("x"), Cond::None},
      {parse_term("K x y"), parse_term("x"), Cond::None},
      {parse_term("S x y z"), parse_term("x z (y z)"), Cond::None},
  }};
  static const RuleTable clc = {{
      {parse_term("C T x y"), parse_term("x"), Cond::None},
      {parse_term("C F x y"), parse_term("y"), Cond::None},
      {parse_term("C z x y"), parse_term("x"), Cond::EqXY},
      {parse_term("K x y"), parse_term("x"), Cond::None},
      {parse_term("S x y z"), parse_term("x z (y z)"), Cond::None},
  }};
  static const RuleTable clcplus = {{
      {parse_term("C T x y"), parse_term("x"), Cond::None},
      {parse_term("C F x y"), parse_term("y"), Cond::None},
      {parse_term("C z x y"), parse_term("x"), Cond::EqXY},
      {parse_term("K x y"), parse_term("x"), Cond::None},
      {parse_term("S x y z"), parse_term("x z (y z)"), Cond::None},
      {parse_term("C z x y"), parse_term("y"), Cond::EqXY},
  }};
  static const RuleTable r = {{
      {parse_term("C T x y"), parse_term("x"), Cond::None},
      {parse_term("C z x y"), parse_term("y"), Cond::EqZF},
      {parse_term("C z x y"), parse_term("x"), Cond::NeqZFEqXY},
      {parse_term("K x y"), parse_term("x"), Cond::None},
      {parse_term("S x y z"), parse_term("x z (y z)"), Cond::None},
  }};
  switch (sys) {
    case SystemId::CLC0: return clc0;
    case SystemId::CLC: return clc;
    case SystemId::CLCPLUS: return clcplus;
    case SystemId::R: return r;
  }
  return clc0;
}

const TermPtr& const_F() {
  static const TermPtr f = Term::constant(Sym::F);
  return f;
}

void collect_positions(const TermPtr& t, Position& cur, std::vector<Position>& out) {
  out.push_back(cur);
  if (t->is_app()) {
    cur.push_back(0);
    collect_positions(t->left(), cur, out);
    cur.back() = 1;
    collect_positions(t->right(), cur, out);
    cur.pop_back();
  }
}

// Pre-order positions: the first redex hit in this order is the
// leftmost-outermost one.
std::vector<Position> all_positions(const TermPtr& t) {
  std::vector<Position> out;
  Position cur;
  collect_positions(t, cur, out);
  return out;
}

void collect_subterms(const TermPtr& t,
                      std::unordered_set<TermPtr, TermHash, TermEq>& out) {
  if (!out.insert(t).second) return;
  if (t->is_app()) {
    collect_subterms(t->left(), out);
    collect_subterms(t->right(), out);
  }
}

}  // namespace

int RewriteEngine::rule_count(SystemId sys) const {
  return static_cast<int>(rule_table(sys).rules.size());
}

std::vector<int> ReductionGraph::sinks() const {
  std::vector<bool> has_out(nodes.size(), false);
  for (const auto& e : edges) has_out[e.from] = true;
  std::vector<int> out;
  for (size_t i = 0; i < nodes.size(); ++i)
    if (!has_out[i]) out.push_back(static_cast<int>(i));
  return out;
}

size_t RewriteEngine::EqKeyHash::operator()(const EqKey& k) const {
  size_t h = k.a->hash() * 1000003u + k.b->hash();
  h = h * 31 + static_cast<size_t>(k.sys);
  h = h * 31 + static_cast<size_t>(k.levels);
  return h;
}

bool RewriteEngine::EqKeyEq::operator()(const EqKey& x, const EqKey& y) const {
  return x.sys == y.sys && x.levels == y.levels && equal(x.a, y.a) && equal(x.b, y.b);
}

RewriteEngine::CondVerdict RewriteEngine::eval_condition(SystemId sys, int rule,
                                                         const Substitution& sigma,
                                                         int cond_levels) {
  const Rule& r = rule_table(sys).rules[rule - 1];
  switch (r.cond) {
    case Cond::None:
      return {Verdict::Yes, 0};
    case Cond::EqXY: {
      if (cond_levels <= 0) return {Verdict::Unknown, 0};
      EqResult e = eq_levels(sys, sigma.bindings.at("x"), sigma.bindings.at("y"),
                             cond_levels - 1);
      return {e.verdict, e.verdict == Verdict::Yes ? e.level + 1 : 0};
    }
    case Cond::EqZF: {
      EqResult e = eq_levels(SystemId::CLC, sigma.bindings.at("z"), const_F(),
                             fuel_.max_level - 1);
      return {e.verdict, 1};
    }
    case Cond::NeqZFEqXY: {
      EqResult ez = eq_levels(SystemId::CLC, sigma.bindings.at("z"), const_F(),
                              fuel_.max_level - 1);
      if (ez.verdict == Verdict::Unknown) return {Verdict::Unknown, 0};
      if (ez.verdict == Verdict::Yes) return {Verdict::No, 0};
      EqResult e = eq_levels(SystemId::CLC, sigma.bindings.at("x"), sigma.bindings.at("y"),
                             fuel_.max_level - 1);
      return {e.verdict, 1};
    }
  }
  return {Verdict::Unknown, 0};
}

std::vector<RedexHit> RewriteEngine::redexes_at_levels(SystemId sys, const TermPtr& t,
                                                       int cond_levels, CondReport* report) {
  std::vector<RedexHit> hits;
  const RuleTable& table = rule_table(sys);
  for (const Position& p : all_positions(t)) {
    TermPtr sub = subterm_at(t, p);
    for (size_t i = 0; i < table.rules.size(); ++i) {
      auto sigma = match_pattern(table.rules[i].lhs, sub);
      if (!sigma) continue;
      CondVerdict cv = eval_condition(sys, static_cast<int>(i) + 1, *sigma, cond_levels);
      if (cv.verdict == Verdict::Yes) {
        hits.push_back({p, static_cast<int>(i) + 1, cv.level});
      } else if (cv.verdict == Verdict::Unknown && report) {
        report->unknown.push_back({p, static_cast<int>(i) + 1});
      }
    }
  }
  return hits;
}

std::vector<RedexHit> RewriteEngine::redexes(SystemId sys, const TermPtr& t,
                                             CondReport* report) {
  return redexes_at_levels(sys, t, fuel_.max_level, report);
}

TermPtr RewriteEngine::contract(SystemId sys, const TermPtr& t, const Position& p, int rule) {
  const RuleTable& table = rule_table(sys);
  if (rule < 1 || rule > static_cast<int>(table.rules.size()))
    throw NotARedex("rule id out of range");
  TermPtr sub = subterm_at(t, p);
  auto sigma = match_pattern(table.rules[rule - 1].lhs, sub);
  if (!sigma) throw NotARedex("pattern does not match at position");
  CondVerdict cv = eval_condition(sys, rule, *sigma, fuel_.max_level);
  if (cv.verdict == Verdict::Unknown)
    throw ConditionUnknown("rule condition could not be decided within fuel");
  if (cv.verdict == Verdict::No) throw NotARedex("rule condition fails");
  return replace_at(t, p, apply_subst(*sigma, table.rules[rule - 1].rhs));
}

RewriteEngine::ReductSet RewriteEngine::explore(SystemId sys, const TermPtr& t,
                                                int cond_levels, long node_budget) {
  ReductSet rs;
  rs.order.push_back(t);
  rs.parent.emplace(t, std::make_pair(-1, Step{}));
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    if (static_cast<long>(rs.order.size()) > node_budget) {
      rs.complete = false;
      break;
    }
    int id = frontier.front();
    frontier.pop_front();
    TermPtr cur = rs.order[id];
    CondReport report;
    for (const RedexHit& hit : redexes_at_levels(sys, cur, cond_levels, &report)) {
      TermPtr next = contract(sys, cur, hit.pos, hit.rule);
      if (next->size() > fuel_.max_term_size) {
        rs.complete = false;
        continue;
      }
      auto [it, inserted] =
          rs.parent.emplace(next, std::make_pair(id, Step{sys, hit.rule, hit.pos, hit.level}));
      if (inserted) {
        rs.order.push_back(next);
        frontier.push_back(static_cast<int>(rs.order.size()) - 1);
      }
    }
    if (report.any()) rs.complete = false;
  }
  return rs;
}

Trace RewriteEngine::trace_to(const ReductSet& rs, const TermPtr& start, const TermPtr& goal) {
  std::vector<Step> rev;
  TermPtr cur = goal;
  while (!equal(cur, start)) {
    const auto& [pred, step] = rs.parent.at(cur);
    rev.push_back(step);
    cur = rs.order[pred];
  }
  std::reverse(rev.begin(), rev.end());
  return Trace{start, std::move(rev)};
}

std::optional<JoinWitness> RewriteEngine::joinable(SystemId sys, const TermPtr& a,
                                                   const TermPtr& b) {
  int cl = fuel_.max_level - 1;
  ReductSet ra = explore(sys, a, cl, fuel_.max_steps);
  ReductSet rb = explore(sys, b, cl, fuel_.max_steps);
  // scan in BFS order so the common reduct found is close to `a`
  for (const TermPtr& n : ra.order) {
    if (rb.parent.count(n)) {
      return JoinWitness{n, trace_to(ra, a, n), trace_to(rb, b, n)};
    }
  }
  return std::nullopt;
}

EqResult RewriteEngine::eq_levels(SystemId sys, const TermPtr& a, const TermPtr& b,
                                  int cond_levels) {
  if (equal(a, b)) {
    EqResult r;
    r.verdict = Verdict::Yes;
    r.level = 0;
    r.join = JoinWitness{a, Trace{a, {}}, Trace{b, {}}};
    return r;
  }
  EqKey key{sys, cond_levels, a, b};
  if (auto it = eq_memo_.find(key); it != eq_memo_.end()) return it->second;

  EqResult result;
  ReductSet ra = explore(sys, a, cond_levels, fuel_.max_steps);
  ReductSet rb = explore(sys, b, cond_levels, fuel_.max_steps);
  TermPtr common;
  for (const TermPtr& n : ra.order) {
    if (rb.parent.count(n)) {
      common = n;
      break;
    }
  }
  if (common) {
    result.verdict = Verdict::Yes;
    result.join = JoinWitness{common, trace_to(ra, a, common), trace_to(rb, b, common)};
    int lvl = 0;
    for (const Step& s : result.join->left.steps) lvl = std::max(lvl, s.level);
    for (const Step& s : result.join->right.steps) lvl = std::max(lvl, s.level);
    result.level = lvl;
  } else {
    // Negative answers compare fully explored CLC reduction graphs: by
    // confluence of CLC, disjoint complete graphs mean the terms are not
    // convertible, in any of the four systems.
    bool no = false;
    if (sys == SystemId::CLC) {
      no = ra.complete && rb.complete;
    } else {
      ReductSet ca = explore(SystemId::CLC, a, cond_levels, fuel_.max_steps);
      ReductSet cb = explore(SystemId::CLC, b, cond_levels, fuel_.max_steps);
      if (ca.complete && cb.complete) {
        no = true;
        for (const TermPtr& n : ca.order) {
          if (cb.parent.count(n)) {  // joinable in CLC after all
            no = false;
            break;
          }
        }
      }
    }
    if (no) {
      result.verdict = Verdict::No;
      result.theorem_dependent = true;
    } else if (cond_levels >= 1) {
      if (auto conv = conversion_search_clc0(a, b)) {
        result.verdict = Verdict::Yes;
        bool conditional = false;
        for (const ConvStep& cs : conv->steps)
          if (cs.step.rule == 3) conditional = true;
        result.level = (sys != SystemId::CLC0 && conditional) ? 1 : 0;
        result.conversion = std::move(conv);
      }
    }
  }
  eq_memo_.emplace(key, result);
  return result;
}

EqResult RewriteEngine::eq(SystemId sys, const TermPtr& a, const TermPtr& b) {
  return eq_levels(sys, a, b, fuel_.max_level - 1);
}

std::optional<ConversionSequence> RewriteEngine::conversion_search_clc0(const TermPtr& a,
                                                                        const TermPtr& b) {
  if (equal(a, b)) return ConversionSequence{a, {}};

  // Filler pool for expansion steps: small subterms of the endpoints plus
  // the constants.
  std::unordered_set<TermPtr, TermHash, TermEq> pool_set;
  collect_subterms(a, pool_set);
  collect_subterms(b, pool_set);
  std::vector<TermPtr> pool;
  for (const TermPtr& t : pool_set)
    if (t->size() <= 7) pool.push_back(t);
  for (Sym s : {Sym::C, Sym::T, Sym::F, Sym::K, Sym::S}) {
    TermPtr c = Term::constant(s);
    if (!pool_set.count(c)) pool.push_back(c);
  }

  struct Pred {
    TermPtr from;
    ConvStep step;
  };
  std::unordered_map<TermPtr, Pred, TermHash, TermEq> parent;
  parent.emplace(a, Pred{nullptr, {}});
  std::deque<TermPtr> frontier{a};
  long dequeued = 0;

  auto visit = [&](const TermPtr& from, TermPtr next, ConvStep cs) -> bool {
    if (next->size() > fuel_.max_term_size) return false;
    if (parent.count(next)) return false;
    // the fuel also caps the visited set, keeping memory bounded
    if (static_cast<long>(parent.size()) >= fuel_.max_steps) return false;
    cs.to = next;
    parent.emplace(next, Pred{from, std::move(cs)});
    frontier.push_back(next);
    return equal(next, b);
  };

  bool found = false;
  while (!frontier.empty() && !found && dequeued < fuel_.max_steps) {
    TermPtr cur = frontier.front();
    frontier.pop_front();
    ++dequeued;
    // forward steps
    for (const RedexHit& hit : redexes_at_levels(SystemId::CLC0, cur, 0, nullptr)) {
      TermPtr next = contract(SystemId::CLC0, cur, hit.pos, hit.rule);
      if (visit(cur, next, ConvStep{Step{SystemId::CLC0, hit.rule, hit.pos, 0}, true, nullptr})) {
        found = true;
        break;
      }
    }
    if (found) break;
    // backward steps: wrap some subterm into a CLC0 redex contracting back to it
    for (const Position& p : all_positions(cur)) {
      TermPtr sub = subterm_at(cur, p);
      auto expand = [&](TermPtr redex, int rule) -> bool {
        return visit(cur, replace_at(cur, p, std::move(redex)),
                     ConvStep{Step{SystemId::CLC0, rule, p, 0}, false, nullptr});
      };
      for (const TermPtr& g : pool) {
        if (found) break;
        TermPtr c = Term::constant(Sym::C);
        found = expand(Term::app(c, Term::constant(Sym::T), sub, g), 1) ||
                expand(Term::app(c, Term::constant(Sym::F), g, sub), 2) ||
                expand(Term::app(c, g, sub, sub), 3) ||
                expand(Term::app(Term::constant(Sym::K), sub, g), 4);
      }
      if (found) break;
      // S-expansion needs the shape x z (y z)
      if (sub->is_app() && sub->left()->is_app() && sub->right()->is_app() &&
          equal(sub->left()->right(), sub->right()->right())) {
        found = expand(Term::app(Term::constant(Sym::S), sub->left()->left(),
                                 sub->right()->left(), sub->left()->right()),
                       5);
        if (found) break;
      }
    }
  }
  if (!found && !parent.count(b)) return std::nullopt;

  std::vector<ConvStep> rev;
  TermPtr cur = b;
  while (!equal(cur, a)) {
    const Pred& pr = parent.at(cur);
    rev.push_back(pr.step);
    cur = pr.from;
  }
  std::reverse(rev.begin(), rev.end());
  return ConversionSequence{a, std::move(rev)};
}

NormalizeResult RewriteEngine::normalize(SystemId sys, const TermPtr& t) {
  NormalizeResult res;
  res.trace.start = t;
  TermPtr cur = t;
  bool aborted = false;
  while (static_cast<long>(res.trace.steps.size()) < fuel_.max_steps) {
    CondReport report;
    std::vector<RedexHit> hits = redexes(sys, cur, &report);
    if (hits.empty()) {
      res.complete = !report.any() && !aborted;
      break;
    }
    const RedexHit& hit = hits.front();  // pre-order scan: leftmost-outermost
    TermPtr next = contract(sys, cur, hit.pos, hit.rule);
    if (next->size() > fuel_.max_term_size) {
      aborted = true;
      break;
    }
    res.trace.steps.push_back({sys, hit.rule, hit.pos, hit.level});
    cur = next;
  }
  res.term = cur;
  return res;
}

ReductionGraph RewriteEngine::reduction_graph(SystemId sys, const TermPtr& t, long max_nodes) {
  if (max_nodes < 0) max_nodes = fuel_.max_steps;
  ReductionGraph g;
  std::unordered_map<TermPtr, int, TermHash, TermEq> ids;
  g.nodes.push_back(t);
  ids.emplace(t, 0);
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    int id = frontier.front();
    frontier.pop_front();
    TermPtr cur = g.nodes[id];
    CondReport report;
    for (const RedexHit& hit : redexes(sys, cur, &report)) {
      TermPtr next = contract(sys, cur, hit.pos, hit.rule);
      if (next->size() > fuel_.max_term_size) {
        g.complete = false;
        continue;
      }
      auto it = ids.find(next);
      int nid;
      if (it == ids.end()) {
        if (static_cast<long>(g.nodes.size()) >= max_nodes) {
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
      g.edges.push_back({id, nid, Step{sys, hit.rule, hit.pos, hit.level}});
    }
    if (report.any()) g.complete = false;
  }
  return g;
}

bool RewriteEngine::is_complete_normal_form(SystemId sys, const TermPtr& t) {
  CondReport report;
  return redexes(sys, t, &report).empty() && !report.any();
}

bool RewriteEngine::replay(const Trace& tr, TermPtr* end) {
  TermPtr cur = tr.start;
  try {
    for (const Step& s : tr.steps) cur = contract(s.sys, cur, s.pos, s.rule);
  } catch (const ClcError&) {
    return false;
  }
  if (end) *end = cur;
  return true;
}

bool RewriteEngine::replay(const ConversionSequence& conv, TermPtr* end) {
  TermPtr cur = conv.start;
  try {
    for (const ConvStep& cs : conv.steps) {
      if (cs.forward) {
        TermPtr next = contract(cs.step.sys, cur, cs.step.pos, cs.step.rule);
        if (cs.to && !equal(next, cs.to)) return false;
        cur = next;
      } else {
        if (!cs.to) return false;
        if (!equal(contract(cs.step.sys, cs.to, cs.step.pos, cs.step.rule), cur)) return false;
        cur = cs.to;
      }
    }
  } catch (const ClcError&) {
    return false;
  }
  if (end) *end = cur;
  return true;
}

std::vector<TermPtr> RewriteEngine::conversion_chain(const ConversionSequence& conv) {
  std::vector<TermPtr> chain{conv.start};
  TermPtr cur = conv.start;
  for (const ConvStep& cs : conv.steps) {
    if (cs.forward) {
      cur = contract(cs.step.sys, cur, cs.step.pos, cs.step.rule);
      if (cs.to && !equal(cur, cs.to))
        throw PreconditionViolated("conversion step does not replay to recorded term");
    } else {
      if (!cs.to) throw PreconditionViolated("backward conversion step lacks target term");
      if (!equal(contract(cs.step.sys, cs.to, cs.step.pos, cs.step.rule), cur))
        throw PreconditionViolated("backward conversion step does not replay");
      cur = cs.to;
    }
    chain.push_back(cur);
  }
  return chain;
}

}  // namespace clc
