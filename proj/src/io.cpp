#include "clc/io.hpp"

#include <sstream>

namespace clc {

namespace {

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

const char* lkind_name(LStepKind k) {
  switch (k) {
    case LStepKind::S: return "s";
    case LStepKind::I: return "i";
    default: return "a";
  }
}

LStepKind lkind_from(const std::string& s) {
  if (s == "s") return LStepKind::S;
  if (s == "i") return LStepKind::I;
  if (s == "a") return LStepKind::A;
  throw ParseError("unknown step kind: " + s, 0);
}

}  // namespace

json step_to_json(const Step& s) {
  return json{{"sys", system_name(s.sys)},
              {"rule", s.rule},
              {"pos", s.pos},
              {"level", s.level}};
}

Step step_from_json(const json& j) {
  std::string name = j.value("sys", "CLC0");
  auto sys = system_from_name(name);
  if (!sys) throw ParseError("unknown system: " + name, 0);
  return {*sys, j.at("rule").get<int>(), j.at("pos").get<Position>(),
          j.value("level", 0)};
}

json trace_to_json(const Trace& t) {
  json steps = json::array();
  for (const Step& s : t.steps) steps.push_back(step_to_json(s));
  return json{{"start", format_term(t.start)}, {"steps", std::move(steps)}};
}

Trace trace_from_json(const json& j) {
  Trace t{parse_term(j.at("start").get<std::string>()), {}};
  for (const json& s : j.at("steps")) t.steps.push_back(step_from_json(s));
  return t;
}

json conversion_to_json(const ConversionSequence& c) {
  json steps = json::array();
  for (const ConvStep& s : c.steps) {
    json e = step_to_json(s.step);
    e["dir"] = s.forward ? "+" : "-";
    if (s.to) e["to"] = format_term(s.to);
    steps.push_back(std::move(e));
  }
  return json{{"start", format_term(c.start)}, {"steps", std::move(steps)}};
}

ConversionSequence conversion_from_json(const json& j) {
  ConversionSequence c{parse_term(j.at("start").get<std::string>()), {}};
  for (const json& e : j.at("steps")) {
    ConvStep s{step_from_json(e), e.value("dir", "+") == "+", nullptr};
    if (e.contains("to")) s.to = parse_term(e.at("to").get<std::string>());
    c.steps.push_back(std::move(s));
  }
  return c;
}

json ltrace_to_json(const LTrace& t) {
  json steps = json::array();
  for (const LStep& s : t.steps) {
    json e{{"kind", lkind_name(s.kind)},
           {"pos", s.pos},
           {"rule", s.rule},
           {"dir", s.forward ? "+" : "-"}};
    if (s.to) e["to"] = format_lterm(s.to);
    steps.push_back(std::move(e));
  }
  return json{{"start", format_lterm(t.start)}, {"steps", std::move(steps)}};
}

LTrace ltrace_from_json(const json& j) {
  LTrace t{parse_lterm(j.at("start").get<std::string>()), {}};
  for (const json& e : j.at("steps")) {
    LStep s{lkind_from(e.at("kind").get<std::string>()), e.at("pos").get<Position>(),
            e.value("rule", 0), e.value("dir", "+") == "+", nullptr};
    if (e.contains("to")) s.to = parse_lterm(e.at("to").get<std::string>());
    t.steps.push_back(std::move(s));
  }
  return t;
}

json join_to_json(const JoinWitness& w) {
  return json{{"common", format_term(w.common)},
              {"left", trace_to_json(w.left)},
              {"right", trace_to_json(w.right)}};
}

json suite_report_to_json(const SuiteReport& r) {
  return json{{"suite", r.name},     {"passed", r.passed},   {"failed", r.failed},
              {"unknown", r.unknown}, {"measure", r.measure}, {"failures", r.failures}};
}

std::string graph_to_dot(const ReductionGraph& g) {
  std::ostringstream os;
  os << "digraph reduction {\n  rankdir=LR;\n";
  for (size_t i = 0; i < g.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << escape_dot(format_term(g.nodes[i])) << "\"];\n";
  for (const ReductionGraph::Edge& e : g.edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=\"r" << e.step.rule << "\"];\n";
  if (!g.complete) os << "  incomplete [shape=plaintext, label=\"(truncated)\"];\n";
  os << "}\n";
  return os.str();
}

std::string sgraph_to_dot(const SGraph& g) {
  std::ostringstream os;
  os << "digraph sreduction {\n  rankdir=LR;\n";
  for (size_t i = 0; i < g.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << escape_dot(format_lterm(g.nodes[i])) << "\"];\n";
  for (const SGraph::Edge& e : g.edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=\"r" << e.rule << "\"];\n";
  if (!g.complete) os << "  incomplete [shape=plaintext, label=\"(truncated)\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace clc
