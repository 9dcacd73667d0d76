#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "clc/io.hpp"

using namespace clc;

namespace {

std::string read_stdin() {
  std::ostringstream os;
  os << std::cin.rdbuf();
  return os.str();
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "unknown";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conditional term rewriting laboratory for CLC and its labelled system"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string system_name_opt = "CLC";
  Fuel fuel;
  uint64_t seed = 1;
  bool as_json = false;
  app.add_option("--system", system_name_opt, "CLC0, CLC, CLCPLUS or R")->capture_default_str();
  app.add_option("--fuel-steps", fuel.max_steps, "search-node budget")->capture_default_str();
  app.add_option("--fuel-size", fuel.max_term_size, "term size cap")->capture_default_str();
  app.add_option("--fuel-level", fuel.max_level, "condition recursion depth")->capture_default_str();
  app.add_option("--seed", seed, "generator seed")->capture_default_str();
  app.add_flag("--json", as_json, "JSON output");

  std::string term_a, term_b, suite, graph_term;
  bool labelled_graph = false;
  long cases = 200;
  int size_bound = 5;
  long target_measure = 0;
  int gen_max_size = 25, gen_expansions = 8;

  CLI::App* reduce = app.add_subcommand("reduce", "one leftmost-outermost contraction");
  reduce->add_option("term", term_a)->required();
  CLI::App* normalize = app.add_subcommand("normalize", "reduce to normal form");
  normalize->add_option("term", term_a)->required();
  CLI::App* join = app.add_subcommand("join", "search for a common reduct");
  join->add_option("a", term_a)->required();
  join->add_option("b", term_b)->required();
  CLI::App* eqc = app.add_subcommand("eq", "bounded equality oracle");
  eqc->add_option("a", term_a)->required();
  eqc->add_option("b", term_b)->required();
  CLI::App* labsim = app.add_subcommand(
      "label-simulate", "lift a CLC0 conversion to F through the labelled system (JSON on stdin)");
  CLI::App* extract = app.add_subcommand(
      "extract-to-f", "turn a CLC0 conversion to F into a CLC reduction (JSON on stdin)");
  CLI::App* checkstd = app.add_subcommand("check-standard", "standardness of a labelled term");
  checkstd->add_option("lterm", term_a)->required();
  CLI::App* suitec = app.add_subcommand("suite", "run a property suite");
  suitec->add_option("name", suite)->required();
  suitec->add_option("--cases", cases)->capture_default_str();
  suitec->add_option("--size-bound", size_bound)->capture_default_str();
  suitec->add_option("--target-measure", target_measure)->capture_default_str();
  suitec->add_option("--gen-max-size", gen_max_size)->capture_default_str();
  suitec->add_option("--gen-expansions", gen_expansions)->capture_default_str();
  CLI::App* graph = app.add_subcommand("graph", "DOT export of the bounded reduction graph");
  graph->add_option("term", graph_term)->required();
  graph->add_flag("--labelled", labelled_graph, "treat input as a labelled term (s-reduction)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto sys = system_from_name(system_name_opt);
  if (!sys) {
    std::cerr << "unknown system: " << system_name_opt << "\n";
    return 2;
  }

  try {
    RewriteEngine eng(fuel);
    SEngine se(eng);
    Simulator sim(se);

    if (reduce->parsed()) {
      TermPtr t = parse_term(term_a);
      CondReport rep;
      std::vector<RedexHit> hits = eng.redexes(*sys, t, &rep);
      if (hits.empty()) {
        if (as_json)
          std::cout << json{{"term", format_term(t)}, {"result", nullptr},
                            {"unknown_conditions", rep.unknown.size()}} << "\n";
        else
          std::cout << format_term(t) << "  (no redex"
                    << (rep.any() ? ", some conditions unknown" : "") << ")\n";
        return 0;
      }
      TermPtr r = eng.contract(*sys, t, hits[0].pos, hits[0].rule);
      if (as_json)
        std::cout << json{{"term", format_term(t)},
                          {"rule", hits[0].rule},
                          {"pos", hits[0].pos},
                          {"level", hits[0].level},
                          {"result", format_term(r)}} << "\n";
      else
        std::cout << format_term(r) << "\n";
    } else if (normalize->parsed()) {
      NormalizeResult res = eng.normalize(*sys, parse_term(term_a));
      if (as_json) {
        json j = trace_to_json(res.trace);
        j["result"] = format_term(res.term);
        j["complete"] = res.complete;
        std::cout << j << "\n";
      } else {
        std::cout << format_term(res.term) << "  (" << res.trace.steps.size() << " steps, "
                  << (res.complete ? "complete" : "incomplete") << ")\n";
      }
    } else if (join->parsed()) {
      auto jw = eng.joinable(*sys, parse_term(term_a), parse_term(term_b));
      if (!jw) {
        std::cout << (as_json ? "null\n" : "no common reduct found at this fuel\n");
        return 1;
      }
      if (as_json)
        std::cout << join_to_json(*jw) << "\n";
      else
        std::cout << format_term(jw->common) << "  (" << jw->left.steps.size() << " + "
                  << jw->right.steps.size() << " steps)\n";
    } else if (eqc->parsed()) {
      EqResult r = eng.eq(*sys, parse_term(term_a), parse_term(term_b));
      if (as_json) {
        json j{{"verdict", verdict_name(r.verdict)}, {"level", r.level},
               {"theorem_dependent", r.theorem_dependent}};
        if (r.join) j["join"] = join_to_json(*r.join);
        if (r.conversion) j["conversion"] = conversion_to_json(*r.conversion);
        std::cout << j << "\n";
      } else {
        std::cout << verdict_name(r.verdict) << "\n";
      }
    } else if (labsim->parsed() || extract->parsed()) {
      ConversionSequence conv = conversion_from_json(json::parse(read_stdin()));
      if (extract->parsed()) {
        Trace out = sim.extract_reduction_to_F(conv);
        if (as_json)
          std::cout << trace_to_json(out) << "\n";
        else
          std::cout << format_term(out.start) << "  ->*_CLC  F  in " << out.steps.size()
                    << " steps\n";
      } else {
        std::vector<TermPtr> chain = eng.conversion_chain(conv);
        LTermPtr t = SEngine::F1();
        json stages = json::array();
        stages.push_back(format_lterm(t));
        for (size_t i = chain.size() - 1; i > 0; --i) {
          const ConvStep& cs = conv.steps[i - 1];
          t = cs.forward ? sim.simulate_expansion(t, chain[i], cs.step, chain[i - 1]).result
                         : sim.simulate_contraction(t, chain[i], cs.step).result;
          stages.push_back(format_lterm(t));
          if (!as_json) std::cout << format_lterm(t) << "\n";
        }
        if (as_json) std::cout << json{{"stages", stages}} << "\n";
      }
    } else if (checkstd->parsed()) {
      LTermPtr t = parse_lterm(term_a);
      Verdict plain = se.is_standard(t);
      Verdict strong = se.is_strongly_standard(t);
      Verdict leads = se.leadsto_F1(t);
      if (as_json)
        std::cout << json{{"standard", verdict_name(plain)},
                          {"strongly_standard", verdict_name(strong)},
                          {"leadsto_F1", verdict_name(leads)}} << "\n";
      else
        std::cout << "standard: " << verdict_name(plain)
                  << "\nstrongly standard: " << verdict_name(strong)
                  << "\nleadsto F1: " << verdict_name(leads) << "\n";
    } else if (suitec->parsed()) {
      SuiteConfig cfg;
      cfg.gen.seed = seed;
      cfg.gen.max_size = gen_max_size;
      cfg.gen.max_expansions = gen_expansions;
      cfg.cases = cases;
      cfg.size_bound = size_bound;
      cfg.target_measure = target_measure;
      SuiteReport r = run_suite(suite, sim, cfg);
      if (as_json) {
        std::cout << suite_report_to_json(r) << "\n";
      } else {
        std::cout << r.name << ": passed=" << r.passed << " failed=" << r.failed
                  << " unknown=" << r.unknown << " measure=" << r.measure << "\n";
        for (const std::string& f : r.failures) std::cout << "  FAIL " << f << "\n";
      }
      return r.ok() ? 0 : 1;
    } else if (graph->parsed()) {
      if (labelled_graph) {
        std::cout << sgraph_to_dot(se.s_reducts_all(parse_lterm(graph_term)));
      } else {
        std::cout << graph_to_dot(eng.reduction_graph(*sys, parse_term(graph_term)));
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ClcError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
