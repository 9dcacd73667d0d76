#pragma once

#include <json.hpp>

#include <string>

#include "clc/clcs.hpp"
#include "clc/harness.hpp"

namespace clc {

using nlohmann::json;

json step_to_json(const Step& s);
Step step_from_json(const json& j);

json trace_to_json(const Trace& t);
Trace trace_from_json(const json& j);

json conversion_to_json(const ConversionSequence& c);
ConversionSequence conversion_from_json(const json& j);

json ltrace_to_json(const LTrace& t);
LTrace ltrace_from_json(const json& j);

json join_to_json(const JoinWitness& w);
json suite_report_to_json(const SuiteReport& r);

std::string graph_to_dot(const ReductionGraph& g);
std::string sgraph_to_dot(const SGraph& g);

}  // namespace clc
