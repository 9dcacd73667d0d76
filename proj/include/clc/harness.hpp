#pragma once

#include <random>

#include "clc/simulation.hpp"

namespace clc {

struct GenConfig {
  uint64_t seed = 1;
  int max_size = 25;        // node-count cap on generated terms
  int max_expansions = 8;   // conversion length for gen_convertible_to_F
  int var_weight = 1;       // weight of the variable atom against one constant
};

// Deterministic random terms, labelled terms and CLC0 conversions.
class Generator {
 public:
  explicit Generator(const GenConfig& cfg = {}) : cfg_(cfg), rng_(cfg.seed) {}

  const GenConfig& config() const { return cfg_; }

  TermPtr term(int max_size);
  LTermPtr lterm(int max_size);

  // Random walk of CLC0 expansions and contractions starting from F; the
  // returned sequence replays from the reached term q back to F.
  ConversionSequence convertible_to_F(RewriteEngine& eng);

  uint64_t below(uint64_t n);  // uniform in [0, n)
  bool chance(int percent);

 private:
  GenConfig cfg_;
  std::mt19937_64 rng_;
};

// Exhaustive, duplicate-free, ordered by atom count (an application of two
// atoms has size 2).
std::vector<TermPtr> enumerate_terms(int max_size, const std::vector<TermPtr>& alphabet);
// Labelled variant; when with_tuples, also builds 2-tuples of smaller terms.
std::vector<LTermPtr> enumerate_lterms(int max_size, const std::vector<LTermPtr>& alphabet,
                                       bool with_tuples);

struct SuiteReport {
  std::string name;
  long passed = 0;
  long failed = 0;
  long unknown = 0;  // fuel exhaustion / undecided conditions (soft)
  long measure = 0;  // suite-specific tally (e.g. sampled s-steps)
  std::vector<std::string> failures;  // replayable witnesses, capped
  bool ok() const { return failed == 0; }
};

struct SuiteConfig {
  GenConfig gen;
  long cases = 200;
  int size_bound = 5;       // enumeration bound where applicable (atom count)
  long target_measure = 0;  // stop early once measure reaches this (0 = off)
};

const std::vector<std::string>& suite_names();

// name in suite_names(); throws std::invalid_argument otherwise.
SuiteReport run_suite(const std::string& name, Simulator& sim, const SuiteConfig& cfg);

}  // namespace clc
