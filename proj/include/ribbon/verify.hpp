#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/corpus.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

/// A reproducible failing (or rejected) instance.
struct Counterexample {
  std::string graph;  // .rg text
  std::string edges;  // "{a,b}", empty when the case is the whole graph
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Inputs outside the suite's preconditions (e.g. non-plane maps in a plane-only suite).
  std::size_t rejected = 0;
  bool passed = true;
  double seconds = 0.0;
  std::vector<Counterexample> counterexamples;
  /// Informational key/value lines (witness counts, rates).
  std::vector<std::pair<std::string, std::string>> info;
  std::size_t witnesses = 0;
};

struct VerificationReport {
  std::vector<SuiteResult> suites;

  bool ok() const;
  std::size_t total_cases() const;
  const SuiteResult* find(const std::string& name) const;
  std::string to_text() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t mutations = 1000;
  /// Required fraction of mutated bijections that the checker rejects.
  double mutation_threshold = 0.95;
  std::size_t max_counterexamples = 5;
};

/// Names of all suites, in the order verify() runs them.
const std::vector<std::string>& suite_names();

/// Runs one suite over `maps`. Throws PreconditionError on an unknown name.
SuiteResult run_suite(const std::string& name, const std::vector<RibbonGraph>& maps, const VerifyOptions& options = {});

/// Runs every suite; an empty corpus gives an empty report.
VerificationReport verify(const Corpus& corpus, const VerifyOptions& options = {});

}  // namespace ribbon
