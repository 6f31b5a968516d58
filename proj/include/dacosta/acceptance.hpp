#ifndef DACOSTA_ACCEPTANCE_HPP
#define DACOSTA_ACCEPTANCE_HPP

#include <ostream>
#include <string>
#include <vector>

#include "dacosta/algebra.hpp"

namespace dacosta {

struct AcceptanceOptions {
  std::string corpus_dir;       // empty: the shipped proofs directory
  EnumerationBounds bounds;     // search bounds for the exploratory search
  int max_worlds = 3;           // frame enumeration for the polarity sweep
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  bool exploratory = false;  // reported but never failing
  double seconds = 0.0;
  std::vector<std::string> details;
};

constexpr int kCriterionCount = 7;

/// Runs one criterion (1..7). Throws ParameterError for other ids.
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

/// Runs every criterion in order, printing each result as it completes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream& out);

/// "PASS  criterion 2: ... (0.004 s)" followed by indented details.
std::string render_result(const CriterionResult& r);

}  // namespace dacosta

#endif  // DACOSTA_ACCEPTANCE_HPP
