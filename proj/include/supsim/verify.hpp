#pragma once

#include "supsim/lcl.hpp"

namespace supsim {

struct Violation {
  NodeId node = 0;
  std::string reason;
};

struct CheckReport {
  bool accepted = false;
  std::vector<Violation> violations;
  std::optional<double> quality;

  json to_json() const;
};

// Evaluate the problem's predicate on every node's labeled radius-r view of
// g. Missing labels and labels outside the alphabet raise ValidationError;
// rule violations are collected, not thrown.
CheckReport check_labeling(const Graph& g, const LclProblem& problem,
                           const Labeling& labels);

// optimum / achieved for maximization problems; >= 1 when achieved is
// positive, +infinity when achieved is 0 and the optimum is not.
double approx_ratio(double optimum, double achieved);

}  // namespace supsim
