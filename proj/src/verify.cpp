#include "supsim/verify.hpp"

#include <cmath>
#include <limits>

#include "supsim/instance.hpp"
#include "supsim/view.hpp"

namespace supsim {

json CheckReport::to_json() const {
  json j;
  j["accepted"] = accepted;
  j["violations"] = json::array();
  for (const auto& v : violations)
    j["violations"].push_back({{"node", v.node}, {"reason", v.reason}});
  if (quality)
    j["quality"] = *quality;
  else
    j["quality"] = nullptr;
  return j;
}

CheckReport check_labeling(const Graph& g, const LclProblem& problem,
                           const Labeling& labels) {
  for (NodeId v : g.ids())
    if (!labels.count(v))
      throw ValidationError(problem.name + ": missing label for node " +
                            std::to_string(v));
  if (problem.format_check)
    for (NodeId v : g.ids()) {
      std::string reason = problem.format_check(g, v, labels.at(v));
      if (!reason.empty())
        throw ValidationError(problem.name + ": node " + std::to_string(v) + ": " +
                              reason);
    }

  // Each verdict may depend only on the radius-r ball around the node, so the
  // predicate receives the view plus labels restricted to view nodes.
  SupportedInstance inst(g, g.edges(), Mode::LOCAL);
  CheckReport report;
  report.accepted = true;
  for (NodeId v : g.ids()) {
    LocalView view = extract_view(inst, v, problem.radius, ViewOver::input);
    Labeling restricted;
    for (NodeId w : view.nodes) restricted[w] = labels.at(w);
    std::string reason = problem.predicate(g, view, restricted);
    if (!reason.empty()) {
      report.accepted = false;
      report.violations.push_back({v, reason});
    }
  }
  if (problem.quality) report.quality = problem.quality(g, labels);
  return report;
}

double approx_ratio(double optimum, double achieved) {
  if (optimum < 0 || achieved < 0)
    throw ParameterError("approx_ratio: values must be non-negative");
  if (achieved == 0)
    return optimum == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  double ratio = optimum / achieved;
  return ratio < 1.0 ? 1.0 : ratio;
}

}  // namespace supsim
