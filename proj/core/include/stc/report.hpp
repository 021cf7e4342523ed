#ifndef STC_REPORT_HPP
#define STC_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stc/dsl.hpp"
#include "stc/semantics.hpp"

namespace stc {

/// Runs the evaluator a query selects.
Verdict evaluate_query(const Scenario& s, const QueryExpression& q);

// One phi-world row of an explain report. For the frame evaluators the
// `primary` flag marks the most-similar worlds in the witness frame instead.
struct WorldLine {
  std::vector<std::pair<std::string, std::string>> assignment;  // decl order
  std::vector<std::string> diff;    // point names where it differs from actual
  std::vector<std::string> region;  // apex names of its deviation region
  bool primary = false;
  bool psi = false;
};

struct ExplainReport {
  std::string query_text;
  std::string evaluator;  // "dstc", "clause2", "footnote", "frame(v)", "anyframe"
  bool truth = true;
  bool vacuous = false;
  std::vector<WorldLine> phi_worlds;
  std::vector<std::vector<std::string>> support;  // apex names per region
  struct Witness {
    int falsifying = 0;  // index into phi_worlds
    std::optional<int> dominating;
  };
  std::vector<Witness> witnesses;
  std::optional<std::string> witness_velocity;          // anyframe, when true
  std::optional<std::vector<std::string>> witness_ordering;
};

ExplainReport build_explain_report(const Scenario& s, const QueryExpression& q);

std::string render_text(const ExplainReport& r, bool color);
/// Stable machine-readable form (schema "stc.explain/1").
std::string render_json(const ExplainReport& r);

// Frame-dependence table: one row per realizable time-ordering of the
// scenario points, plus the any-frame verdicts for the query and for its
// consequent-negated twin.
struct FramesReport {
  std::string query_text;
  std::string negated_text;
  struct Row {
    std::vector<std::string> ordering;  // point names, ascending boosted time
    std::string velocity;
    bool truth = false;
  };
  std::vector<Row> rows;
  bool anyframe_truth = false;
  bool anyframe_negated_truth = false;
};

FramesReport build_frames_report(const Scenario& s, const QueryExpression& q);

std::string render_text(const FramesReport& r, bool color);

}  // namespace stc

#endif
