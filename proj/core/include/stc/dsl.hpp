#ifndef STC_DSL_HPP
#define STC_DSL_HPP

#include <optional>
#include <string>
#include <vector>

#include "stc/proposition.hpp"
#include "stc/scenario.hpp"

namespace stc {

// A counterfactual query `<phi> => <psi>` plus the evaluator that should
// judge it. `=>` binds loosest; the default evaluator is dstc.
struct QueryExpression {
  enum class Evaluator { Dstc, Clause2, Footnote, Frame, AnyFrame };

  Proposition antecedent;
  Proposition consequent;
  Evaluator evaluator = Evaluator::Dstc;
  Rat frame_velocity = 0;  // meaningful for Evaluator::Frame only

  friend bool operator==(const QueryExpression&,
                         const QueryExpression&) = default;
};

struct NamedQuery {
  std::string name;
  QueryExpression query;

  friend bool operator==(const NamedQuery&, const NamedQuery&) = default;
};

// Parsed form of a .stc scenario file. Declaration order is preserved, so
// parse(serialize(doc)) == doc.
struct ScenarioDocument {
  Scenario scenario;
  std::vector<NamedQuery> queries;

  friend bool operator==(const ScenarioDocument&,
                         const ScenarioDocument&) = default;
};

struct Diagnostic {
  int line = 1;  // 1-based
  int col = 1;   // 1-based
  std::string message;
};

std::string to_string(const Diagnostic& d);

struct ParseResult {
  std::optional<ScenarioDocument> document;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return document.has_value(); }
};

struct QueryParseResult {
  std::optional<QueryExpression> query;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return query.has_value(); }
};

/// Parses a scenario file. On any error the document is absent and at least
/// one diagnostic with line/column is present; there is no partial success.
ParseResult parse_scenario(const std::string& text);

/// Parses a standalone query expression such as
/// `(a = +1) => (c = +1) @frame(1/2)`.
QueryParseResult parse_query(const std::string& text);

/// Canonical text form; round-trips through parse_scenario.
std::string serialize_scenario(const ScenarioDocument& doc);

/// Query-expression text in the same grammar parse_query accepts.
std::string serialize_query(const QueryExpression& q);

}  // namespace stc

#endif
