#include "stc/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace stc {

Verdict evaluate_query(const Scenario& s, const QueryExpression& q) {
  switch (q.evaluator) {
    case QueryExpression::Evaluator::Dstc:
      return dstc_eval(s, q.antecedent, q.consequent);
    case QueryExpression::Evaluator::Clause2:
      return dstc_eval_via_clause2(s, q.antecedent, q.consequent);
    case QueryExpression::Evaluator::Footnote:
      return lewis_alt_eval(s, q.antecedent, q.consequent);
    case QueryExpression::Evaluator::Frame:
      return frame_eval(s, q.antecedent, q.consequent,
                        LorentzBoost{q.frame_velocity});
    case QueryExpression::Evaluator::AnyFrame:
      return any_frame_eval(s, q.antecedent, q.consequent);
  }
  throw std::logic_error("unknown evaluator");
}

namespace {

std::string evaluator_label(const QueryExpression& q) {
  switch (q.evaluator) {
    case QueryExpression::Evaluator::Dstc: return "dstc";
    case QueryExpression::Evaluator::Clause2: return "clause2";
    case QueryExpression::Evaluator::Footnote: return "footnote";
    case QueryExpression::Evaluator::AnyFrame: return "anyframe";
    case QueryExpression::Evaluator::Frame:
      return "frame(" + to_string(q.frame_velocity) + ")";
  }
  return "?";
}

std::string name_or_coords(const Scenario& s, const SpacetimePoint& p) {
  std::string name = s.point_name_at(p);
  if (!name.empty()) return name;
  std::string out = "(" + to_string(p.t);
  for (const auto& x : p.x) out += ", " + to_string(x);
  return out + ")";
}

std::vector<std::string> region_names(const Scenario& s, const ConeRegion& r) {
  std::vector<std::string> out;
  for (const auto& apex : r.apices) out.push_back(name_or_coords(s, apex));
  return out;
}

int world_index(const std::vector<World>& worlds, const World& w) {
  auto it = std::find(worlds.begin(), worlds.end(), w);
  return it == worlds.end() ? -1 : static_cast<int>(it - worlds.begin());
}

std::string braced(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i)
    out += (i ? ", " : "") + names[i];
  return out + "}";
}

const char* kGreen = "\x1b[32m";
const char* kRed = "\x1b[31m";
const char* kReset = "\x1b[0m";

std::string verdict_word(bool truth, bool color) {
  if (!color) return truth ? "TRUE" : "FALSE";
  return std::string(truth ? kGreen : kRed) + (truth ? "TRUE" : "FALSE") +
         kReset;
}

}  // namespace

ExplainReport build_explain_report(const Scenario& s,
                                   const QueryExpression& q) {
  ExplainReport r;
  r.query_text = serialize_query(q);
  r.evaluator = evaluator_label(q);

  Verdict v = evaluate_query(s, q);
  r.truth = v.truth;
  r.vacuous = v.vacuous;

  std::vector<World> phi = phi_worlds(s, q.antecedent);
  for (const auto& w : phi) {
    WorldLine line;
    for (std::size_t i = 0; i < s.variables.size(); ++i)
      line.assignment.emplace_back(s.variables[i].id,
                                   s.variables[i].domain[w.values[i]]);
    for (const auto& p : diff_points(s, w))
      line.diff.push_back(name_or_coords(s, p));
    line.region = region_names(s, deviation_region(s, w));
    line.primary = world_index(v.primaries, w) >= 0;
    line.psi = eval(s, q.consequent, w);
    r.phi_worlds.push_back(std::move(line));
  }

  for (const auto& region : compute_support(s, q.antecedent).regions)
    r.support.push_back(region_names(s, region));

  for (const auto& wit : v.witnesses) {
    ExplainReport::Witness w;
    w.falsifying = world_index(phi, wit.falsifying);
    if (wit.dominating) w.dominating = world_index(phi, *wit.dominating);
    r.witnesses.push_back(w);
  }

  if (v.witness_velocity) {
    r.witness_velocity = to_string(*v.witness_velocity);
    if (v.witness_ordering) {
      std::vector<std::string> names;
      for (std::size_t idx : *v.witness_ordering)
        names.push_back(s.points[idx].name);
      r.witness_ordering = std::move(names);
    }
  }
  return r;
}

std::string render_text(const ExplainReport& r, bool color) {
  std::ostringstream os;
  os << "query: " << r.query_text << "\n";
  os << "evaluator: " << r.evaluator << "\n";
  os << "verdict: " << verdict_word(r.truth, color);
  if (r.vacuous) os << " (vacuous: no phi-worlds)";
  os << "\n";
  const bool frame_based =
      r.evaluator.rfind("frame", 0) == 0 || r.evaluator == "anyframe";
  const char* flag = frame_based       ? "most-similar"
                     : r.evaluator == "footnote" ? "witness"
                                                 : "primary";
  os << "phi-worlds (" << r.phi_worlds.size() << "):\n";
  for (std::size_t i = 0; i < r.phi_worlds.size(); ++i) {
    const WorldLine& w = r.phi_worlds[i];
    os << "  [" << i + 1 << "]";
    for (const auto& [id, val] : w.assignment) os << " " << id << "=" << val;
    os << " | diff " << braced(w.diff) << " | region " << braced(w.region);
    if (w.primary) os << " | " << flag;
    os << " | psi " << (w.psi ? "true" : "false") << "\n";
  }
  os << "support:";
  for (const auto& region : r.support) os << " " << braced(region);
  os << "\n";
  if (!r.witnesses.empty()) {
    os << "psi-falsifying phi-worlds:\n";
    for (const auto& w : r.witnesses) {
      os << "  [" << w.falsifying + 1 << "]";
      if (w.dominating)
        os << " dominated by more-similar psi-world [" << *w.dominating + 1
           << "]\n";
      else
        os << " with no more-similar psi-world\n";
    }
  }
  if (r.witness_velocity) {
    os << "witness frame: v = " << *r.witness_velocity;
    if (r.witness_ordering) {
      os << ", ordering ";
      for (std::size_t i = 0; i < r.witness_ordering->size(); ++i)
        os << (i ? " < " : "") << (*r.witness_ordering)[i];
    }
    os << "\n";
  }
  return os.str();
}

std::string render_json(const ExplainReport& r) {
  nlohmann::json j;
  j["schema"] = "stc.explain/1";
  j["query"] = r.query_text;
  j["evaluator"] = r.evaluator;
  j["truth"] = r.truth;
  j["vacuous"] = r.vacuous;
  j["phi_worlds"] = nlohmann::json::array();
  for (const auto& w : r.phi_worlds) {
    nlohmann::json jw;
    for (const auto& [id, val] : w.assignment) jw["assignment"][id] = val;
    if (w.assignment.empty()) jw["assignment"] = nlohmann::json::object();
    jw["diff"] = w.diff;
    jw["region"] = w.region;
    jw["primary"] = w.primary;
    jw["psi"] = w.psi;
    j["phi_worlds"].push_back(jw);
  }
  j["support"] = r.support;
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::json jw;
    jw["falsifying"] = w.falsifying;
    if (w.dominating) jw["dominating"] = *w.dominating;
    else jw["dominating"] = nullptr;
    j["witnesses"].push_back(jw);
  }
  if (r.witness_velocity) {
    j["witness_frame"]["velocity"] = *r.witness_velocity;
    if (r.witness_ordering) j["witness_frame"]["ordering"] = *r.witness_ordering;
  }
  return j.dump(2) + "\n";
}

FramesReport build_frames_report(const Scenario& s, const QueryExpression& q) {
  if (s.spatial_dim() != 1)
    throw std::invalid_argument("frames require 1+1");

  FramesReport r;
  r.query_text =
      "(" + to_string(q.antecedent) + ") => (" + to_string(q.consequent) + ")";
  Proposition negated = neg(q.consequent);
  r.negated_text =
      "(" + to_string(q.antecedent) + ") => (" + to_string(negated) + ")";

  std::vector<SpacetimePoint> pts;
  for (const auto& np : s.points) pts.push_back(np.location);

  for (const auto& fo : enumerate_orderings(pts)) {
    FramesReport::Row row;
    for (std::size_t idx : fo.order) row.ordering.push_back(s.points[idx].name);
    row.velocity = to_string(fo.velocity);
    row.truth =
        frame_eval(s, q.antecedent, q.consequent, LorentzBoost{fo.velocity})
            .truth;
    r.rows.push_back(std::move(row));
  }
  r.anyframe_truth = any_frame_eval(s, q.antecedent, q.consequent).truth;
  r.anyframe_negated_truth = any_frame_eval(s, q.antecedent, negated).truth;
  return r;
}

std::string render_text(const FramesReport& r, bool color) {
  std::ostringstream os;
  os << "query: " << r.query_text << "\n";
  os << "realizable orderings (" << r.rows.size() << "):\n";
  for (const auto& row : r.rows) {
    os << "  ";
    for (std::size_t i = 0; i < row.ordering.size(); ++i)
      os << (i ? " < " : "") << row.ordering[i];
    os << "  v=" << row.velocity << "  " << verdict_word(row.truth, color)
       << "\n";
  }
  os << "anyframe " << r.query_text << ": "
     << verdict_word(r.anyframe_truth, color) << "\n";
  os << "anyframe " << r.negated_text << ": "
     << verdict_word(r.anyframe_negated_truth, color) << "\n";
  return os.str();
}

}  // namespace stc
