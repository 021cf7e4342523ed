#include "stc/scenario.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace stc {

int Scenario::variable_index(const std::string& id) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i].id == id) return static_cast<int>(i);
  return -1;
}

int Scenario::point_index(const std::string& name) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].name == name) return static_cast<int>(i);
  return -1;
}

const SpacetimePoint& Scenario::location_of(const EventVariable& v) const {
  int pi = point_index(v.point);
  if (pi < 0) throw std::invalid_argument("unknown point: " + v.point);
  return points[pi].location;
}

std::string Scenario::point_name_at(const SpacetimePoint& p) const {
  for (const auto& np : points)
    if (np.location == p) return np.name;
  return {};
}

const std::string& Scenario::value_of(const World& w,
                                      const std::string& id) const {
  int vi = variable_index(id);
  if (vi < 0) throw std::invalid_argument("unknown variable: " + id);
  return variables[vi].domain[w.values[vi]];
}

namespace {

int domain_index(const EventVariable& v, const std::string& value) {
  for (std::size_t i = 0; i < v.domain.size(); ++i)
    if (v.domain[i] == value) return static_cast<int>(i);
  return -1;
}

bool satisfies_one(const Scenario& s, const Constraint& c, const World& w) {
  if (c.kind == Constraint::Kind::Product) {
    int product = 1;
    for (const auto& id : c.scope) {
      const std::string& val = s.value_of(w, id);
      product *= (val == "+1") ? 1 : -1;
    }
    return product == c.product_target;
  }
  for (const auto& tuple : c.allowed) {
    bool match = true;
    for (std::size_t k = 0; k < c.scope.size() && match; ++k)
      if (s.value_of(w, c.scope[k]) != tuple[k]) match = false;
    if (match) return true;
  }
  return false;
}

}  // namespace

bool satisfies_constraints(const Scenario& s, const World& w) {
  for (const auto& c : s.constraints)
    if (!satisfies_one(s, c, w)) return false;
  return true;
}

void validate_scenario(const Scenario& s) {
  std::set<std::string> point_names;
  for (const auto& p : s.points) {
    if (!point_names.insert(p.name).second)
      throw std::invalid_argument("duplicate point name: " + p.name);
    if (p.location.spatial_dim() != s.spatial_dim())
      throw std::invalid_argument("point " + p.name +
                                  ": spatial dimension differs from scenario");
  }
  if (s.spatial_dim() != 1 && s.spatial_dim() != 3)
    throw std::invalid_argument("spatial dimension must be 1 or 3");
  for (std::size_t i = 0; i < s.points.size(); ++i)
    for (std::size_t j = i + 1; j < s.points.size(); ++j)
      if (s.points[i].location == s.points[j].location)
        throw std::invalid_argument("points " + s.points[i].name + " and " +
                                    s.points[j].name +
                                    " have identical coordinates");

  std::set<std::string> var_ids;
  for (const auto& v : s.variables) {
    if (!var_ids.insert(v.id).second)
      throw std::invalid_argument("duplicate variable: " + v.id);
    if (s.point_index(v.point) < 0)
      throw std::invalid_argument("variable " + v.id + ": unknown point " +
                                  v.point);
    if (v.domain.empty())
      throw std::invalid_argument("variable " + v.id + ": empty domain");
    std::set<std::string> vals(v.domain.begin(), v.domain.end());
    if (vals.size() != v.domain.size())
      throw std::invalid_argument("variable " + v.id +
                                  ": duplicate domain value");
  }

  for (const auto& c : s.constraints) {
    if (c.scope.empty())
      throw std::invalid_argument("constraint with empty scope");
    for (const auto& id : c.scope) {
      int vi = s.variable_index(id);
      if (vi < 0)
        throw std::invalid_argument("constraint references unknown variable: " +
                                    id);
      if (c.kind == Constraint::Kind::Product) {
        for (const auto& val : s.variables[vi].domain)
          if (val != "+1" && val != "-1")
            throw std::invalid_argument(
                "product constraint over variable " + id +
                " whose domain is not {+1, -1}");
      }
    }
    if (c.kind == Constraint::Kind::Product &&
        c.product_target != 1 && c.product_target != -1)
      throw std::invalid_argument("product constraint target must be +1 or -1");
    if (c.kind == Constraint::Kind::Table) {
      for (const auto& tuple : c.allowed) {
        if (tuple.size() != c.scope.size())
          throw std::invalid_argument("constraint tuple arity mismatch");
        for (std::size_t k = 0; k < tuple.size(); ++k) {
          const auto& var = s.variables[s.variable_index(c.scope[k])];
          if (domain_index(var, tuple[k]) < 0)
            throw std::invalid_argument("constraint tuple value '" + tuple[k] +
                                        "' not in domain of " + var.id);
        }
      }
    }
  }

  if (s.actual.values.size() != s.variables.size())
    throw std::invalid_argument("actual world must assign every variable");
  for (std::size_t i = 0; i < s.variables.size(); ++i) {
    int idx = s.actual.values[i];
    if (idx < 0 || idx >= static_cast<int>(s.variables[i].domain.size()))
      throw std::invalid_argument("actual world: value out of domain for " +
                                  s.variables[i].id);
  }
  if (!satisfies_constraints(s, s.actual))
    throw std::invalid_argument("actual world violates a constraint");

  for (const auto& id : s.choices)
    if (s.variable_index(id) < 0)
      throw std::invalid_argument("choice references unknown variable: " + id);
}

std::vector<World> enumerate_worlds(const Scenario& s) {
  validate_scenario(s);

  // Guard against runaway assignment spaces; see kMaxAssignments in the
  // header for the documented limit.
  unsigned long long combos = 1;
  for (const auto& v : s.variables) {
    combos *= v.domain.size();
    if (combos > kMaxAssignments)
      throw std::invalid_argument(
          "scenario exceeds the enumeration limit of 2^20 assignments");
  }

  // Enumeration digits run over variables sorted by id, most significant
  // first, so the output order is lexicographic by variable id then domain
  // position regardless of declaration order.
  std::vector<std::size_t> by_id(s.variables.size());
  std::iota(by_id.begin(), by_id.end(), 0);
  std::sort(by_id.begin(), by_id.end(), [&](std::size_t a, std::size_t b) {
    return s.variables[a].id < s.variables[b].id;
  });

  std::vector<World> out;
  World w;
  w.values.assign(s.variables.size(), 0);
  while (true) {
    if (satisfies_constraints(s, w)) out.push_back(w);
    // odometer increment
    int pos = static_cast<int>(by_id.size()) - 1;
    for (; pos >= 0; --pos) {
      std::size_t vi = by_id[pos];
      if (++w.values[vi] < static_cast<int>(s.variables[vi].domain.size()))
        break;
      w.values[vi] = 0;
    }
    if (pos < 0) break;
  }
  return out;
}

std::vector<SpacetimePoint> diff_points(const Scenario& s, const World& w) {
  if (w.values.size() != s.variables.size())
    throw std::invalid_argument("world does not match scenario variables");
  std::vector<SpacetimePoint> pts;
  for (std::size_t i = 0; i < s.variables.size(); ++i) {
    if (w.values[i] != s.actual.values[i])
      pts.push_back(s.location_of(s.variables[i]));
  }
  std::sort(pts.begin(), pts.end(), coord_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

ConeRegion deviation_region(const Scenario& s, const World& w) {
  return future_closure(diff_points(s, w));
}

FreeChoiceReport validate_free_choice(const Scenario& s,
                                      const std::string& choice_variable) {
  if (std::find(s.choices.begin(), s.choices.end(), choice_variable) ==
      s.choices.end())
    throw std::invalid_argument("not a declared choice: " + choice_variable);
  int vi = s.variable_index(choice_variable);
  const EventVariable& var = s.variables[vi];
  const SpacetimePoint& r = s.location_of(var);

  FreeChoiceReport report;
  std::vector<World> worlds = enumerate_worlds(s);
  for (std::size_t value = 0; value < var.domain.size(); ++value) {
    bool witnessed = false;
    for (const auto& w : worlds) {
      if (w.values[vi] != static_cast<int>(value)) continue;
      bool inside = true;
      for (const auto& p : diff_points(s, w))
        if (!causally_precedes(r, p)) { inside = false; break; }
      if (inside) { witnessed = true; break; }
    }
    if (!witnessed) report.failing_values.push_back(var.domain[value]);
  }
  report.ok = report.failing_values.empty();
  return report;
}

}  // namespace stc
