#ifndef STC_SCENARIO_HPP
#define STC_SCENARIO_HPP

#include <string>
#include <vector>

#include "stc/geometry.hpp"

namespace stc {

struct NamedPoint {
  std::string name;
  SpacetimePoint location;

  friend bool operator==(const NamedPoint&, const NamedPoint&) = default;
};

// An event variable pinned to one named point, with a finite ordered domain
// of symbolic values ("+1", "-1", "Sx", "none", ...). Values are opaque
// strings compared verbatim.
struct EventVariable {
  std::string id;
  std::string point;
  std::vector<std::string> domain;

  friend bool operator==(const EventVariable&, const EventVariable&) = default;
};

// Physics enters only as constraints on which total assignments are possible
// worlds: either an explicit table of permitted value tuples, or the
// sign-product rule product(scope) = +1/-1 over {+1,-1}-valued variables.
struct Constraint {
  enum class Kind { Table, Product };
  Kind kind = Kind::Table;
  std::vector<std::string> scope;
  std::vector<std::vector<std::string>> allowed;  // Table: permitted tuples
  int product_target = -1;                        // Product: +1 or -1

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// A total assignment: values[i] indexes variables[i].domain of the owning
// Scenario. Worlds are meaningful only together with their scenario.
struct World {
  std::vector<int> values;

  friend bool operator==(const World&, const World&) = default;
};

struct Scenario {
  std::vector<NamedPoint> points;
  std::vector<EventVariable> variables;
  std::vector<Constraint> constraints;
  World actual;
  std::vector<std::string> choices;  // variable ids declared as free choices

  friend bool operator==(const Scenario&, const Scenario&) = default;

  std::size_t spatial_dim() const {
    return points.empty() ? 1 : points.front().location.spatial_dim();
  }

  /// Index of a variable id, or -1.
  int variable_index(const std::string& id) const;
  /// Index of a point name, or -1.
  int point_index(const std::string& name) const;
  /// Location of the point a variable is bound to.
  const SpacetimePoint& location_of(const EventVariable& v) const;
  /// Name of the declared point with these exact coordinates, or "".
  std::string point_name_at(const SpacetimePoint& p) const;
  /// Value string a world assigns to a variable id.
  const std::string& value_of(const World& w, const std::string& id) const;
};

/// Structural validation: unique names, distinct point coordinates, uniform
/// spatial dimension, resolvable references, table tuples matching scope
/// arity and domains, product constraints over {+1,-1} domains, and an
/// actual world that satisfies every constraint. Throws std::invalid_argument
/// with a descriptive message on the first violation.
void validate_scenario(const Scenario& s);

/// True iff the world satisfies every constraint of the scenario.
bool satisfies_constraints(const Scenario& s, const World& w);

/// Enumeration refuses assignment spaces larger than this (2^20); scenarios
/// are desk-scale by design and anything bigger is almost certainly a
/// mistake in the input.
inline constexpr unsigned long long kMaxAssignments = 1ull << 20;

/// All total assignments satisfying every constraint, in lexicographic order
/// by variable id (then domain order). Always contains s.actual for a valid
/// scenario. Throws if the assignment space exceeds kMaxAssignments.
std::vector<World> enumerate_worlds(const Scenario& s);

/// Locations at which w differs from the actual world (a point is included
/// if any variable at it differs), sorted by coord_less.
std::vector<SpacetimePoint> diff_points(const Scenario& s, const World& w);

/// future_closure(diff_points(s, w)): the similarity measure attached to w.
ConeRegion deviation_region(const Scenario& s, const World& w);

struct FreeChoiceReport {
  bool ok = false;
  // Alternative values with no possible world that takes the value while
  // agreeing with the actual world everywhere outside F(choice point).
  std::vector<std::string> failing_values;
};

/// Checks that every alternative value of a declared choice variable admits a
/// possible world whose diff points all lie inside F(choice point).
/// Throws std::invalid_argument if the variable is not a declared choice.
FreeChoiceReport validate_free_choice(const Scenario& s,
                                      const std::string& choice_variable);

}  // namespace stc

#endif
