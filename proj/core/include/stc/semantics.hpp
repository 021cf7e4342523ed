#ifndef STC_SEMANTICS_HPP
#define STC_SEMANTICS_HPP

#include <optional>
#include <vector>

#include "stc/proposition.hpp"
#include "stc/scenario.hpp"

namespace stc {

// A phi-world in which psi fails, together with the psi-true phi-world whose
// deviation region is properly smaller (absent when no such world exists).
struct DominationWitness {
  World falsifying;
  std::optional<World> dominating;
};

struct Verdict {
  bool truth = true;
  bool vacuous = false;  // true iff there are no phi-worlds (then truth=true)
  // Primary phi-worlds; for the frame evaluators, the most-similar worlds in
  // the chosen frame.
  std::vector<World> primaries;
  std::vector<DominationWitness> witnesses;
  // Filled by any_frame_eval when some frame verifies the statement.
  std::optional<Rat> witness_velocity;
  std::optional<std::vector<std::size_t>> witness_ordering;
};

// The minimal antichain of phi-regions; every phi-world's deviation region
// contains some member (a coinitial set).
struct SupportSet {
  std::vector<ConeRegion> regions;

  friend bool operator==(const SupportSet&, const SupportSet&) = default;
};

// Precomputed world table for one scenario: every possible world, its
// deviation region, and the proper-subset relation between regions. All
// evaluators below run against this; the (Scenario, ...) overloads build one
// on the fly.
class WorldSpace {
 public:
  explicit WorldSpace(const Scenario& s);

  const Scenario& scenario() const { return *scenario_; }
  const std::vector<World>& worlds() const { return worlds_; }
  const ConeRegion& region(std::size_t i) const { return regions_[i]; }
  std::size_t size() const { return worlds_.size(); }

  /// region(i) is a proper subset of region(j).
  bool proper(std::size_t i, std::size_t j) const {
    return proper_[i * worlds_.size() + j];
  }
  /// Indices of worlds satisfying p, in enumeration order.
  std::vector<std::size_t> satisfying(const Proposition& p) const;

 private:
  const Scenario* scenario_;
  std::vector<World> worlds_;
  std::vector<ConeRegion> regions_;
  std::vector<bool> proper_;
};

/// The possible worlds in which phi is true, in enumeration order.
std::vector<World> phi_worlds(const Scenario& s, const Proposition& phi);

/// True iff no phi-world's deviation region is properly inside w's.
/// Throws std::invalid_argument if w is not a phi-world.
bool is_primary(const Scenario& s, const Proposition& phi, const World& w);

/// True iff every phi-world is primary or dominated by a primary phi-world.
/// Always true on the finite models this engine handles; exists so the
/// precondition of the counterfactual definition is asserted, never assumed.
bool is_closed(const Scenario& s, const Proposition& phi);
bool is_closed(const WorldSpace& ws, const Proposition& phi);

/// The counterfactual `phi => psi`: true iff there are no phi-worlds, or psi
/// holds in every primary phi-world. The verdict carries the primaries and,
/// for each psi-falsifying phi-world, its dominating psi-world if any.
Verdict dstc_eval(const Scenario& s, const Proposition& phi,
                  const Proposition& psi);
Verdict dstc_eval(const WorldSpace& ws, const Proposition& phi,
                  const Proposition& psi);

/// The same connective computed from the raw for-all/exists clause, without
/// going through primary worlds; agrees with dstc_eval on every input.
Verdict dstc_eval_via_clause2(const Scenario& s, const Proposition& phi,
                              const Proposition& psi);
Verdict dstc_eval_via_clause2(const WorldSpace& ws, const Proposition& phi,
                              const Proposition& psi);

/// The rejected exists-first variant: some psi-true phi-world must be
/// properly more similar than EVERY psi-falsifying phi-world. Diverges from
/// dstc_eval when the similarity order is properly partial.
Verdict lewis_alt_eval(const Scenario& s, const Proposition& phi,
                       const Proposition& psi);
Verdict lewis_alt_eval(const WorldSpace& ws, const Proposition& phi,
                       const Proposition& psi);

/// The minimal deviation regions among phi-worlds, sorted canonically.
SupportSet compute_support(const Scenario& s, const Proposition& phi);
SupportSet compute_support(const WorldSpace& ws, const Proposition& phi);

/// Checks the support condition: every member is realized as some phi-world's
/// deviation region, and every phi-world's region contains some member.
bool supports(const Scenario& s, const SupportSet& sigma,
              const Proposition& phi);

/// Counterfactual with a free-choice antecedent `choice_variable = value`:
/// true iff psi holds in every such world agreeing with the actual world
/// everywhere outside F(choice point). Requires a declared, validated choice
/// and a non-actual alternative value; agrees with dstc_eval on the same
/// antecedent atom.
Verdict free_choice_eval(const Scenario& s, const std::string& choice_variable,
                         const std::string& value, const Proposition& psi);

/// The rejected fixed-frame semantics: psi must hold in the phi-worlds whose
/// first deviation (minimum boosted time over diff points) is latest in the
/// given frame. A phi-world equal to the actual world deviates at time
/// +infinity and is then uniquely most similar. 1+1 scenarios only.
Verdict frame_eval(const Scenario& s, const Proposition& phi,
                   const Proposition& psi, const LorentzBoost& b);

/// True iff some realizable ordering of the scenario points yields a frame in
/// which frame_eval verifies the statement; reports the witness frame.
Verdict any_frame_eval(const Scenario& s, const Proposition& phi,
                       const Proposition& psi);

}  // namespace stc

#endif
