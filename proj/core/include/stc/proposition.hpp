#ifndef STC_PROPOSITION_HPP
#define STC_PROPOSITION_HPP

#include <memory>
#include <string>
#include <vector>

#include "stc/scenario.hpp"

namespace stc {

// Boolean formula over equality atoms `variable = value`. And/Or are strictly
// binary (the parser builds left-associated chains), which keeps structural
// equality and round-tripping trivial.
struct Proposition {
  enum class Kind { Atom, Not, And, Or };

  Kind kind = Kind::Atom;
  std::string variable;  // Atom
  std::string value;     // Atom
  std::vector<Proposition> children;

  friend bool operator==(const Proposition&, const Proposition&) = default;
};

Proposition atom(std::string variable, std::string value);
Proposition neg(Proposition a);
Proposition conj(Proposition a, Proposition b);
Proposition disj(Proposition a, Proposition b);

/// Throws std::invalid_argument if an atom references an undeclared variable
/// or a value outside its domain.
void validate_proposition(const Scenario& s, const Proposition& p);

/// Total boolean evaluation on a world of the scenario.
bool eval(const Scenario& s, const Proposition& p, const World& w);

/// Query-grammar text with minimal parentheses: `a = +1 and not b = -1`.
std::string to_string(const Proposition& p);

}  // namespace stc

#endif
