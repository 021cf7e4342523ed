#include "stc/proposition.hpp"

#include <stdexcept>

namespace stc {

Proposition atom(std::string variable, std::string value) {
  Proposition p;
  p.kind = Proposition::Kind::Atom;
  p.variable = std::move(variable);
  p.value = std::move(value);
  return p;
}

Proposition neg(Proposition a) {
  Proposition p;
  p.kind = Proposition::Kind::Not;
  p.children.push_back(std::move(a));
  return p;
}

static Proposition binary(Proposition::Kind k, Proposition a, Proposition b) {
  Proposition p;
  p.kind = k;
  p.children.push_back(std::move(a));
  p.children.push_back(std::move(b));
  return p;
}

Proposition conj(Proposition a, Proposition b) {
  return binary(Proposition::Kind::And, std::move(a), std::move(b));
}

Proposition disj(Proposition a, Proposition b) {
  return binary(Proposition::Kind::Or, std::move(a), std::move(b));
}

void validate_proposition(const Scenario& s, const Proposition& p) {
  switch (p.kind) {
    case Proposition::Kind::Atom: {
      int vi = s.variable_index(p.variable);
      if (vi < 0)
        throw std::invalid_argument("unknown variable in formula: " +
                                    p.variable);
      const auto& dom = s.variables[vi].domain;
      if (std::find(dom.begin(), dom.end(), p.value) == dom.end())
        throw std::invalid_argument("value '" + p.value +
                                    "' not in domain of " + p.variable);
      return;
    }
    case Proposition::Kind::Not:
    case Proposition::Kind::And:
    case Proposition::Kind::Or:
      for (const auto& c : p.children) validate_proposition(s, c);
      return;
  }
}

bool eval(const Scenario& s, const Proposition& p, const World& w) {
  switch (p.kind) {
    case Proposition::Kind::Atom:
      return s.value_of(w, p.variable) == p.value;
    case Proposition::Kind::Not:
      return !eval(s, p.children[0], w);
    case Proposition::Kind::And:
      return eval(s, p.children[0], w) && eval(s, p.children[1], w);
    case Proposition::Kind::Or:
      return eval(s, p.children[0], w) || eval(s, p.children[1], w);
  }
  return false;  // unreachable
}

namespace {

int precedence(Proposition::Kind k) {
  switch (k) {
    case Proposition::Kind::Or: return 1;
    case Proposition::Kind::And: return 2;
    case Proposition::Kind::Not: return 3;
    case Proposition::Kind::Atom: return 4;
  }
  return 4;
}

void write(const Proposition& p, std::string& out, int parent_prec,
           bool right_operand) {
  int prec = precedence(p.kind);
  // Same-precedence right operands need parens to survive left-assoc parsing.
  bool parens = prec < parent_prec || (right_operand && prec == parent_prec &&
                                       p.kind != Proposition::Kind::Atom &&
                                       p.kind != Proposition::Kind::Not);
  if (parens) out += "(";
  switch (p.kind) {
    case Proposition::Kind::Atom:
      out += p.variable + " = " + p.value;
      break;
    case Proposition::Kind::Not:
      out += "not ";
      write(p.children[0], out, prec, false);
      break;
    case Proposition::Kind::And:
    case Proposition::Kind::Or:
      write(p.children[0], out, prec, false);
      out += p.kind == Proposition::Kind::And ? " and " : " or ";
      write(p.children[1], out, prec, true);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

std::string to_string(const Proposition& p) {
  std::string out;
  write(p, out, 0, false);
  return out;
}

}  // namespace stc
