#include "stc/bundled.hpp"

namespace stc {

namespace {

// Singlet pair, measurements in a fixed time order: the Sx outcome at PA is
// recorded before B's measurement at PB, and B's setting is a free choice.
// Anti-correlation binds the outcomes only when both sides measure Sx.
const char* kEpr = R"(# epr: spin-zero pair; B's setting is a free choice made after A's Sx result
point PA 0 0
point PB 1 1/2
var A-outcome @PA { +1, -1 }
var B-setting @PB { Sx, Sy }
var B-outcome @PB { +1, -1 }
constraint table(B-setting, A-outcome, B-outcome) { (Sx, +1, -1) (Sx, -1, +1) (Sy, +1, +1) (Sy, +1, -1) (Sy, -1, +1) (Sy, -1, -1) }
actual A-outcome=+1 B-setting=Sy B-outcome=+1
choice B-setting
query Q1: (B-setting = Sx) => (B-outcome = -1)
query Q2: (B-setting = Sx) => (B-outcome = +1)
)";

// One spatial location, three times: preparation, an optional Sx measurement
// of particle A, then B's Sx measurement. When both are measured the product
// of results is -1; when A is unmeasured its result slot is "none".
const char* kVaidman = R"(# vaidman: t=0 preparation, optional A measurement at t=1, B measured at t=2
point P0 0 0
point P1 1 0
point P2 2 0
var A-measured @P1 { no, yes }
var A-result @P1 { none, +1, -1 }
var B-result @P2 { +1, -1 }
constraint table(A-measured, A-result, B-result) { (no, none, +1) (no, none, -1) (yes, +1, -1) (yes, -1, +1) }
actual A-measured=no A-result=none B-result=-1
choice A-measured
query Q1: (A-measured = yes) => (A-result = +1)
query Q2: (A-measured = yes and B-result = -1) => (A-result = +1)
)";

// GHZ triple with B inside the forward cone of A and C space-like to both.
// QAS strengthens Q1's antecedent and flips its verdict.
const char* kGhzFig1 = R"(# ghz-fig1: B in the unambiguous future of A, C space-like to both
point A 0 0
point B 2 0
point C 0 -5
var a @A { +1, -1 }
var b @B { +1, -1 }
var c @C { +1, -1 }
constraint product(a, b, c) = -1
actual a=-1 b=+1 c=+1
query Q1: (a = +1) => (c = +1)
query Q2: (a = +1) => (c = -1)
query QAS: (a = +1 and b = +1) => (c = +1)
)";

const char* kGhzFig2 = R"(# ghz-fig2: A, B, C mutually space-like separated
point A 0 0
point B 0 2
point C 0 -2
var a @A { +1, -1 }
var b @B { +1, -1 }
var c @C { +1, -1 }
constraint product(a, b, c) = -1
actual a=-1 b=+1 c=+1
query Q1: (a = +1) => (c = +1)
query Q2: (a = +1) => (c = -1)
)";

// Four mutually space-like points. The possible worlds are hand-picked so
// the antecedent of Q1 has two incomparable minimal deviation regions
// (F(P1) and F(P3)), each lying properly inside the region of a world where
// the consequent fails. The default evaluator judges Q1 true, the
// exists-first @footnote variant judges it false.
const char* kDivergence = R"(# divergence: partial similarity order splits the default and @footnote verdicts
point P1 0 0
point P2 0 5
point P3 0 10
point P4 0 15
var x1 @P1 { 0, 1 }
var x2 @P2 { 0, 1 }
var x3 @P3 { 0, 1 }
var x4 @P4 { 0, 1 }
constraint table(x1, x2, x3, x4) { (0, 0, 0, 0) (1, 0, 0, 0) (1, 1, 0, 0) (0, 0, 1, 0) (0, 0, 1, 1) }
actual x1=0 x2=0 x3=0 x4=0
query Q1: (x1 = 1 or x3 = 1) => (x2 = 0 and x4 = 0)
query QF: (x1 = 1 or x3 = 1) => (x2 = 0 and x4 = 0) @footnote
)";

}  // namespace

const std::vector<std::string>& bundled_scenario_names() {
  static const std::vector<std::string> names = {
      "epr", "vaidman", "ghz-fig1", "ghz-fig2", "divergence"};
  return names;
}

std::optional<std::string> bundled_scenario_text(const std::string& name) {
  if (name == "epr") return std::string(kEpr);
  if (name == "vaidman") return std::string(kVaidman);
  if (name == "ghz-fig1") return std::string(kGhzFig1);
  if (name == "ghz-fig2") return std::string(kGhzFig2);
  if (name == "divergence") return std::string(kDivergence);
  return std::nullopt;
}

}  // namespace stc
