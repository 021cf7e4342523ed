#ifndef STC_GEOMETRY_HPP
#define STC_GEOMETRY_HPP

#include <cstddef>
#include <vector>

#include "stc/rational.hpp"

namespace stc {

// An event location in (1+1)- or (1+3)-dimensional Minkowski space, c = 1,
// signature (+,-,...). Coordinates are exact rationals so that points lying
// exactly on a light-cone boundary are classified correctly.
struct SpacetimePoint {
  Rat t;
  std::vector<Rat> x;  // 1 or 3 spatial components

  std::size_t spatial_dim() const { return x.size(); }

  friend bool operator==(const SpacetimePoint& a, const SpacetimePoint& b) {
    return a.t == b.t && a.x == b.x;
  }
  friend bool operator!=(const SpacetimePoint& a, const SpacetimePoint& b) {
    return !(a == b);
  }
};

/// Deterministic (t, x...) lexicographic order; used for canonical sorting,
/// not for anything physical.
bool coord_less(const SpacetimePoint& a, const SpacetimePoint& b);

SpacetimePoint make_point(Rat t, Rat x);
SpacetimePoint make_point(Rat t, Rat x, Rat y, Rat z);

/// True iff s lies on or within the forward light cone of r, i.e.
/// s.t >= r.t and (s.t - r.t)^2 >= |s.x - r.x|^2. Reflexive.
/// Throws std::invalid_argument on spatial-dimension mismatch.
bool causally_precedes(const SpacetimePoint& r, const SpacetimePoint& s);

// A future closure: the union of forward light cones F(r) over a finite apex
// set. Canonical form stores only the causal-minimal apices (an antichain),
// sorted by coord_less, so region equality is plain vector equality.
struct ConeRegion {
  std::vector<SpacetimePoint> apices;

  bool empty() const { return apices.empty(); }

  friend bool operator==(const ConeRegion& a, const ConeRegion& b) {
    return a.apices == b.apices;
  }
  friend bool operator!=(const ConeRegion& a, const ConeRegion& b) {
    return !(a == b);
  }
};

/// Canonical region whose membership is the union of F(r) over the input.
/// Apices of the result are the causal-minimal elements of the input set.
ConeRegion future_closure(const std::vector<SpacetimePoint>& points);

/// True iff some apex of the region causally precedes s.
bool region_contains_point(const ConeRegion& region, const SpacetimePoint& s);

/// Non-strict containment. Sound on canonical regions because
/// F(r) is a subset of R iff r is a member of R.
bool region_subset(const ConeRegion& a, const ConeRegion& b);

/// Strict containment: subset and not equal (as sets of points).
bool region_proper_subset(const ConeRegion& a, const ConeRegion& b);

/// Deterministic total order on canonical regions (apex-list lexicographic).
bool region_less(const ConeRegion& a, const ConeRegion& b);

// A pure boost along the single spatial axis of a (1+1) scenario, |v| < 1.
struct LorentzBoost {
  Rat v;
};

/// Coordinates of r in the boosted frame, up to the common positive factor
/// gamma(v); the returned point is (t - v*x, x - v*t). Scaling both
/// coordinates by gamma > 0 changes no time-order or causal-order comparison,
/// so downstream tests stay exact and rational.
/// Throws std::invalid_argument unless |v| < 1 and r is (1+1)-dimensional.
SpacetimePoint apply_boost(const LorentzBoost& b, const SpacetimePoint& r);

// One realizable time-ordering of a point list: indices into the input,
// ascending boosted time, plus one exact witness velocity realizing it.
struct FrameOrdering {
  std::vector<std::size_t> order;
  Rat velocity;
};

/// All total time-orderings of the given (1+1, pairwise distinct) points that
/// some boost |v| < 1 realizes. Space-like pairs flip order exactly at the
/// critical velocity dt/dx; sampling one rational v inside each open interval
/// between sorted critical velocities yields every realizable ordering once.
/// Throws std::invalid_argument if two points coincide or the dimension is
/// not 1+1.
std::vector<FrameOrdering> enumerate_orderings(
    const std::vector<SpacetimePoint>& points);

}  // namespace stc

#endif
