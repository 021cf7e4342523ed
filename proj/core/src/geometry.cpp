#include "stc/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace stc {

std::optional<Rat> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  if (i >= text.size()) return std::nullopt;

  auto digits = [&](std::string& out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      out.push_back(text[i++]);
    return i > start;
  };
  // cpp_int's string constructor treats a leading 0 as an octal prefix
  auto from_digits = [](const std::string& s) {
    std::size_t nz = s.find_first_not_of('0');
    return boost::multiprecision::cpp_int(
        nz == std::string::npos ? "0" : s.substr(nz));
  };

  std::string intpart;
  if (!digits(intpart)) return std::nullopt;

  Rat value;
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::string den;
    if (!digits(den) || i != text.size()) return std::nullopt;
    boost::multiprecision::cpp_int d = from_digits(den);
    if (d == 0) return std::nullopt;
    value = Rat(from_digits(intpart), d);
  } else if (i < text.size() && text[i] == '.') {
    ++i;
    std::string frac;
    if (!digits(frac) || i != text.size()) return std::nullopt;
    boost::multiprecision::cpp_int scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    value = Rat(from_digits(intpart + frac), scale);
  } else {
    if (i != text.size()) return std::nullopt;
    value = Rat(from_digits(intpart));
  }
  if (neg) value = -value;
  return value;
}

std::string to_string(const Rat& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

bool coord_less(const SpacetimePoint& a, const SpacetimePoint& b) {
  if (a.t != b.t) return a.t < b.t;
  return std::lexicographical_compare(a.x.begin(), a.x.end(), b.x.begin(),
                                      b.x.end());
}

SpacetimePoint make_point(Rat t, Rat x) {
  return SpacetimePoint{std::move(t), {std::move(x)}};
}

SpacetimePoint make_point(Rat t, Rat x, Rat y, Rat z) {
  return SpacetimePoint{std::move(t), {std::move(x), std::move(y), std::move(z)}};
}

bool causally_precedes(const SpacetimePoint& r, const SpacetimePoint& s) {
  if (r.spatial_dim() != s.spatial_dim())
    throw std::invalid_argument("causally_precedes: spatial dimension mismatch");
  const Rat dt = s.t - r.t;
  if (dt < 0) return false;
  Rat dist2 = 0;
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    const Rat dx = s.x[i] - r.x[i];
    dist2 += dx * dx;
  }
  return dt * dt >= dist2;  // boundary of the cone is inside F(r)
}

ConeRegion future_closure(const std::vector<SpacetimePoint>& points) {
  std::vector<SpacetimePoint> unique = points;
  std::sort(unique.begin(), unique.end(), coord_less);
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  ConeRegion region;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < unique.size() && minimal; ++j) {
      if (j != i && causally_precedes(unique[j], unique[i])) minimal = false;
    }
    if (minimal) region.apices.push_back(unique[i]);
  }
  return region;
}

bool region_contains_point(const ConeRegion& region, const SpacetimePoint& s) {
  for (const auto& apex : region.apices)
    if (causally_precedes(apex, s)) return true;
  return false;
}

bool region_subset(const ConeRegion& a, const ConeRegion& b) {
  for (const auto& apex : a.apices)
    if (!region_contains_point(b, apex)) return false;
  return true;
}

bool region_proper_subset(const ConeRegion& a, const ConeRegion& b) {
  return region_subset(a, b) && !region_subset(b, a);
}

bool region_less(const ConeRegion& a, const ConeRegion& b) {
  return std::lexicographical_compare(a.apices.begin(), a.apices.end(),
                                      b.apices.begin(), b.apices.end(),
                                      coord_less);
}

SpacetimePoint apply_boost(const LorentzBoost& b, const SpacetimePoint& r) {
  if (abs(b.v) >= 1)
    throw std::invalid_argument("apply_boost: |v| must be < 1");
  if (r.spatial_dim() != 1)
    throw std::invalid_argument("apply_boost: boosts are 1+1 only");
  return make_point(r.t - b.v * r.x[0], r.x[0] - b.v * r.t);
}

std::vector<FrameOrdering> enumerate_orderings(
    const std::vector<SpacetimePoint>& points) {
  for (const auto& p : points)
    if (p.spatial_dim() != 1)
      throw std::invalid_argument("enumerate_orderings: points must be 1+1");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw std::invalid_argument("enumerate_orderings: two points coincide");

  // Critical velocities: a space-like pair swaps boosted-time order at
  // v = dt/dx, which for such a pair lies strictly inside (-1, 1). Time-like
  // and light-like pairs never reorder for |v| < 1.
  std::vector<Rat> critical;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Rat dt = points[j].t - points[i].t;
      const Rat dx = points[j].x[0] - points[i].x[0];
      if (dx == 0) continue;
      Rat vc = dt / dx;
      if (abs(vc) < 1) critical.push_back(std::move(vc));
    }
  }
  std::sort(critical.begin(), critical.end());
  critical.erase(std::unique(critical.begin(), critical.end()),
                 critical.end());

  // One sample velocity inside each open interval between -1, the sorted
  // critical velocities, and 1. Boosted times of distinct points are
  // pairwise distinct there, so each sample induces a total ordering.
  std::vector<Rat> samples;
  Rat lo = -1;
  for (const Rat& c : critical) {
    samples.push_back((lo + c) / 2);
    lo = c;
  }
  samples.push_back((lo + Rat(1)) / 2);

  std::vector<FrameOrdering> result;
  for (const Rat& v : samples) {
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const Rat ta = points[a].t - v * points[a].x[0];
      const Rat tb = points[b].t - v * points[b].x[0];
      if (ta != tb) return ta < tb;
      return a < b;  // unreachable off the critical set; keeps sort strict
    });
    result.push_back(FrameOrdering{std::move(order), v});
  }
  return result;
}

}  // namespace stc
