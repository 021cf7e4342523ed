#include "stc/semantics.hpp"

#include <algorithm>
#include <stdexcept>

namespace stc {

WorldSpace::WorldSpace(const Scenario& s) : scenario_(&s) {
  worlds_ = enumerate_worlds(s);
  regions_.reserve(worlds_.size());
  for (const auto& w : worlds_) regions_.push_back(deviation_region(s, w));
  const std::size_t n = worlds_.size();
  proper_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        proper_[i * n + j] = region_proper_subset(regions_[i], regions_[j]);
}

std::vector<std::size_t> WorldSpace::satisfying(const Proposition& p) const {
  validate_proposition(*scenario_, p);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < worlds_.size(); ++i)
    if (eval(*scenario_, p, worlds_[i])) out.push_back(i);
  return out;
}

std::vector<World> phi_worlds(const Scenario& s, const Proposition& phi) {
  WorldSpace ws(s);
  std::vector<World> out;
  for (std::size_t i : ws.satisfying(phi)) out.push_back(ws.worlds()[i]);
  return out;
}

namespace {

// Indices within phi (itself a list of world indices) of the primary worlds:
// those with no phi-world's region properly inside theirs.
std::vector<std::size_t> primary_indices(const WorldSpace& ws,
                                         const std::vector<std::size_t>& phi) {
  std::vector<std::size_t> out;
  for (std::size_t q : phi) {
    bool primary = true;
    for (std::size_t p : phi)
      if (ws.proper(p, q)) { primary = false; break; }
    if (primary) out.push_back(q);
  }
  return out;
}

bool closed_on(const WorldSpace& ws, const std::vector<std::size_t>& phi) {
  std::vector<std::size_t> prim = primary_indices(ws, phi);
  for (std::size_t q : phi) {
    if (std::find(prim.begin(), prim.end(), q) != prim.end()) continue;
    bool dominated = false;
    for (std::size_t p : prim)
      if (ws.proper(p, q)) { dominated = true; break; }
    if (!dominated) return false;
  }
  return true;
}

std::vector<DominationWitness> domination_witnesses(
    const WorldSpace& ws, const std::vector<std::size_t>& phi,
    const std::vector<bool>& psi_true) {
  std::vector<DominationWitness> out;
  for (std::size_t q : phi) {
    if (psi_true[q]) continue;
    DominationWitness wit{ws.worlds()[q], std::nullopt};
    for (std::size_t p : phi) {
      if (psi_true[p] && ws.proper(p, q)) {
        wit.dominating = ws.worlds()[p];
        break;
      }
    }
    out.push_back(std::move(wit));
  }
  return out;
}

std::vector<bool> truth_table(const WorldSpace& ws, const Proposition& p) {
  validate_proposition(ws.scenario(), p);
  std::vector<bool> t(ws.size());
  for (std::size_t i = 0; i < ws.size(); ++i)
    t[i] = eval(ws.scenario(), p, ws.worlds()[i]);
  return t;
}

}  // namespace

bool is_primary(const Scenario& s, const Proposition& phi, const World& w) {
  WorldSpace ws(s);
  auto phi_idx = ws.satisfying(phi);
  auto it = std::find(ws.worlds().begin(), ws.worlds().end(), w);
  std::size_t wi = static_cast<std::size_t>(it - ws.worlds().begin());
  if (it == ws.worlds().end() ||
      std::find(phi_idx.begin(), phi_idx.end(), wi) == phi_idx.end())
    throw std::invalid_argument("is_primary: w is not a phi-world");
  for (std::size_t p : phi_idx)
    if (ws.proper(p, wi)) return false;
  return true;
}

bool is_closed(const Scenario& s, const Proposition& phi) {
  WorldSpace ws(s);
  return closed_on(ws, ws.satisfying(phi));
}

bool is_closed(const WorldSpace& ws, const Proposition& phi) {
  return closed_on(ws, ws.satisfying(phi));
}

Verdict dstc_eval(const WorldSpace& ws, const Proposition& phi,
                  const Proposition& psi) {
  auto phi_idx = ws.satisfying(phi);
  Verdict v;
  if (phi_idx.empty()) {
    v.vacuous = true;
    return v;
  }
  if (!closed_on(ws, phi_idx))
    throw std::logic_error("dstc_eval: antecedent is not closed");

  auto psi_true = truth_table(ws, psi);
  for (std::size_t p : primary_indices(ws, phi_idx)) {
    v.primaries.push_back(ws.worlds()[p]);
    if (!psi_true[p]) v.truth = false;
  }
  v.witnesses = domination_witnesses(ws, phi_idx, psi_true);
  return v;
}

Verdict dstc_eval(const Scenario& s, const Proposition& phi,
                  const Proposition& psi) {
  WorldSpace ws(s);
  return dstc_eval(ws, phi, psi);
}

Verdict dstc_eval_via_clause2(const WorldSpace& ws, const Proposition& phi,
                              const Proposition& psi) {
  auto phi_idx = ws.satisfying(phi);
  Verdict v;
  if (phi_idx.empty()) {
    v.vacuous = true;
    return v;
  }
  auto psi_true = truth_table(ws, psi);
  v.witnesses = domination_witnesses(ws, phi_idx, psi_true);
  v.truth = std::all_of(v.witnesses.begin(), v.witnesses.end(),
                        [](const DominationWitness& w) {
                          return w.dominating.has_value();
                        });
  return v;
}

Verdict dstc_eval_via_clause2(const Scenario& s, const Proposition& phi,
                              const Proposition& psi) {
  WorldSpace ws(s);
  return dstc_eval_via_clause2(ws, phi, psi);
}

Verdict lewis_alt_eval(const WorldSpace& ws, const Proposition& phi,
                       const Proposition& psi) {
  auto phi_idx = ws.satisfying(phi);
  Verdict v;
  if (phi_idx.empty()) {
    v.vacuous = true;
    return v;
  }
  auto psi_true = truth_table(ws, psi);
  v.truth = false;
  for (std::size_t p : phi_idx) {
    if (!psi_true[p]) continue;
    bool beats_all = true;
    for (std::size_t q : phi_idx) {
      if (!psi_true[q] && !ws.proper(p, q)) { beats_all = false; break; }
    }
    if (beats_all) {
      v.truth = true;
      v.primaries.push_back(ws.worlds()[p]);  // the witnessing world
      break;
    }
  }
  v.witnesses = domination_witnesses(ws, phi_idx, psi_true);
  return v;
}

Verdict lewis_alt_eval(const Scenario& s, const Proposition& phi,
                       const Proposition& psi) {
  WorldSpace ws(s);
  return lewis_alt_eval(ws, phi, psi);
}

SupportSet compute_support(const WorldSpace& ws, const Proposition& phi) {
  auto phi_idx = ws.satisfying(phi);
  SupportSet sigma;
  for (std::size_t p : primary_indices(ws, phi_idx))
    sigma.regions.push_back(ws.region(p));
  std::sort(sigma.regions.begin(), sigma.regions.end(), region_less);
  sigma.regions.erase(std::unique(sigma.regions.begin(), sigma.regions.end()),
                      sigma.regions.end());
  return sigma;
}

SupportSet compute_support(const Scenario& s, const Proposition& phi) {
  WorldSpace ws(s);
  return compute_support(ws, phi);
}

bool supports(const Scenario& s, const SupportSet& sigma,
              const Proposition& phi) {
  WorldSpace ws(s);
  auto phi_idx = ws.satisfying(phi);
  for (const auto& delta : sigma.regions) {
    bool is_phi_region = false;
    for (std::size_t q : phi_idx)
      if (ws.region(q) == delta) { is_phi_region = true; break; }
    if (!is_phi_region) return false;
  }
  for (std::size_t q : phi_idx) {
    bool covered = false;
    for (const auto& delta : sigma.regions)
      if (region_subset(delta, ws.region(q))) { covered = true; break; }
    if (!covered) return false;
  }
  return true;
}

Verdict free_choice_eval(const Scenario& s, const std::string& choice_variable,
                         const std::string& value, const Proposition& psi) {
  FreeChoiceReport rep = validate_free_choice(s, choice_variable);
  if (!rep.ok)
    throw std::invalid_argument("choice not validated: " + choice_variable);
  int vi = s.variable_index(choice_variable);
  const EventVariable& var = s.variables[vi];
  auto dit = std::find(var.domain.begin(), var.domain.end(), value);
  if (dit == var.domain.end())
    throw std::invalid_argument("value '" + value + "' not in domain of " +
                                choice_variable);
  int value_idx = static_cast<int>(dit - var.domain.begin());
  if (value_idx == s.actual.values[vi])
    throw std::invalid_argument(
        "free_choice_eval: value equals the actual choice; a counterfactual "
        "alternative is required");

  const SpacetimePoint& r = s.location_of(var);
  WorldSpace ws(s);
  validate_proposition(s, psi);

  Verdict v;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const World& w = ws.worlds()[i];
    if (w.values[vi] != value_idx) continue;
    bool inside = true;
    for (const auto& p : diff_points(s, w))
      if (!causally_precedes(r, p)) { inside = false; break; }
    if (!inside) continue;
    v.primaries.push_back(w);
    if (!eval(s, psi, w)) {
      v.truth = false;
      v.witnesses.push_back(DominationWitness{w, std::nullopt});
    }
  }
  v.vacuous = v.primaries.empty();
  return v;
}

namespace {

// First-deviation time of a world in the boosted frame; nullopt means
// +infinity (the world never deviates, i.e. it is the actual world).
std::optional<Rat> first_deviation_time(const Scenario& s, const World& w,
                                        const LorentzBoost& b) {
  std::optional<Rat> t;
  for (const auto& p : diff_points(s, w)) {
    Rat bt = apply_boost(b, p).t;
    if (!t || bt < *t) t = bt;
  }
  return t;
}

// a is later than b, with nullopt as +infinity.
bool later(const std::optional<Rat>& a, const std::optional<Rat>& b) {
  if (!a) return b.has_value();
  if (!b) return false;
  return *a > *b;
}

}  // namespace

Verdict frame_eval(const Scenario& s, const Proposition& phi,
                   const Proposition& psi, const LorentzBoost& b) {
  if (s.spatial_dim() != 1)
    throw std::invalid_argument("frames require 1+1");
  WorldSpace ws(s);
  auto phi_idx = ws.satisfying(phi);
  Verdict v;
  if (phi_idx.empty()) {
    v.vacuous = true;
    return v;
  }
  std::vector<std::optional<Rat>> dev;
  dev.reserve(phi_idx.size());
  std::optional<Rat> latest;
  bool have_latest = false;
  for (std::size_t q : phi_idx) {
    dev.push_back(first_deviation_time(s, ws.worlds()[q], b));
    if (!have_latest || later(dev.back(), latest)) {
      latest = dev.back();
      have_latest = true;
    }
  }
  auto psi_true = truth_table(ws, psi);
  for (std::size_t k = 0; k < phi_idx.size(); ++k) {
    if (later(latest, dev[k])) continue;  // not among the most similar
    std::size_t q = phi_idx[k];
    v.primaries.push_back(ws.worlds()[q]);
    if (!psi_true[q]) {
      v.truth = false;
      v.witnesses.push_back(DominationWitness{ws.worlds()[q], std::nullopt});
    }
  }
  return v;
}

Verdict any_frame_eval(const Scenario& s, const Proposition& phi,
                       const Proposition& psi) {
  if (s.spatial_dim() != 1)
    throw std::invalid_argument("frames require 1+1");
  std::vector<SpacetimePoint> pts;
  pts.reserve(s.points.size());
  for (const auto& np : s.points) pts.push_back(np.location);

  Verdict last;
  for (const auto& fo : enumerate_orderings(pts)) {
    Verdict v = frame_eval(s, phi, psi, LorentzBoost{fo.velocity});
    if (v.truth) {
      v.witness_velocity = fo.velocity;
      v.witness_ordering = fo.order;
      return v;
    }
    last = std::move(v);
  }
  return last;  // false in every realizable frame
}

}  // namespace stc
