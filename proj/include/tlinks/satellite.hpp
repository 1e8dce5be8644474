#pragma once

// Satellite decomposition of half-twisted T-links
//   K = T((a_1,b_1),...,(a_n,b_n),(r_1 q, s_1 q),...,(r_m q, s_m q),(p,q))
// with companion T((r_1,s_1),...,(r_m,s_m+1)) and a q-strand pattern, plus
// an independent check through the Alexander polynomial and genus.

#include <optional>
#include <string>
#include <vector>

#include "tlinks/braid.hpp"
#include "tlinks/invariants.hpp"
#include "tlinks/tlink.hpp"

namespace tlinks {

struct SatelliteDecomposition {
  TLinkSpec companion;
  // Word on q strands:
  // (a_1,b_1)...(a_n,b_n) . (sigma_{q-1}...sigma_1)^E . (q, twist_total).
  BraidWord pattern;
  int winding = 0;
  // q * (sum r_i s_i) + q * r_m
  int twist_total = 0;
  // E = p - r_m q, the number of passes of the leftover strands.
  int leftover_exponent = 0;
};

// Name of the leftover-exponent convention reported alongside results.
inline constexpr const char* leftover_exponent_convention = "p - r_m*q";

// Pattern match only; no check on the companion.
inline std::optional<SatelliteDecomposition> halftwist_pattern(const TLinkSpec& spec) {
  const auto& syl = spec.syllables();
  const int p = spec.last().span;
  const int q = spec.last().exponent;
  if (!(1 < q && q < p) || syl.size() < 2) return std::nullopt;

  std::size_t i = 0;
  std::vector<Syllable> leading;
  while (i + 1 < syl.size() && syl[i].span <= q) leading.push_back(syl[i++]);
  std::vector<Syllable> companion;
  for (; i + 1 < syl.size(); ++i) {
    const auto& s = syl[i];
    if (s.span % q != 0 || s.exponent % q != 0 || s.span / q < 2) return std::nullopt;
    companion.push_back({s.span / q, s.exponent / q});
  }
  if (companion.empty()) return std::nullopt;

  int weighted = 0;
  for (const auto& c : companion) weighted += c.span * c.exponent;
  const int rm = companion.back().span;

  SatelliteDecomposition d;
  d.winding = q;
  d.twist_total = q * weighted + q * rm;
  d.leftover_exponent = p - rm * q;
  companion.back().exponent += 1;
  d.companion = TLinkSpec(companion);

  BraidWord pattern(q);
  for (const auto& s : leading) pattern.append(torus_braid(s.span, s.exponent, q));
  for (int rep = 0; rep < d.leftover_exponent; ++rep)
    for (int k = q - 1; k >= 1; --k) pattern.push_back({k, 1});
  pattern.append(torus_braid(q, d.twist_total, q));
  d.pattern = std::move(pattern);
  return d;
}

// The decomposition, when the spec has the half-twisted shape and the
// companion closes to a nontrivial knot.
inline std::optional<SatelliteDecomposition> halftwist_satellite(const TLinkSpec& spec) {
  auto d = halftwist_pattern(spec);
  if (!d) return std::nullopt;
  const BraidWord companion = tlink_braid(d->companion);
  if (closure_data(companion).component_count != 1) return std::nullopt;
  if (bennequin_genus(companion) == 0) return std::nullopt;
  return d;
}

struct SatelliteReport {
  bool alexander_ok = false;
  bool genus_ok = false;
  Polynomial knot_alexander;
  Polynomial pattern_alexander;
  Polynomial companion_alexander;
  // pattern(t) * companion(t^q), normalized
  Polynomial product;
  int knot_genus = 0;
  int pattern_genus = 0;
  int companion_genus = 0;

  bool passed() const noexcept { return alexander_ok && genus_ok; }
};

// Checks Delta_K(t) = Delta_P(t) Delta_C(t^q) up to units and
// g(K) = g(P) + q g(C). Throws UnsupportedInput when any closure involved is
// not a knot.
inline SatelliteReport verify_satellite(const TLinkSpec& spec, const SatelliteDecomposition& d) {
  const BraidWord knot = tlink_braid(spec);
  const BraidWord companion = tlink_braid(d.companion);
  require_knot_closure(knot, "verify_satellite");
  require_knot_closure(companion, "verify_satellite (companion)");
  require_knot_closure(d.pattern, "verify_satellite (pattern)");

  SatelliteReport r;
  r.knot_alexander = alexander(knot);
  r.pattern_alexander = alexander(d.pattern);
  r.companion_alexander = alexander(companion);
  r.product = (r.pattern_alexander * r.companion_alexander.substitute_power(d.winding)).normalized();
  r.alexander_ok = r.knot_alexander == r.product;

  r.knot_genus = bennequin_genus(knot);
  r.pattern_genus = bennequin_genus(d.pattern);
  r.companion_genus = bennequin_genus(companion);
  r.genus_ok = r.knot_genus == r.pattern_genus + d.winding * r.companion_genus;
  return r;
}

}  // namespace tlinks
