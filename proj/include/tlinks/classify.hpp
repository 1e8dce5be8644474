#pragma once

// Geometric-type classification of T-links and augmented parent links from
// their parameters. Every verdict carries certificates naming the rule that
// fired and the integer witnesses needed to re-check its hypotheses.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlinks/errors.hpp"
#include "tlinks/satellite.hpp"
#include "tlinks/tlink.hpp"

namespace tlinks {

enum class VerdictKind {
  Hyperbolic,
  NotHyperbolic,
  Satellite,
  TorusLink,
  AsymptoticallyHyperbolic,
  SatelliteForAllFillings,
  Unknown,
};

enum class Rule {
  TorusLink,
  ParentAllBelowQ,
  ParentNonMultipleAboveQ,
  ParentAnnular,
  ParentSatellite,
  FillingsHyperbolic,
  FillingsSatellite,
  FillingsAnnular,
  TwoTwists,
  SomeParams,
  NotTorus,
  HalfTwistSatellite,
};

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Hyperbolic: return "Hyperbolic";
    case VerdictKind::NotHyperbolic: return "NotHyperbolic";
    case VerdictKind::Satellite: return "Satellite";
    case VerdictKind::TorusLink: return "TorusLink";
    case VerdictKind::AsymptoticallyHyperbolic: return "AsymptoticallyHyperbolic";
    case VerdictKind::SatelliteForAllFillings: return "SatelliteForAllFillings";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

inline const char* to_string(Rule r) {
  switch (r) {
    case Rule::TorusLink: return "torus_link";
    case Rule::ParentAllBelowQ: return "parent_all_below_q";
    case Rule::ParentNonMultipleAboveQ: return "parent_non_multiple_above_q";
    case Rule::ParentAnnular: return "parent_annular";
    case Rule::ParentSatellite: return "parent_satellite";
    case Rule::FillingsHyperbolic: return "fillings_hyperbolic";
    case Rule::FillingsSatellite: return "fillings_satellite";
    case Rule::FillingsAnnular: return "fillings_annular";
    case Rule::TwoTwists: return "two_twists_hyperbolic";
    case Rule::SomeParams: return "some_params_hyperbolic";
    case Rule::NotTorus: return "not_torus";
    case Rule::HalfTwistSatellite: return "halftwist_satellite";
  }
  return "";
}

// Theorem a rule instantiates.
inline const char* anchor(Rule r) {
  switch (r) {
    case Rule::TorusLink: return "TorusBraidClosure";
    case Rule::ParentAllBelowQ:
    case Rule::ParentNonMultipleAboveQ:
    case Rule::ParentAnnular:
    case Rule::ParentSatellite: return "AugmentedParentHyperbolic";
    case Rule::FillingsHyperbolic:
    case Rule::FillingsSatellite:
    case Rule::FillingsAnnular: return "FullTwistAsymptotic";
    case Rule::TwoTwists: return "TwoTwistsHyperbolic";
    case Rule::SomeParams: return "SomeParamsHyperbolic";
    case Rule::NotTorus: return "NonTorusKnots";
    case Rule::HalfTwistSatellite: return "HalfTwistSatellite";
  }
  return "";
}

struct Certificate {
  Rule rule = Rule::TorusLink;
  // Named witness values in a fixed order.
  std::vector<std::pair<std::string, long>> witnesses;

  std::optional<long> witness(const std::string& name) const {
    for (const auto& [k, v] : witnesses)
      if (k == name) return v;
    return std::nullopt;
  }
};

struct GeometricVerdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::vector<Certificate> certificates;
  std::optional<SatelliteDecomposition> decomposition;
};

// ---------------------------------------------------------------------------
// Hypotheses, stated on plain parameters so certificates can be re-checked.

// T((a_1, a_1 s_1), ..., (a_n, a_n s_n), (p, q)) in parameter form.
struct TwistedParams {
  std::vector<int> a;
  std::vector<int> s;  // full twists on a_i strands
  int p = 0;
  int q = 0;
};

inline std::optional<TwistedParams> twisted_params(const TLinkSpec& spec) {
  if (!spec.leading_full_twists()) return std::nullopt;
  TwistedParams out;
  const auto& syl = spec.syllables();
  for (std::size_t i = 0; i + 1 < syl.size(); ++i) {
    out.a.push_back(syl[i].span);
    out.s.push_back(syl[i].exponent / syl[i].span);
  }
  out.p = spec.last().span;
  out.q = spec.last().exponent;
  return out;
}

namespace classify_detail {

inline bool increasing_above_one(const std::vector<int>& a) {
  if (a.empty() || a.front() <= 1) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] <= a[i - 1]) return false;
  return true;
}

inline bool all_positive(const std::vector<int>& s) {
  return std::all_of(s.begin(), s.end(), [](int v) { return v > 0; });
}

}  // namespace classify_detail

// Parent T(p,q) u J_{a_1} ... is hyperbolic iff all a_i < q or some a_i > q is
// not a multiple of q. Returns the a_i that witnesses the second clause, 0
// when the first clause holds, nullopt when neither does.
inline std::optional<int> parent_hyperbolic_witness(int q, const std::vector<int>& a) {
  for (int ai : a)
    if (ai > q && ai % q != 0) return ai;
  if (std::all_of(a.begin(), a.end(), [q](int ai) { return ai < q; })) return 0;
  return std::nullopt;
}

// Hypotheses of the two-full-twist theorem for
// T((a_1, a_1 s_1), ..., (a_n, a_n s_n), (p, q + kp)).
inline bool two_twists_hypotheses(int p, int q, int k, const std::vector<int>& a, const std::vector<int>& s) {
  const std::size_t n = a.size();
  if (n < 2 || s.size() != n) return false;
  if (!classify_detail::increasing_above_one(a) || !classify_detail::all_positive(s)) return false;
  if (std::gcd(p, q) != 1 || std::gcd(p, a.back()) != 1) return false;
  if (!(1 < q && q < a.back() && a.back() < p)) return false;
  if (s.back() < 2 || k < 2) return false;
  return q != 1 || s.front() > 1 || a[1] != a[0] + 1;
}

inline bool some_params_hypotheses(int p, int q, const std::vector<int>& a, const std::vector<int>& s) {
  const std::size_t n = a.size();
  if (n < 2 || s.size() != n) return false;
  if (!classify_detail::increasing_above_one(a) || !classify_detail::all_positive(s)) return false;
  if (std::gcd(p, q) != 1 || !(1 < q && q < a.back() && a.back() < p)) return false;
  if (s[n - 1] < 2 || s[n - 2] < 2) return false;
  const int an = a[n - 1];
  const int prev = a[n - 2];
  return (q < prev && std::gcd(an, prev) == 1) || (q > prev && std::gcd(an, q) == 1);
}

// Which of the four non-torus alternatives holds (1-4), or 0.
inline int not_torus_alternative(int p, int q, const std::vector<int>& a, const std::vector<int>& s) {
  if (a.empty() || s.size() != a.size()) return 0;
  if (!classify_detail::increasing_above_one(a) || !classify_detail::all_positive(s)) return 0;
  if (std::gcd(p, q) != 1 || !(1 < q && q < p) || a.back() >= p) return 0;
  if (std::find(a.begin(), a.end(), q) != a.end()) return 0;
  if (q < a.back()) return 1;
  const bool one_mod_q = (p - 1) % q == 0;
  if (!one_mod_q) return 2;
  if (s.front() > 1) return 3;
  if (a.size() >= 2 && a[1] != a[0] + 1) return 4;
  return 0;
}

namespace classify_detail {

inline void add_list(Certificate& c, const char* prefix, const std::vector<int>& values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    c.witnesses.emplace_back(prefix + std::to_string(i + 1), values[i]);
}

inline Certificate twisted_certificate(Rule rule, const TwistedParams& t) {
  Certificate c{rule, {}};
  c.witnesses.emplace_back("p", t.p);
  c.witnesses.emplace_back("q", t.q);
  c.witnesses.emplace_back("n", static_cast<long>(t.a.size()));
  add_list(c, "a", t.a);
  add_list(c, "s", t.s);
  return c;
}

inline Certificate parent_certificate(Rule rule, const ParentLinkSpec& parent) {
  Certificate c{rule, {}};
  c.witnesses.emplace_back("p", parent.p);
  c.witnesses.emplace_back("q", parent.q);
  c.witnesses.emplace_back("n", static_cast<long>(parent.augmentations.size()));
  add_list(c, "a", parent.augmentations);
  return c;
}

inline std::vector<int> read_list(const Certificate& c, const char* prefix, long n) {
  std::vector<int> out;
  for (long i = 1; i <= n; ++i) {
    auto v = c.witness(prefix + std::to_string(i));
    if (!v) return {};
    out.push_back(static_cast<int>(*v));
  }
  return out;
}

}  // namespace classify_detail

// ---------------------------------------------------------------------------
// Classifiers.

inline GeometricVerdict classify_parent(const ParentLinkSpec& parent) {
  namespace cd = classify_detail;
  const auto& a = parent.augmentations;
  GeometricVerdict v;
  if (auto w = parent_hyperbolic_witness(parent.q, a)) {
    v.kind = VerdictKind::Hyperbolic;
    if (*w == 0) {
      v.certificates.push_back(cd::parent_certificate(Rule::ParentAllBelowQ, parent));
    } else {
      auto c = cd::parent_certificate(Rule::ParentNonMultipleAboveQ, parent);
      c.witnesses.emplace_back("witness_a", *w);
      v.certificates.push_back(std::move(c));
    }
    return v;
  }
  v.kind = VerdictKind::NotHyperbolic;
  const bool annular = a.size() == 1 && a.front() == parent.q;
  v.certificates.push_back(cd::parent_certificate(annular ? Rule::ParentAnnular : Rule::ParentSatellite, parent));
  return v;
}

// Behaviour of T((a_1, a_1 s_1), ..., (p, q)) once every s_i is large.
inline GeometricVerdict classify_asymptotic(const ParentLinkSpec& parent) {
  namespace cd = classify_detail;
  const GeometricVerdict base = classify_parent(parent);
  GeometricVerdict v;
  switch (base.certificates.front().rule) {
    case Rule::ParentAllBelowQ:
    case Rule::ParentNonMultipleAboveQ: {
      v.kind = VerdictKind::AsymptoticallyHyperbolic;
      auto c = cd::parent_certificate(Rule::FillingsHyperbolic, parent);
      if (auto w = base.certificates.front().witness("witness_a")) c.witnesses.emplace_back("witness_a", *w);
      v.certificates.push_back(std::move(c));
      break;
    }
    case Rule::ParentAnnular:
      v.kind = VerdictKind::NotHyperbolic;
      v.certificates.push_back(cd::parent_certificate(Rule::FillingsAnnular, parent));
      break;
    default:
      v.kind = VerdictKind::SatelliteForAllFillings;
      v.certificates.push_back(cd::parent_certificate(Rule::FillingsSatellite, parent));
      break;
  }
  return v;
}

inline std::optional<Certificate> certify_2twists(const TLinkSpec& spec) {
  auto t = twisted_params(spec);
  if (!t || t->p < 2) return std::nullopt;
  const int big_p = t->p;
  const int big_s = t->q;
  const int q = big_s % big_p;
  const int k = big_s / big_p;
  if (!two_twists_hypotheses(big_p, q, k, t->a, t->s)) return std::nullopt;
  auto c = classify_detail::twisted_certificate(Rule::TwoTwists, *t);
  c.witnesses[1] = {"S", big_s};
  c.witnesses.emplace_back("q", q);
  c.witnesses.emplace_back("k", k);
  return c;
}

inline std::optional<Certificate> certify_someparams(const TLinkSpec& spec) {
  auto t = twisted_params(spec);
  if (!t || !some_params_hypotheses(t->p, t->q, t->a, t->s)) return std::nullopt;
  return classify_detail::twisted_certificate(Rule::SomeParams, *t);
}

inline std::optional<Certificate> certify_not_torus(const TLinkSpec& spec) {
  auto t = twisted_params(spec);
  if (!t) return std::nullopt;
  const int alternative = not_torus_alternative(t->p, t->q, t->a, t->s);
  if (alternative == 0) return std::nullopt;
  auto c = classify_detail::twisted_certificate(Rule::NotTorus, *t);
  c.witnesses.emplace_back("alternative", alternative);
  return c;
}

// Re-evaluates the hypotheses of the certificate's rule from its witnesses.
inline bool revalidate(const Certificate& c) {
  namespace cd = classify_detail;
  const auto p = c.witness("p");
  const auto n = c.witness("n");
  if (c.rule == Rule::TorusLink) return p && c.witness("q") && *p >= 2 && *c.witness("q") >= 1;
  if (c.rule == Rule::HalfTwistSatellite) {
    const auto q = c.witness("q");
    const auto rm = c.witness("r_m");
    const auto e = c.witness("leftover_exponent");
    const auto total = c.witness("twist_total");
    const auto weighted = c.witness("sum_r_s");
    if (!p || !q || !rm || !e || !total || !weighted) return false;
    return 1 < *q && *q < *p && *q < *rm * *q && *rm * *q < *p && *e == *p - *rm * *q &&
           *total == *q * *weighted + *q * *rm;
  }
  if (!p || !n || *n < 1) return false;
  const auto a = cd::read_list(c, "a", *n);
  if (static_cast<long>(a.size()) != *n) return false;

  switch (c.rule) {
    case Rule::ParentAllBelowQ:
    case Rule::ParentNonMultipleAboveQ:
    case Rule::ParentAnnular:
    case Rule::ParentSatellite:
    case Rule::FillingsHyperbolic:
    case Rule::FillingsSatellite:
    case Rule::FillingsAnnular: {
      const int q = static_cast<int>(*c.witness("q"));
      try {
        ParentLinkSpec parent(static_cast<int>(*p), q, a);
      } catch (const ParameterError&) {
        return false;
      }
      const auto w = parent_hyperbolic_witness(q, a);
      switch (c.rule) {
        case Rule::ParentAllBelowQ: return w && *w == 0;
        case Rule::ParentNonMultipleAboveQ: {
          const auto wa = c.witness("witness_a");
          return w && wa && std::find(a.begin(), a.end(), *wa) != a.end() && *wa > q && *wa % q != 0;
        }
        case Rule::FillingsHyperbolic: return w.has_value();
        case Rule::ParentAnnular:
        case Rule::FillingsAnnular: return !w && a.size() == 1 && a.front() == q;
        default: return !w && !(a.size() == 1 && a.front() == q);
      }
    }
    case Rule::TwoTwists: {
      const auto s = cd::read_list(c, "s", *n);
      const auto q = c.witness("q");
      const auto k = c.witness("k");
      const auto big_s = c.witness("S");
      if (!q || !k || !big_s || *big_s != *q + *k * *p) return false;
      return two_twists_hypotheses(static_cast<int>(*p), static_cast<int>(*q), static_cast<int>(*k), a, s);
    }
    case Rule::SomeParams: {
      const auto s = cd::read_list(c, "s", *n);
      return some_params_hypotheses(static_cast<int>(*p), static_cast<int>(*c.witness("q")), a, s);
    }
    case Rule::NotTorus: {
      const auto s = cd::read_list(c, "s", *n);
      const auto alt = c.witness("alternative");
      return alt && not_torus_alternative(static_cast<int>(*p), static_cast<int>(*c.witness("q")), a, s) == *alt;
    }
    default: return false;
  }
}

inline Certificate satellite_certificate(const TLinkSpec& spec, const SatelliteDecomposition& d) {
  const auto& comp = d.companion.syllables();
  long weighted = 0;
  for (std::size_t i = 0; i < comp.size(); ++i)
    weighted += static_cast<long>(comp[i].span) * (comp[i].exponent - (i + 1 == comp.size() ? 1 : 0));
  Certificate c{Rule::HalfTwistSatellite, {}};
  c.witnesses.emplace_back("p", spec.last().span);
  c.witnesses.emplace_back("q", spec.last().exponent);
  c.witnesses.emplace_back("m", static_cast<long>(comp.size()));
  c.witnesses.emplace_back("r_m", comp.back().span);
  c.witnesses.emplace_back("sum_r_s", weighted);
  c.witnesses.emplace_back("twist_total", d.twist_total);
  c.witnesses.emplace_back("leftover_exponent", d.leftover_exponent);
  c.witnesses.emplace_back("winding", d.winding);
  return c;
}

// Repeats absorb_interior_q_twists until it no longer applies.
inline TLinkSpec absorb_all(const TLinkSpec& spec) {
  TLinkSpec out = spec;
  for (auto r = absorb_interior_q_twists(out); r.applied; r = absorb_interior_q_twists(out)) out = r.spec;
  return out;
}

// Full pipeline: absorb interior full twists on q strands, then try the
// torus, satellite, effective hyperbolicity, non-torus and asymptotic rules.
// Every rule that fires contributes a certificate.
inline GeometricVerdict classify(const TLinkSpec& input) {
  const TLinkSpec spec = absorb_all(input);

  GeometricVerdict v;
  if (spec.size() == 1) {
    v.kind = VerdictKind::TorusLink;
    v.certificates.push_back({Rule::TorusLink, {{"p", spec.last().span}, {"q", spec.last().exponent}}});
    return v;
  }

  if (auto d = halftwist_satellite(spec)) {
    v.certificates.push_back(satellite_certificate(spec, *d));
    v.decomposition = std::move(d);
  }

  bool hyperbolic = false;
  if (auto c = certify_2twists(spec)) {
    v.certificates.push_back(std::move(*c));
    hyperbolic = true;
  }
  if (auto c = certify_someparams(spec)) {
    v.certificates.push_back(std::move(*c));
    hyperbolic = true;
  }
  try {
    if (auto t = transpose_full_twisted(spec); t.applied) {
      if (auto c = certify_someparams(t.spec)) {
        c->witnesses.emplace_back("transposed", 1);
        v.certificates.push_back(std::move(*c));
        hyperbolic = true;
      }
    }
  } catch (const ParameterError&) {
    // transposed parameters are not a valid T-link
  }
  if (auto c = certify_not_torus(spec)) v.certificates.push_back(std::move(*c));

  std::optional<GeometricVerdict> asymptotic;
  if (auto t = twisted_params(spec)) {
    try {
      asymptotic = classify_asymptotic(ParentLinkSpec(t->p, t->q, t->a));
    } catch (const ParameterError&) {
      // not the filling of a valid parent
    }
  }
  if (asymptotic)
    v.certificates.insert(v.certificates.end(), asymptotic->certificates.begin(), asymptotic->certificates.end());

  if (v.decomposition)
    v.kind = VerdictKind::Satellite;
  else if (hyperbolic)
    v.kind = VerdictKind::Hyperbolic;
  else if (asymptotic)
    v.kind = asymptotic->kind;
  else
    v.kind = VerdictKind::Unknown;
  return v;
}

}  // namespace tlinks
