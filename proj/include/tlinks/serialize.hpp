#pragma once

// JSON renderings with a fixed key order, so identical inputs give
// byte-identical output.

#include <optional>
#include <string>

#include <json.hpp>

#include "tlinks/braid.hpp"
#include "tlinks/classify.hpp"
#include "tlinks/garside.hpp"
#include "tlinks/laurent.hpp"
#include "tlinks/satellite.hpp"
#include "tlinks/tlink.hpp"

namespace tlinks {

using Json = nlohmann::ordered_json;

// {"exponent": coefficient}, ascending exponent.
inline Json to_json(const Polynomial& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c;
  return out;
}

inline Json to_json(const Certificate& c) {
  Json w = Json::object();
  for (const auto& [k, v] : c.witnesses) w[k] = v;
  return Json{{"rule", to_string(c.rule)}, {"anchor", anchor(c.rule)}, {"witnesses", std::move(w)}};
}

inline Json to_json(const SatelliteDecomposition& d, const std::optional<SatelliteReport>& report) {
  Json verified = Json::object();
  verified["alexander"] = report ? Json(report->alexander_ok) : Json(nullptr);
  verified["genus"] = report ? Json(report->genus_ok) : Json(nullptr);
  return Json{{"companion", format_tlink(d.companion)},
              {"pattern", format_word(d.pattern)},
              {"pattern_strands", d.pattern.strands()},
              {"winding", d.winding},
              {"twist_total", d.twist_total},
              {"leftover_exponent", d.leftover_exponent},
              {"leftover_convention", leftover_exponent_convention},
              {"verified", std::move(verified)}};
}

inline Json to_json(const std::string& input, const GeometricVerdict& v,
                    const std::optional<SatelliteReport>& report = std::nullopt) {
  Json certs = Json::array();
  for (const auto& c : v.certificates) certs.push_back(to_json(c));
  Json out{{"input", input}, {"kind", to_string(v.kind)}, {"certificates", std::move(certs)}};
  if (v.decomposition) out["decomposition"] = to_json(*v.decomposition, report);
  return out;
}

// Verdict for a T-link; a satellite decomposition is checked against the
// invariants unless `verify` is false.
struct VerdictReport {
  GeometricVerdict verdict;
  std::optional<SatelliteReport> satellite;
  Json json;

  bool verification_failed() const { return satellite && !satellite->passed(); }
};

inline VerdictReport classify_report(const TLinkSpec& spec, bool verify = true) {
  VerdictReport r;
  r.verdict = classify(spec);
  if (r.verdict.decomposition && verify) r.satellite = verify_satellite(absorb_all(spec), *r.verdict.decomposition);
  r.json = to_json(format_tlink(spec), r.verdict, r.satellite);
  return r;
}

inline VerdictReport classify_report(const ParentLinkSpec& parent) {
  VerdictReport r;
  r.verdict = classify_parent(parent);
  r.json = to_json(format_parent(parent), r.verdict);
  return r;
}

inline Json to_json(const NormalForm& nf) {
  Json factors = Json::array();
  for (const auto& f : nf.factors) {
    Json images = Json::array();
    for (int x : f.images()) images.push_back(x + 1);
    factors.push_back(std::move(images));
  }
  return Json{{"strands", nf.strands},
              {"infimum", nf.infimum},
              {"supremum", nf.supremum()},
              {"factors", std::move(factors)},
              {"text", format_normal_form(nf)}};
}

inline Json to_json(const BraidIndex& b) {
  return Json{{"lower", b.lower}, {"upper", b.upper}, {"exact", b.exact}, {"method", b.method}};
}

inline Json to_json(const ClosureData& d) {
  return Json{{"components", d.component_count}, {"linking", d.linking}, {"exponent_sum", d.exponent_sum}};
}

}  // namespace tlinks
