#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "clines/fano.hpp"

namespace clines {

using Json = nlohmann::ordered_json;

/// Exact integers: a JSON number when it fits in 64 bits, otherwise a decimal string.
inline Json exact(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

inline Json exact(const std::optional<mpz_class>& z) { return z ? exact(*z) : Json(nullptr); }

inline Json report_json(const ContainmentEvidence& e) {
  return Json{{"equation", e.equation}, {"degree", e.degree}, {"value", e.value}};
}

inline Json report_json(const CertificateReport& c) {
  Json checks = Json::array();
  for (const auto& r : c.radical_checks)
    checks.push_back({{"equation", r.equation}, {"degree", r.degree}, {"member", r.member}});
  Json witnesses = Json::array();
  for (const auto& w : c.witnesses) {
    Json item{{"direction", w.direction}, {"ambient", w.ambient}, {"contained", w.contained}};
    item["evidence"] = w.evidence ? report_json(*w.evidence) : Json(nullptr);
    witnesses.push_back(std::move(item));
  }
  return Json{{"k", c.k},
              {"dim", c.dimension},
              {"expected_dim", c.expected_dimension},
              {"excess", c.excess},
              {"method", to_string(c.method)},
              {"radical_checks", std::move(checks)},
              {"requested_witnesses", c.requested_witnesses},
              {"witnesses", std::move(witnesses)},
              {"verdict", to_string(c.verdict)},
              {"note", c.note}};
}

inline Json report_json(const SigmaRecord& s) {
  Json out;
  out["k"] = s.k == 0 ? Json("inf") : Json(s.k);
  out["dim"] = s.dimension;
  out["expected_dim"] = s.expected_dimension;
  out["degree"] = exact(s.degree);
  return out;
}

/// Report body; the caller prepends "config".
inline Json report_json(const AnalysisReport& r, Json config = Json::object()) {
  Json out;
  out["config"] = std::move(config);
  out["variety"] = Json{{"field", r.field.to_string()},
                        {"ambient_dimension", r.ambient_dimension},
                        {"variables", r.variables},
                        {"equations", r.equations},
                        {"degrees", r.degrees}};
  out["point"] = r.point;
  out["n"] = r.n;
  out["tangent_basis"] = r.tangent_basis;
  Json chain = Json::array();
  for (const auto& s : r.sigma_chain) chain.push_back(report_json(s));
  out["sigma_chain"] = std::move(chain);
  out["sigma_infinity"] = report_json(r.sigma_infinity);
  out["bound"] = Json{{"k", r.bound.k},
                      {"n_factorial", exact(r.bound.n_factorial)},
                      {"degree", exact(r.bound.degree)},
                      {"satisfied", r.bound.satisfied ? Json(*r.bound.satisfied) : Json(nullptr)}};
  out["stabilization_k"] = r.stabilization_k ? Json(*r.stabilization_k) : Json(nullptr);
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(report_json(c));
  out["certificates"] = std::move(certs);
  if (r.rational_lines) {
    Json lines = Json::array();
    for (const auto& l : *r.rational_lines)
      lines.push_back({{"direction", l.direction}, {"ambient", l.ambient}, {"contained", l.contained}});
    out["rational_lines"] = std::move(lines);
  } else {
    out["rational_lines"] = nullptr;
  }
  out["flags"] = r.flags;
  return out;
}

}  // namespace clines
