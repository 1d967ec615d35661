#pragma once

// JSON serialization of models, verdicts and gradings. Object keys are
// emitted in sorted order and nothing time-dependent is included unless
// timings are requested, so equal inputs give byte-identical reports.

#include <json.hpp>
#include <string>

#include "crsym/analysis.hpp"
#include "crsym/nondegeneracy.hpp"

namespace crsym {

using json = nlohmann::json;

inline constexpr int kReportSchema = 1;

inline json to_json(const Rat& r) { return r.str(); }
inline json to_json(const GaussRat& c) { return {{"re", c.re.str()}, {"im", c.im.str()}}; }

inline json to_json(const MultiIndex& a) {
  json j = json::array();
  for (std::size_t k = 0; k < a.size(); ++k) j.push_back(a[k]);
  return j;
}

inline json to_json(const std::vector<Rat>& v) {
  json j = json::array();
  for (const auto& r : v) j.push_back(r.str());
  return j;
}

inline json to_json(const RealPoly& P) {
  json terms = json::array();
  for (const auto& [k, c] : P.terms())
    terms.push_back({{"alpha", to_json(k.z)}, {"beta", to_json(k.zb)}, {"re", c.re.str()}, {"im", c.im.str()}});
  return {{"terms", terms}};
}

inline json to_json(const VField& X) {
  json slots = json::array();
  for (std::size_t s = 0; s <= X.n(); ++s) {
    json terms = json::array();
    for (const auto& [k, c] : X.slot(s).terms())
      terms.push_back({{"z", to_json(k.z)}, {"w", k.w}, {"c", to_json(c)}});
    slots.push_back(terms);
  }
  return {{"text", to_string(X)}, {"slots", slots}};
}

inline json model_json(const Model& m) {
  json j{{"n", m.n()}, {"mu", to_json(m.mu().vector())}, {"P", to_json(m.P())}, {"P_text", to_string(m.P())}};
  if (m.is_sos()) {
    json q = json::array();
    for (const auto& f : m.sos_factors()) q.push_back(to_string(f));
    j["sos"] = q;
  }
  return j;
}

inline json violations_json(const std::vector<Violation>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back({{"kind", to_string(v.kind)}, {"detail", v.detail}});
  return arr;
}

inline json to_json(const LeviVerdict& v) {
  json j{{"status", to_string(v.status)}, {"samples_checked", v.samples_checked}, {"tolerance", v.tolerance}};
  if (v.witness) {
    json pt = json::array();
    for (const auto& c : v.witness->point) pt.push_back(to_json(c));
    json idx = json::array();
    for (auto i : v.witness->minor.indices) idx.push_back(i + 1);
    j["witness"] = {{"point", pt}, {"minor", {{"indices", idx}, {"value", v.witness->minor.value.str()}}}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline json to_json(const NondegeneracyVerdict& v) {
  json j{{"nondegenerate", v.nondegenerate}, {"degree_cap", v.degree_cap.str()}};
  if (v.witness)
    j["witness"] = {{"degree", v.witness->degree.str()}, {"field", to_json(v.witness->field)}};
  else
    j["witness"] = nullptr;
  return j;
}

inline json to_json(const GradedComponent& c) {
  json basis = json::array();
  for (const auto& X : c.basis) basis.push_back(to_json(X));
  return {{"degree", c.degree.str()},
          {"dim", c.dim()},
          {"rigid_dim", c.rigid_dim},
          {"ansatz_dim", c.ansatz_dim},
          {"basis", basis}};
}

inline json to_json(const GradingReport& r) {
  json comps = json::array();
  for (const auto& c : r.components) comps.push_back(to_json(c));
  json ext = json::array();
  for (const auto& c : r.extended_findings) ext.push_back(to_json(c));
  json dims = json::object();
  for (const auto& c : r.components) dims[c.degree.str()] = c.dim();
  json complement = json::array();
  for (const auto& X : r.g0.complement) complement.push_back(to_json(X));
  return {{"components", comps},
          {"dims", dims},
          {"total_dim", r.total_dim},
          {"has_gc", r.has_gc},
          {"has_gn", r.has_gn},
          {"gc_weights", to_json(r.gc_weights)},
          {"gn_weights", to_json(r.gn_weights)},
          {"g0", {{"euler_in_span", r.g0.euler_in_span}, {"complement", complement}}},
          {"extended_findings", ext}};
}

inline json to_json(const DichotomyEntry& e) {
  json parts = json::array();
  for (const auto& p : e.parts) parts.push_back(to_string(p));
  return {{"l", e.l + 1}, {"form", to_string(e.form)}, {"parts", parts}, {"note", e.note}};
}

inline json to_json(const StructureVerdict& v) {
  json dich = json::array();
  for (const auto& e : v.dichotomy) dich.push_back(to_json(e));
  return {{"grading_shape", to_string(v.grading_shape)},
          {"gc_zero", v.gc_zero},
          {"gn_weight_half_only", v.gn_weight_half_only},
          {"jet_order", v.jet_order},
          {"balanced", v.balanced},
          {"kappa", v.kappa},
          {"rotations_real_part_zero", v.rotations_real_part_zero},
          {"rotations_unsupported", v.rotations_unsupported},
          {"dichotomy", dich}};
}

}  // namespace crsym
