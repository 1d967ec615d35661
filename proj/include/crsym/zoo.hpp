#pragma once

// Built-in models with the verdicts they are expected to produce.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crsym/analysis.hpp"
#include "crsym/model.hpp"
#include "crsym/parser.hpp"

namespace crsym {

struct ZooExpectation {
  LeviVerdict::Status levi;
  bool nondegenerate;
  GradingShape shape;
  int jet_order;
  std::map<Rat, std::size_t> dims;  // every nonzero component
  std::optional<std::pair<std::size_t, DichotomyForm>> dichotomy;  // 1-based l
};

struct ZooEntry {
  std::string name;
  std::string description;
  std::vector<Rat> mu;
  std::vector<std::string> sos;  // holomorphic Q_j, or empty
  std::string expr;              // real P when sos is empty
  ZooExpectation expect;

  Model build() const {
    const std::size_t n = mu.size();
    if (!sos.empty()) {
      std::vector<HoloPoly> q;
      for (const auto& s : sos) q.push_back(parse_holo(s, n));
      return build_sos(mu, q);
    }
    return validate(mu, parse_real(expr, n)).value();
  }
};

inline std::vector<ZooEntry> zoo() {
  using S = LeviVerdict::Status;
  const Rat h(1, 2), q(1, 4);
  return {
      {"hyperquadric1", "Im w = |z1|^2", {h}, {"z1"}, "",
       {S::psd_certified, true, GradingShape::thm_1_1, 2,
        {{Rat(-1), 1}, {-h, 2}, {Rat(0), 2}, {h, 2}, {Rat(1), 1}}, std::nullopt}},
      {"hyperquadric2", "Im w = |z1|^2 + |z2|^2", {h, h}, {"z1", "z2"}, "",
       {S::psd_certified, true, GradingShape::thm_1_1, 2,
        {{Rat(-1), 1}, {-h, 4}, {Rat(0), 5}, {h, 4}, {Rat(1), 1}}, std::nullopt}},
      {"sos_quartic_1var", "Im w = |z1|^4", {q}, {"z1^2"}, "",
       {S::psd_certified, true, GradingShape::thm_5_3, 2, {{Rat(-1), 1}, {Rat(0), 2}, {Rat(1), 1}}, std::nullopt}},
      {"sos_1_4", "Im w = |z1|^2 + |z2|^4", {h, q}, {"z1", "z2^2"}, "",
       {S::psd_certified, true, GradingShape::thm_5_4, 2,
        {{Rat(-1), 1}, {-h, 2}, {Rat(0), 3}, {h, 2}, {Rat(1), 1}}, std::nullopt}},
      {"sos_quartic_2var", "Im w = |z1^2|^2 + |z1 z2|^2 + |z2^2|^2", {q, q}, {"z1^2", "z1 z2", "z2^2"}, "",
       {S::psd_certified, true, GradingShape::thm_5_3, 2, {{Rat(-1), 1}, {Rat(0), 3}, {Rat(1), 1}}, std::nullopt}},
      {"tube_x1z2", "Im w = Re(z1) |z2|^2", {h, q}, {}, "Re(z1)*abs2(z2)",
       {S::not_psd, true, GradingShape::other, 1,
        {{Rat(-1), 1}, {-h, 1}, {Rat(0), 3}, {h, 1}, {Rat(1), 1}}, std::pair{std::size_t{1}, DichotomyForm::linear}}},
      {"degenerate_z1_in_c3", "Im w = |z1|^2 in C^3", {h, h}, {"z1"}, "",
       {S::psd_certified, false, GradingShape::other, 2,
        {{Rat(-1), 1}, {-h, 4}, {Rat(0), 6}, {h, 10}, {Rat(1), 13}}, std::nullopt}},
  };
}

inline std::optional<ZooEntry> zoo_entry(const std::string& name) {
  for (auto& e : zoo())
    if (e.name == name) return e;
  return std::nullopt;
}

}  // namespace crsym
