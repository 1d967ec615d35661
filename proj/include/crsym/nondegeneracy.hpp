#pragma once

#include <optional>

#include "crsym/solver.hpp"

namespace crsym {

struct NondegeneracyVerdict {
  bool nondegenerate = true;
  Rat degree_cap;
  // A nonzero holomorphic field X with X(Im w - P) = 0 on M_P.
  std::optional<GradedVField> witness;
};

// Searches every achievable weighted degree in [-1, degree_cap] for a
// holomorphic field tangent to M_P in the complex sense. The answer is
// only certified up to the cap.
inline NondegeneracyVerdict holomorphic_nondegeneracy(const Model& model, const Rat& degree_cap = Rat(1)) {
  NondegeneracyVerdict v;
  v.degree_cap = degree_cap;
  for (const auto& d : achievable_degrees(model.mu(), Rat(-1), degree_cap)) {
    auto kernel = solve_graded(model, d, {.condition = Condition::complex});
    if (!kernel.empty()) {
      v.nondegenerate = false;
      v.witness = std::move(kernel.front());
      return v;
    }
  }
  return v;
}

}  // namespace crsym
