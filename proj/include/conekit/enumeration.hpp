#pragma once

#include "conekit/types.hpp"

#include <vector>

namespace conekit {

struct SliceEnumeration {
  std::vector<VectorQ> points;  // lexicographically sorted
  bool truncated = false;       // stopped at max_points
};

/// All integral x with row_i . x = target_i for every constraint and x^T G x = norm. The form
/// must be negative definite on the directions left free by the constraints (otherwise
/// NotNegativeDefinite is thrown), which makes the solution set finite.
SliceEnumeration enumerate_norm_slice(const MatrixQ& gram, const std::vector<VectorQ>& rows,
                                      const std::vector<Rational>& targets, const Rational& norm,
                                      std::size_t max_points = 1000000);

}  // namespace conekit
