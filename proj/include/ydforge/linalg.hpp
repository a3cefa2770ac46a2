#pragma once

#include <optional>
#include <vector>

#include "ydforge/svec.hpp"

namespace ydforge {

// One linear equation: sparse lhs coefficients (by unknown index) and a rhs.
struct LinEq {
  SVec lhs;
  Scalar rhs;
};

// Exact sparse Gaussian elimination over the scalar field.
// Returns a solution with all free unknowns set to zero, or nullopt when the
// system is inconsistent. Deterministic: pivot choice depends only on the
// input order and sparsity pattern.
std::optional<std::vector<Scalar>> solve_linear(std::size_t num_unknowns, std::vector<LinEq> eqs);

}  // namespace ydforge
