#include "ydforge/linalg.hpp"

#include <cstddef>
#include <limits>

namespace ydforge {

std::optional<std::vector<Scalar>> solve_linear(std::size_t num_unknowns, std::vector<LinEq> eqs) {
  const std::size_t m = eqs.size();
  std::vector<bool> used_row(m, false);
  std::vector<bool> pivoted_col(num_unknowns, false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)

  for (;;) {
    // Sparsest unused nonempty row; ties break toward the earliest row.
    std::size_t best = m;
    std::size_t best_nnz = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < m; ++r) {
      if (used_row[r] || eqs[r].lhs.empty()) continue;
      if (eqs[r].lhs.size() < best_nnz) {
        best_nnz = eqs[r].lhs.size();
        best = r;
      }
    }
    if (best == m) break;

    std::size_t prow = best;
    std::size_t pcol = eqs[prow].lhs.begin()->first;
    Scalar pval = eqs[prow].lhs.begin()->second;
    used_row[prow] = true;
    pivoted_col[pcol] = true;
    pivots.emplace_back(prow, pcol);

    // Normalize the pivot row, then eliminate pcol everywhere else.
    if (!pval.is_one()) {
      Scalar inv = pval.inverse();
      for (auto& [c, v] : eqs[prow].lhs) v *= inv;
      eqs[prow].rhs *= inv;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == prow) continue;
      auto it = eqs[r].lhs.find(pcol);
      if (it == eqs[r].lhs.end()) continue;
      Scalar f = it->second;
      eqs[r].lhs.erase(it);
      for (const auto& [c, v] : eqs[prow].lhs) {
        if (c == pcol) continue;
        svec_add(eqs[r].lhs, c, -(f * v));
      }
      eqs[r].rhs -= f * eqs[prow].rhs;
    }
  }

  for (std::size_t r = 0; r < m; ++r)
    if (eqs[r].lhs.empty() && !eqs[r].rhs.is_zero()) return std::nullopt;

  std::vector<Scalar> x(num_unknowns, Scalar(0));
  for (const auto& [prow, pcol] : pivots) {
    // After full elimination the pivot row reads x[pcol] + (free terms) = rhs;
    // free unknowns are zero, so the other entries (all free columns) drop out.
    x[pcol] = eqs[prow].rhs;
  }
  return x;
}

}  // namespace ydforge
