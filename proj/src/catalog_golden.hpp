#pragma once

#include <vector>

#include "ydforge/catalog.hpp"

namespace ydforge::golden {

// Frozen expectation tables, kept apart from the constructors so a failing
// comparison points at one table cell. Flags are filled by the builders.

GoldenTables sweedler();
// with_tables: the printed tables assume a symmetric coefficient matrix.
GoldenTables en(std::size_t n, const std::vector<std::vector<Scalar>>& A,
                bool with_tables);
GoldenTables slq2();
GoldenTables suzuki(int nu, int lambda);
GoldenTables group_c2();
GoldenTables group_s3();
GoldenTables dual_s3();

}  // namespace ydforge::golden
