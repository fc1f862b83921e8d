#pragma once

#include "dct3mg/solver.hpp"

#include <optional>
#include <vector>

namespace dct3mg {

// One cell of an embedded reference table: the problem configuration, the
// published iteration count, and the tolerance band used for pass/fail.
struct TableCell {
    int table = 0;
    Method method = Method::tgm;
    int dim = 1;
    ZeroLoc zero = ZeroLoc::zero;
    int q = 1;
    std::optional<int> r; // empty means auto
    int m = 0;            // per-dimension fine size
    int expected = 0;
    int tol = 2;
};

struct CellOutcome {
    TableCell cell;
    SolveReport report;
    bool pass = false;
};

std::vector<TableCell> table_cells(int table);

// Runs one cell with the reproduction protocol: random-solution rhs, seed 42,
// zero initial guess, relative residual 1e-7.
CellOutcome run_cell(const TableCell& cell);

} // namespace dct3mg
