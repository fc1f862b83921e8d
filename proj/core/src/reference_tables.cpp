#include "dct3mg/reference_tables.hpp"

#include <cmath>
#include <stdexcept>

namespace dct3mg {

namespace {

struct Col {
    int q;
    int r;
};

constexpr Col kCols[5] = {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}};
constexpr int kSizes[6] = {16, 32, 64, 128, 256, 512};

// -1 marks a cell the reference leaves blank.
constexpr int kT1Tgm[6][5] = {
    {7, 15, 13, 34, 32}, {7, 16, 15, 35, 34}, {7, 16, 16, 35, 35},
    {7, 16, 16, 35, 35}, {7, 16, 16, 35, 35}, {7, 16, 16, 35, 35},
};
constexpr int kT1Mgm[6][5] = {
    {1, 1, 1, 1, 1},     {7, 16, 15, 34, 32}, {7, 17, 16, 35, 34},
    {7, 18, 16, 35, 35}, {7, 18, 16, 35, 35}, {7, 18, 16, 35, 35},
};
constexpr int kT2Tgm[6][5] = {
    {15, 34, 30, -1, -1}, {16, 36, 35, 71, 67}, {16, 36, 36, 74, 73},
    {16, 36, 36, 74, 73}, {16, 36, 36, 74, 73}, {16, 36, 36, 74, 73},
};
constexpr int kT2Mgm[6][5] = {
    {1, 1, 1, 1, 1},      {16, 36, 35, 71, 67}, {16, 36, 36, 74, 73},
    {16, 36, 36, 74, 73}, {16, 37, 36, 74, 73}, {16, 37, 36, 74, 73},
};
constexpr int kT3Tgm1D[6] = {15, 14, 12, 11, 10, 8};
constexpr int kT3Mgm1D[6] = {1, 14, 13, 13, 12, 10};
constexpr int kT3Tgm2D[6] = {7, 7, 7, 7, 7, 7};
constexpr int kT3Mgm2D[6] = {1, 7, 7, 6, 6, 6};

void push_zero_case(std::vector<TableCell>& cells, int table, int dim, const int tgm[6][5],
                    const int mgm[6][5]) {
    for (int si = 0; si < 6; ++si)
        for (int ci = 0; ci < 5; ++ci) {
            const Col col = kCols[ci];
            const int tol = (table == 2 && col.q == 3) ? 3 : 2;
            if (tgm[si][ci] >= 0)
                cells.push_back({table, Method::tgm, dim, ZeroLoc::zero, col.q, col.r, kSizes[si],
                                 tgm[si][ci], tol});
            if (mgm[si][ci] >= 0)
                cells.push_back({table, Method::vcycle, dim, ZeroLoc::zero, col.q, col.r, kSizes[si],
                                 mgm[si][ci], tol});
        }
}

} // namespace

std::vector<TableCell> table_cells(int table) {
    std::vector<TableCell> cells;
    switch (table) {
        case 1:
            push_zero_case(cells, 1, 1, kT1Tgm, kT1Mgm);
            break;
        case 2:
            push_zero_case(cells, 2, 2, kT2Tgm, kT2Mgm);
            break;
        case 3:
            for (int si = 0; si < 6; ++si) {
                cells.push_back({3, Method::tgm, 1, ZeroLoc::pi, 1, std::nullopt, kSizes[si], kT3Tgm1D[si], 3});
                cells.push_back({3, Method::vcycle, 1, ZeroLoc::pi, 1, std::nullopt, kSizes[si], kT3Mgm1D[si], 3});
            }
            for (int si = 0; si < 6; ++si) {
                cells.push_back({3, Method::tgm, 2, ZeroLoc::pi, 1, std::nullopt, kSizes[si], kT3Tgm2D[si], 3});
                cells.push_back({3, Method::vcycle, 2, ZeroLoc::pi, 1, std::nullopt, kSizes[si], kT3Mgm2D[si], 3});
            }
            break;
        default:
            throw std::invalid_argument("table_cells: table must be 1, 2, or 3");
    }
    return cells;
}

CellOutcome run_cell(const TableCell& cell) {
    SolveOptions opts;
    opts.method = cell.method;
    const ZeroInfo zero{cell.zero, 2 * cell.q};
    CellOutcome out;
    out.cell = cell;
    if (cell.dim == 1) {
        const Hierarchy1D h =
            build_hierarchy_1d(problem_symbol_1d(cell.zero, cell.q), zero, cell.r, cell.m, cell.method);
        const std::vector<double> b = make_rhs(h, opts.rhs, opts.seed);
        out.report = (cell.method == Method::tgm) ? tgm_solve(h, b, opts) : vcycle_solve(h, b, opts);
    } else {
        const Hierarchy2D h =
            build_hierarchy_2d(problem_symbol_2d(cell.zero, cell.q), zero, cell.r, cell.m, cell.method);
        const std::vector<double> b = make_rhs(h, opts.rhs, opts.seed);
        out.report = (cell.method == Method::tgm) ? tgm_solve(h, b, opts) : vcycle_solve(h, b, opts);
    }
    out.pass = out.report.converged && std::abs(out.report.iterations - cell.expected) <= cell.tol;
    return out;
}

} // namespace dct3mg
