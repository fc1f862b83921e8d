#pragma once

#include "dct3mg/analysis.hpp"
#include "dct3mg/reference_tables.hpp"
#include "dct3mg/solver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dct3mg {

enum class OutputFormat { json, csv, markdown };

struct RunMeta {
    std::string method;
    int dim = 1;
    int q = 1;
    int r = 0; // projector order used at the finest level (0 when none)
    std::vector<int> sizes;
    std::uint64_t seed = 42;
};

// Per-level view of a hierarchy for reporting: cosine coefficients (a single
// row in 1D, the coefficient grid in 2D), the frequency-zero mass, and the
// smoothing weights.
struct LevelSummary {
    int m = 0;
    std::vector<std::vector<double>> coeffs;
    double mass = 0.0;
    double omega_pre = 0.0;
    double omega_post = 0.0;
};

std::vector<LevelSummary> summarize(const Hierarchy1D& h);
std::vector<LevelSummary> summarize(const Hierarchy2D& h);

std::string render_solve(const RunMeta& meta, const SolveReport& rep,
                         const std::vector<LevelSummary>& levels, OutputFormat fmt);
std::string render_cells(int table, const std::vector<CellOutcome>& cells, OutputFormat fmt);
std::string render_theory(const RunMeta& meta, const TheoryReport& rep, OutputFormat fmt);

} // namespace dct3mg
