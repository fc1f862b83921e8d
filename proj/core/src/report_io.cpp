#include "dct3mg/report_io.hpp"

#include "json.hpp"

#include <sstream>

namespace dct3mg {

namespace {

using nlohmann::json;

const char* zero_name(ZeroLoc z) { return z == ZeroLoc::zero ? "0" : "pi"; }
const char* method_name(Method m) { return m == Method::tgm ? "tgm" : "vcycle"; }

json coeffs_json(int dim, const std::vector<std::vector<double>>& rows) {
    if (dim == 1) return rows.empty() ? json::array() : json(rows.front());
    return json(rows);
}

json levels_json(int dim, const std::vector<LevelSummary>& levels) {
    json arr = json::array();
    for (const LevelSummary& L : levels)
        arr.push_back({{"m", L.m},
                       {"coeffs", coeffs_json(dim, L.coeffs)},
                       {"mass", L.mass},
                       {"omega_pre", L.omega_pre},
                       {"omega_post", L.omega_post}});
    return arr;
}

std::string csv_escapeless_row(std::initializer_list<std::string> cells) {
    std::string row;
    bool first = true;
    for (const std::string& c : cells) {
        if (!first) row += ',';
        row += c;
        first = false;
    }
    row += '\n';
    return row;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

} // namespace

std::vector<LevelSummary> summarize(const Hierarchy1D& h) {
    std::vector<LevelSummary> out;
    for (const Level1D& L : h.levels) {
        LevelSummary s;
        s.m = L.m;
        s.coeffs = {L.f.poly.c};
        s.mass = L.f.mass;
        s.omega_pre = L.omega_pre;
        s.omega_post = L.omega_post;
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<LevelSummary> summarize(const Hierarchy2D& h) {
    std::vector<LevelSummary> out;
    for (const Level2D& L : h.levels) {
        LevelSummary s;
        s.m = L.m;
        const GridView g = to_grid(L.f);
        s.coeffs.resize(g.poly.nx);
        for (int i = 0; i < g.poly.nx; ++i) {
            s.coeffs[i].resize(g.poly.ny);
            for (int j = 0; j < g.poly.ny; ++j) s.coeffs[i][j] = g.poly.at(i, j);
        }
        s.mass = g.corner_mass;
        s.omega_pre = L.omega_pre;
        s.omega_post = L.omega_post;
        out.push_back(std::move(s));
    }
    return out;
}

std::string render_solve(const RunMeta& meta, const SolveReport& rep,
                         const std::vector<LevelSummary>& levels, OutputFormat fmt_kind) {
    if (fmt_kind == OutputFormat::json) {
        json j{{"method", meta.method},
               {"dim", meta.dim},
               {"q", meta.q},
               {"r", meta.r},
               {"sizes", meta.sizes},
               {"iterations", rep.iterations},
               {"converged", rep.converged},
               {"final_relative_residual", rep.final_relative_residual},
               {"residual_history", rep.residual_history},
               {"levels", levels_json(meta.dim, levels)},
               {"seed", meta.seed},
               {"elapsed_ms", rep.elapsed_ms}};
        return j.dump(2) + "\n";
    }
    if (fmt_kind == OutputFormat::csv) {
        std::string out = "method,dim,q,r,size,seed,iterations,converged,final_relative_residual,elapsed_ms\n";
        out += csv_escapeless_row({meta.method, std::to_string(meta.dim), std::to_string(meta.q),
                                   std::to_string(meta.r), std::to_string(meta.sizes.front()),
                                   std::to_string(meta.seed), std::to_string(rep.iterations),
                                   rep.converged ? "true" : "false", fmt(rep.final_relative_residual),
                                   fmt(rep.elapsed_ms)});
        return out;
    }
    std::ostringstream os;
    os << "## Solve report\n\n";
    os << "| field | value |\n|---|---|\n";
    os << "| method | " << meta.method << " |\n";
    os << "| dim | " << meta.dim << " |\n";
    os << "| q | " << meta.q << " |\n";
    os << "| r | " << meta.r << " |\n";
    os << "| size (per dim) | " << meta.sizes.front() << " |\n";
    os << "| seed | " << meta.seed << " |\n";
    os << "| iterations | " << rep.iterations << " |\n";
    os << "| converged | " << (rep.converged ? "yes" : "no") << " |\n";
    os << "| final relative residual | " << fmt(rep.final_relative_residual) << " |\n";
    os << "| elapsed ms | " << fmt(rep.elapsed_ms) << " |\n\n";
    os << "### Levels\n\n| m | mass | omega_pre | omega_post | coeffs |\n|---|---|---|---|---|\n";
    for (const LevelSummary& L : levels) {
        os << "| " << L.m << " | " << fmt(L.mass) << " | " << fmt(L.omega_pre) << " | "
           << fmt(L.omega_post) << " | ";
        for (std::size_t i = 0; i < L.coeffs.size(); ++i) {
            if (i) os << " ; ";
            for (std::size_t k = 0; k < L.coeffs[i].size(); ++k) {
                if (k) os << ' ';
                os << fmt(L.coeffs[i][k]);
            }
        }
        os << " |\n";
    }
    os << "\n### Residual history\n\n";
    for (std::size_t i = 0; i < rep.residual_history.size(); ++i)
        os << (i + 1) << ". " << fmt(rep.residual_history[i]) << "\n";
    return os.str();
}

std::string render_cells(int table, const std::vector<CellOutcome>& cells, OutputFormat fmt_kind) {
    if (fmt_kind == OutputFormat::json) {
        json arr = json::array();
        bool all = true;
        for (const CellOutcome& c : cells) {
            all = all && c.pass;
            arr.push_back({{"table", c.cell.table},
                           {"method", method_name(c.cell.method)},
                           {"dim", c.cell.dim},
                           {"zero", zero_name(c.cell.zero)},
                           {"q", c.cell.q},
                           {"r", c.cell.r ? json(*c.cell.r) : json("auto")},
                           {"m", c.cell.m},
                           {"iterations", c.report.iterations},
                           {"converged", c.report.converged},
                           {"expected", c.cell.expected},
                           {"tol", c.cell.tol},
                           {"pass", c.pass}});
        }
        json j{{"table", table}, {"all_pass", all}, {"cells", arr}};
        return j.dump(2) + "\n";
    }
    if (fmt_kind == OutputFormat::csv) {
        std::string out = "table,method,dim,zero,q,r,m,iterations,converged,expected,tol,pass\n";
        for (const CellOutcome& c : cells)
            out += csv_escapeless_row(
                {std::to_string(c.cell.table), method_name(c.cell.method), std::to_string(c.cell.dim),
                 zero_name(c.cell.zero), std::to_string(c.cell.q),
                 c.cell.r ? std::to_string(*c.cell.r) : "auto", std::to_string(c.cell.m),
                 std::to_string(c.report.iterations), c.report.converged ? "true" : "false",
                 std::to_string(c.cell.expected), std::to_string(c.cell.tol), c.pass ? "true" : "false"});
        return out;
    }
    std::ostringstream os;
    os << "## Table " << table << " reproduction\n\n";
    os << "| method | dim | zero | q | r | m | iterations | expected | tol | pass |\n";
    os << "|---|---|---|---|---|---|---|---|---|---|\n";
    for (const CellOutcome& c : cells) {
        os << "| " << method_name(c.cell.method) << " | " << c.cell.dim << " | " << zero_name(c.cell.zero)
           << " | " << c.cell.q << " | " << (c.cell.r ? std::to_string(*c.cell.r) : "auto") << " | "
           << c.cell.m << " | " << c.report.iterations << " | " << c.cell.expected << " | "
           << c.cell.tol << " | " << (c.pass ? "PASS" : "FAIL") << " |\n";
    }
    return os.str();
}

std::string render_theory(const RunMeta& meta, const TheoryReport& rep, OutputFormat fmt_kind) {
    if (fmt_kind == OutputFormat::json) {
        json arr = json::array();
        for (const LevelConstants& L : rep.levels)
            arr.push_back({{"m", L.m},
                           {"q", L.q},
                           {"alpha", L.alpha},
                           {"beta", L.beta},
                           {"gamma_star", L.gamma_star},
                           {"mu_inf", L.mu_inf},
                           {"M_psi", L.M_psi},
                           {"m_psi", L.m_psi}});
        json j{{"method", meta.method},
               {"dim", meta.dim},
               {"q", meta.q},
               {"r", meta.r},
               {"sizes", meta.sizes},
               {"seed", meta.seed},
               {"levels", arr},
               {"delta_pre", rep.delta_pre},
               {"delta_post", rep.delta_post},
               {"bound", rep.bound},
               {"mu_increments_ok", rep.mu_increments_ok}};
        if (rep.rho_hat) j["rho_hat"] = *rep.rho_hat;
        return j.dump(2) + "\n";
    }
    if (fmt_kind == OutputFormat::csv) {
        std::string out =
            "m,q,alpha,beta,gamma_star,mu_inf,M_psi,m_psi,delta_pre,delta_post,bound,rho_hat\n";
        for (const LevelConstants& L : rep.levels)
            out += csv_escapeless_row({std::to_string(L.m), std::to_string(L.q), fmt(L.alpha),
                                       fmt(L.beta), fmt(L.gamma_star), fmt(L.mu_inf), fmt(L.M_psi),
                                       fmt(L.m_psi), fmt(rep.delta_pre), fmt(rep.delta_post),
                                       fmt(rep.bound), rep.rho_hat ? fmt(*rep.rho_hat) : ""});
        return out;
    }
    std::ostringstream os;
    os << "## Theory report\n\n";
    os << "| m | q | alpha | beta | gamma* | mu_inf | M_psi | m_psi |\n";
    os << "|---|---|---|---|---|---|---|---|\n";
    for (const LevelConstants& L : rep.levels)
        os << "| " << L.m << " | " << L.q << " | " << fmt(L.alpha) << " | " << fmt(L.beta) << " | "
           << fmt(L.gamma_star) << " | " << fmt(L.mu_inf) << " | " << fmt(L.M_psi) << " | "
           << fmt(L.m_psi) << " |\n";
    os << "\n";
    os << "- delta_pre = " << fmt(rep.delta_pre) << "\n";
    os << "- delta_post = " << fmt(rep.delta_post) << "\n";
    os << "- bound = " << fmt(rep.bound) << "\n";
    os << "- mu increments non-increasing: " << (rep.mu_increments_ok ? "yes" : "no") << "\n";
    if (rep.rho_hat) os << "- measured contraction rho_hat = " << fmt(*rep.rho_hat) << "\n";
    return os.str();
}

} // namespace dct3mg
