#include "egoten/nmf.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "egoten/kernels.hpp"
#include "egoten/projections.hpp"
#include "egoten/rng.hpp"

namespace egoten {

namespace {

double gram_trace(const Matrix& g) {
    double tr = 0.0;
    for (std::size_t p = 0; p < g.rows(); ++p) tr += g(p, p);
    return tr;
}

/// W · X streamed over the adjacency (plus the optional unit diagonal).
Matrix adj_times(const Graph& g, const Matrix& x, bool self_loops) {
    Matrix out(g.n_nodes(), x.cols());
    const std::size_t k = x.cols();
    for (index_t u = 0; u < g.n_nodes(); ++u) {
        const auto nb = g.neighbors(u);
        const auto wt = g.weights(u);
        double* row = out.row(u);
        for (std::size_t p = 0; p < nb.size(); ++p)
            kernels::axpy(row, x.row(nb[p]), wt[p], k);
        if (self_loops) kernels::axpy(row, x.row(u), 1.0, k);
    }
    return out;
}

double residual_sq(const Graph& g, const Matrix& u, const Matrix& v, bool self_loops) {
    const std::size_t k = u.cols();
    double norm_w = 0.0, inner = 0.0;
    for (index_t a = 0; a < g.n_nodes(); ++a) {
        const auto nb = g.neighbors(a);
        const auto wt = g.weights(a);
        for (std::size_t p = 0; p < nb.size(); ++p) {
            norm_w += wt[p] * wt[p];
            inner += wt[p] * kernels::dot2(u.row(a), v.row(nb[p]), k);
        }
        if (self_loops) {
            norm_w += 1.0;
            inner += kernels::dot2(u.row(a), v.row(a), k);
        }
    }
    Matrix gg = gram(u);
    hadamard_inplace(gg, gram(v));
    const double model_sq = sum_all(gg);
    return std::max(norm_w - 2.0 * inner + model_sq, 0.0);
}

}  // namespace

NmfResult nmf_decompose(const Graph& g, const SolverConfig& cfg, bool self_loops) {
    cfg.validate();
    const index_t n = g.n_nodes();
    const index_t k = cfg.k;

    NmfResult r;
    {
        auto rng_u = substream(cfg.seed, "init.u");
        auto rng_v = substream(cfg.seed, "init.v");
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        r.u = Matrix(n, k);
        r.v = Matrix(n, k);
        for (std::size_t q = 0; q < r.u.size(); ++q) r.u.data()[q] = unit(rng_u);
        for (std::size_t q = 0; q < r.v.size(); ++q) r.v.data()[q] = unit(rng_v);
        r.u = project_simplex_rows(std::move(r.u));
    }

    AdmmWorkspace ws_u, ws_v;
    const auto t0 = std::chrono::steady_clock::now();
    Matrix prev_u(n, k), prev_v(n, k);

    for (index_t it = 1; it <= cfg.max_outer; ++it) {
        prev_u = r.u;
        prev_v = r.v;

        // U-step: ‖Wᵀ − V Uᵀ‖² with W symmetric, rows of U on the simplex.
        // The sub-solves are inexact, so a candidate that lands above the
        // point it started from is discarded; the advanced duals steer the
        // next attempt somewhere else.
        Matrix gv = gram(r.v);
        if (gram_trace(gv) > 0.0) {
            const Matrix wv = adj_times(g, r.v, self_loops);
            Matrix cand = admm_simplex(gv, wv, r.u, cfg, &ws_u);
            if (block_objective(gv, wv, cand, 0.0) <= block_objective(gv, wv, r.u, 0.0))
                r.u = std::move(cand);
        }

        // V-step: nonnegative least squares without ridge; the simplex rows
        // keep U nonzero, so rho > 0 already regularizes the system.
        Matrix gu = gram(r.u);
        const Matrix wu = adj_times(g, r.u, self_loops);
        Matrix cand_v = admm_nonneg_ridge(gu, wu, r.v, 0.0, cfg, &ws_v);
        if (block_objective(gu, wu, cand_v, 0.0) <= block_objective(gu, wu, r.v, 0.0))
            r.v = std::move(cand_v);

        TraceRow row;
        row.iter = it;
        row.objective = residual_sq(g, r.u, r.v, self_loops);
        if (!std::isfinite(row.objective))
            throw SolverError("nmf: non-finite residual at iteration " + std::to_string(it));
        row.da = rel_change(r.u, prev_u);
        row.db = rel_change(r.v, prev_v);
        row.dc = 0.0;
        row.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.trace.rows.push_back(row);

        if (std::max(row.da, row.db) <= cfg.eps_outer) {
            r.trace.converged = true;
            break;
        }
    }
    return r;
}

}  // namespace egoten
