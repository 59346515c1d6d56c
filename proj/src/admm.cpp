#include <cmath>
#include <string>
#include <vector>

#include "egoten/kernels.hpp"
#include "egoten/projections.hpp"
#include "egoten/solver.hpp"

namespace egoten {

namespace {

enum class Constraint { nonneg, simplex };

double choose_rho(const Matrix& h_gram, const Matrix& z_init, const SolverConfig& cfg) {
    switch (cfg.rho_policy) {
        case RhoPolicy::fixed:
            return cfg.rho_fixed;
        case RhoPolicy::init_norm: {
            const double k = static_cast<double>(h_gram.rows());
            return frobenius_norm_sq(z_init) / k;
        }
        case RhoPolicy::gram_trace:
        default: {
            // trace(HᵀH)/K = ‖H‖²_F/K without ever forming H.
            double tr = 0.0;
            for (std::size_t p = 0; p < h_gram.rows(); ++p) tr += h_gram(p, p);
            return tr / static_cast<double>(h_gram.rows());
        }
    }
}

void project_row(Constraint c, double* x, std::size_t k) {
    if (c == Constraint::simplex)
        project_simplex_row(x, k);
    else
        project_nonneg_row(x, k);
}

/// Scaled-dual ADMM on  min f(Z) + r(Z̄)  s.t.  Z = Z̄, where f is the ridge
/// least-squares term and r the constraint indicator:
///   Z   <- (HᵀH + (λ + ρ/2)I)⁻¹ (WᵀH + (ρ/2)(Z̄ − Y))ᵀ  (row-wise solves)
///   Z̄  <- P(Z + Y)
///   Y   <- Y + Z − Z̄
/// The K×K system is factored once per sub-solve; stops on relative primal
/// change and residual below eps_admm or after max_admm rounds. Returns the
/// final projected iterate, which is feasible by construction.
Matrix admm_solve(Constraint constraint, const Matrix& h_gram, const Matrix& wth,
                  const Matrix& z_init, double lambda, const SolverConfig& cfg,
                  AdmmWorkspace* ws) {
    const std::size_t k = h_gram.rows();
    if (h_gram.cols() != k) throw Error("admm: Gram matrix must be square");
    if (wth.cols() != k || z_init.cols() != k || wth.rows() != z_init.rows())
        throw Error("admm: shape mismatch between Gram, WᵀH and Z_init");
    if (!(lambda >= 0.0)) throw ConfigError("admm: lambda must be nonnegative");
    const std::size_t n = wth.rows();

    const double rho = choose_rho(h_gram, z_init, cfg);
    const double shift = lambda + rho / 2.0;
    if (!(shift > 0.0))
        throw SolverError(
            "admm: singular system (lambda and rho are both zero); use lambda > 0 or a "
            "nonzero rho policy");

    Matrix shifted = h_gram;
    for (std::size_t p = 0; p < k; ++p) shifted(p, p) += shift;
    const Cholesky chol(shifted);

    AdmmWorkspace local;
    AdmmWorkspace& state = ws ? *ws : local;
    const bool warm = ws != nullptr && cfg.warm_duals && state.z_bar.rows() == n &&
                      state.z_bar.cols() == k;
    state.z = z_init;
    if (!warm) {
        // Cold start per the algorithm statement: Z̄ = 0, Y = 0.
        state.z_bar = Matrix(n, k);
        state.y = Matrix(n, k);
    }
    state.rho = rho;

    Matrix z_prev(n, k);
    std::vector<double> rhs(k);
    const double s = rho / 2.0;

    for (index_t r = 0; r < cfg.max_admm; ++r) {
        z_prev = state.z;
        double change_sq = 0.0, prev_sq = 0.0, resid_sq = 0.0, zbar_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double* z = state.z.row(i);
            double* zb = state.z_bar.row(i);
            double* y = state.y.row(i);
            kernels::combine_rhs(rhs.data(), wth.row(i), zb, y, s, k);
            chol.solve_row_inplace(rhs.data());
            change_sq += kernels::sq_dist(rhs.data(), z_prev.row(i), k);
            prev_sq += kernels::sq_norm(z_prev.row(i), k);
            for (std::size_t q = 0; q < k; ++q) {
                z[q] = rhs[q];
                zb[q] = rhs[q] + y[q];
            }
            project_row(constraint, zb, k);
            for (std::size_t q = 0; q < k; ++q) y[q] += z[q] - zb[q];
            resid_sq += kernels::sq_dist(z, zb, k);
            zbar_sq += kernels::sq_norm(zb, k);
        }
        const double rel_step = std::sqrt(change_sq) / std::max(std::sqrt(prev_sq), 1e-30);
        const double rel_resid = std::sqrt(resid_sq) / std::max(std::sqrt(zbar_sq), 1e-30);
        if (rel_step <= cfg.eps_admm && rel_resid <= cfg.eps_admm) break;
    }
    return state.z_bar;
}

}  // namespace

Matrix admm_nonneg_ridge(const Matrix& h_gram, const Matrix& wth, const Matrix& z_init,
                         double lambda, const SolverConfig& cfg, AdmmWorkspace* ws) {
    return admm_solve(Constraint::nonneg, h_gram, wth, z_init, lambda, cfg, ws);
}

Matrix admm_simplex(const Matrix& h_gram, const Matrix& wth, const Matrix& z_init,
                    const SolverConfig& cfg, AdmmWorkspace* ws) {
    return admm_solve(Constraint::simplex, h_gram, wth, z_init, /*lambda=*/0.0, cfg, ws);
}

}  // namespace egoten
