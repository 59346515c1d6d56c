#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "egoten/projections.hpp"
#include "egoten/rng.hpp"
#include "egoten/solver.hpp"

namespace egoten {

void SolverConfig::validate() const {
    if (k < 1) throw ConfigError("k must be at least 1");
    if (!(lambda >= 0.0)) throw ConfigError("lambda must be nonnegative");
    if (max_outer < 1) throw ConfigError("max-iter must be at least 1");
    if (max_admm < 1) throw ConfigError("admm-iter must be at least 1");
    if (!(eps_outer > 0.0) || !(eps_admm > 0.0)) throw ConfigError("tolerances must be positive");
    if (rho_policy == RhoPolicy::fixed && !(rho_fixed > 0.0))
        throw ConfigError("a fixed rho must be positive");
}

namespace {

Matrix random_uniform(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(rows, cols);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::size_t q = 0; q < m.size(); ++q) m.data()[q] = u(rng);
    return m;
}

double gram_trace(const Matrix& g) {
    double tr = 0.0;
    for (std::size_t p = 0; p < g.rows(); ++p) tr += g(p, p);
    return tr;
}

struct FactorSlot {
    Matrix* factor;
    int mode;       // tensor mode this factor solves
    bool simplex;   // otherwise nonnegative with ridge
    Matrix gram_cache;
    AdmmWorkspace ws;
};

std::pair<FactorSet, SolverTrace> als_run(const EgonetTensor& w, const SolverConfig& cfg,
                                          bool four_way) {
    cfg.validate();
    if ((w.arity() == 4) != four_way)
        throw Error(four_way ? "als_decompose_4way: expected a 4-way tensor"
                             : "als_decompose: expected a 3-way tensor; use the 4-way solver");
    const index_t n = w.n();
    const index_t k = cfg.k;
    if (k > n)
        std::fprintf(stderr, "warning: rank k=%u exceeds node count n=%u\n", k, n);

    FactorSet f;
    {
        auto rng_a = substream(cfg.seed, "init.a");
        auto rng_b = substream(cfg.seed, "init.b");
        auto rng_c = substream(cfg.seed, "init.c");
        f.a = random_uniform(n, k, rng_a);
        f.b = random_uniform(n, k, rng_b);
        f.c = project_simplex_rows(random_uniform(n, k, rng_c));
        if (four_way) {
            auto rng_d = substream(cfg.seed, "init.d");
            f.d = project_simplex_rows(random_uniform(w.t_len(), k, rng_d));
        }
    }

    std::vector<FactorSlot> slots;
    slots.push_back({&f.a, 1, false, gram(f.a), {}});
    slots.push_back({&f.b, 2, false, gram(f.b), {}});
    slots.push_back({&f.c, 3, true, gram(f.c), {}});
    if (four_way) slots.push_back({&*f.d, 4, true, gram(*f.d), {}});

    SolverTrace trace;
    const auto t0 = std::chrono::steady_clock::now();
    bool warned_divergence = false;
    std::vector<Matrix> prev(slots.size());
    std::vector<Matrix> other_grams;

    for (index_t it = 1; it <= cfg.max_outer; ++it) {
        for (std::size_t s = 0; s < slots.size(); ++s) prev[s] = *slots[s].factor;

        for (std::size_t s = 0; s < slots.size(); ++s) {
            FactorSlot& slot = slots[s];
            other_grams.clear();
            for (std::size_t o = 0; o < slots.size(); ++o)
                if (o != s) other_grams.push_back(slots[o].gram_cache);
            Matrix h_gram = khatri_rao_gram(other_grams);

            if (gram_trace(h_gram) == 0.0) {
                // The data term is constant in this factor: the ridge alone
                // sends it to zero, and a constrained factor may stay put.
                if (!slot.simplex && cfg.lambda > 0.0) slot.factor->fill(0.0);
            } else {
                const Matrix m = mttkrp(w, f, slot.mode);
                const double lam = slot.simplex ? 0.0 : cfg.lambda;
                Matrix cand = slot.simplex
                                  ? admm_simplex(h_gram, m, *slot.factor, cfg, &slot.ws)
                                  : admm_nonneg_ridge(h_gram, m, *slot.factor, cfg.lambda, cfg,
                                                      &slot.ws);
                // Inexact sub-solves can step uphill; keep the old point in
                // that case and let the advanced duals redirect the next try.
                if (block_objective(h_gram, m, cand, lam) <=
                    block_objective(h_gram, m, *slot.factor, lam))
                    *slot.factor = std::move(cand);
            }
            slot.gram_cache = gram(*slot.factor);
        }

        // Equalize the per-column norms of A and B. Each product a_k b_kᵀ is
        // untouched and the ridge can only shrink, but without this the two
        // ridged factors trade scale for hundreds of iterations while the fit
        // stands still.
        {
            bool rescaled = false;
            for (index_t q = 0; q < k; ++q) {
                double na2 = 0.0, nb2 = 0.0;
                for (index_t i = 0; i < n; ++i) {
                    na2 += f.a(i, q) * f.a(i, q);
                    nb2 += f.b(i, q) * f.b(i, q);
                }
                if (na2 == 0.0 || nb2 == 0.0) continue;
                const double t = std::sqrt(std::sqrt(nb2 / na2));
                if (t == 1.0) continue;
                for (index_t i = 0; i < n; ++i) {
                    f.a(i, q) *= t;
                    f.b(i, q) /= t;
                }
                rescaled = true;
            }
            if (rescaled) {
                slots[0].gram_cache = gram(f.a);
                slots[1].gram_cache = gram(f.b);
            }
        }

        const double obj = objective(w, f, cfg.lambda);
        if (!std::isfinite(obj))
            throw SolverError("non-finite objective at outer iteration " + std::to_string(it));
        if (!warned_divergence) {
            const double na = frobenius_norm(f.a), nb = frobenius_norm(f.b);
            if (na > 1e8 || nb > 1e8) {
                std::fprintf(stderr,
                             "warning: factor norms growing large at iteration %u "
                             "(|A|=%.3e |B|=%.3e); the solve may be diverging\n",
                             it, na, nb);
                warned_divergence = true;
            }
        }

        TraceRow row;
        row.iter = it;
        row.objective = obj;
        row.da = rel_change(*slots[0].factor, prev[0]);
        row.db = rel_change(*slots[1].factor, prev[1]);
        row.dc = rel_change(*slots[2].factor, prev[2]);
        if (four_way) row.dd = rel_change(*slots[3].factor, prev[3]);
        row.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        trace.rows.push_back(row);

        double max_delta = std::max(row.da, std::max(row.db, row.dc));
        if (row.dd) max_delta = std::max(max_delta, *row.dd);
        if (max_delta <= cfg.eps_outer) {
            trace.converged = true;
            break;
        }
    }
    return {std::move(f), std::move(trace)};
}

}  // namespace

std::pair<FactorSet, SolverTrace> als_decompose(const EgonetTensor& w, const SolverConfig& cfg) {
    return als_run(w, cfg, /*four_way=*/false);
}

std::pair<FactorSet, SolverTrace> als_decompose_4way(const EgonetTensor& w,
                                                     const SolverConfig& cfg) {
    return als_run(w, cfg, /*four_way=*/true);
}

namespace {

// Both membership views average into the final readout with this weight on
// the egonet view. The endpoint view is the sharper signal; the egonet view
// adds the per-node slab evidence without letting its simplex junk dominate.
constexpr double kEgoViewWeight = 0.25;

std::vector<double> column_norms(const Matrix& m) {
    std::vector<double> w(m.cols(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t q = 0; q < m.cols(); ++q) w[q] += m(i, q) * m(i, q);
    for (double& v : w) v = std::sqrt(v);
    return w;
}

void normalize_rows_inplace(Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double* row = m.row(i);
        double s = 0.0;
        for (std::size_t q = 0; q < m.cols(); ++q) s += row[q];
        if (s > 0.0)
            for (std::size_t q = 0; q < m.cols(); ++q) row[q] /= s;
    }
}

// per_component[q] multiplies component q's mass in both views; it carries
// the time weighting (d row for one snapshot, or ‖d_k‖ for the whole span).
Matrix membership_readout(const FactorSet& f, const std::vector<double>& per_component) {
    const std::size_t n = f.c.rows();
    const std::size_t k = f.c.cols();
    const std::vector<double> na = column_norms(f.a);
    const std::vector<double> nb = column_norms(f.b);
    const std::vector<double> nc = column_norms(f.c);

    Matrix endpoint(n, k), ego(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t q = 0; q < k; ++q) {
            const double ab = std::max(f.a(i, q), 0.0) * std::max(f.b(i, q), 0.0);
            endpoint(i, q) = std::sqrt(ab * na[q] * nb[q]) * nc[q] * per_component[q];
            ego(i, q) = f.c(i, q) * na[q] * nb[q] * per_component[q];
        }
    normalize_rows_inplace(endpoint);
    normalize_rows_inplace(ego);
    for (std::size_t p = 0; p < endpoint.size(); ++p)
        endpoint.data()[p] =
            (1.0 - kEgoViewWeight) * endpoint.data()[p] + kEgoViewWeight * ego.data()[p];
    normalize_rows_inplace(endpoint);
    return endpoint;
}

}  // namespace

Matrix soft_membership(const FactorSet& f) {
    const std::size_t k = f.c.cols();
    if (f.a.cols() != k || f.b.cols() != k || f.a.rows() != f.c.rows() ||
        f.b.rows() != f.c.rows())
        throw Error("soft_membership: factor shapes disagree");
    std::vector<double> per_component(k, 1.0);
    if (f.d) {
        if (f.d->cols() != k) throw Error("soft_membership: D rank mismatch");
        per_component = column_norms(*f.d);
    }
    return membership_readout(f, per_component);
}

std::vector<Matrix> temporal_association(const FactorSet& f) {
    if (!f.d) throw Error("temporal_association: factor D is required (4-way solve)");
    if (f.d->cols() != f.c.cols()) throw Error("temporal_association: C and D rank mismatch");
    const std::size_t t_len = f.d->rows();
    const std::size_t k = f.c.cols();

    std::vector<Matrix> assoc;
    assoc.reserve(t_len);
    std::vector<double> dt(k);
    for (std::size_t t = 0; t < t_len; ++t) {
        for (std::size_t q = 0; q < k; ++q) dt[q] = (*f.d)(t, q);
        assoc.push_back(membership_readout(f, dt));
    }
    return assoc;
}

}  // namespace egoten
