#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "egoten/matrix.hpp"
#include "egoten/tensor.hpp"

namespace egoten {

/// How the ADMM penalty parameter is chosen for each sub-solve.
enum class RhoPolicy {
    gram_trace,  // trace(HᵀH)/K, i.e. ‖H‖²_F/K (default)
    init_norm,   // ‖Z_init‖²_F/K
    fixed,       // the value given in rho_fixed
};

struct SolverConfig {
    index_t k = 2;
    double lambda = 0.1;       // ridge weight on the unconstrained-scale factors
    index_t max_outer = 500;
    index_t max_admm = 25;
    double eps_outer = 1e-5;   // relative factor change across an outer iteration
    double eps_admm = 1e-4;    // relative primal change within an ADMM sub-solve
    std::uint64_t seed = 1;
    RhoPolicy rho_policy = RhoPolicy::gram_trace;
    double rho_fixed = 0.0;
    bool warm_duals = true;    // carry ADMM duals across outer iterations

    void validate() const;
};

/// CP factors. a, b are N×K nonnegative; c is N×K with rows on the
/// probability simplex; d (T×K, simplex rows) is present for 4-way solves.
struct FactorSet {
    Matrix a, b, c;
    std::optional<Matrix> d;
};

struct TraceRow {
    index_t iter;       // 1-based outer iteration
    double objective;
    double da, db, dc;  // relative factor changes
    std::optional<double> dd;
    double seconds;     // wall time since the solve started
};

struct SolverTrace {
    std::vector<TraceRow> rows;
    bool converged = false;
};

/// State carried by one ADMM sub-solver between calls (warm starts).
struct AdmmWorkspace {
    Matrix z, z_bar, y;
    double rho = 0.0;
};

/// Hadamard product of the factor Grams: (X₁ ⊙ X₂ ⊙ ...)ᵀ(X₁ ⊙ X₂ ⊙ ...)
/// computed as (X₁ᵀX₁) ∘ (X₂ᵀX₂) ∘ ... without forming the Khatri-Rao product.
Matrix khatri_rao_gram(std::span<const Matrix> grams);

/// Wᵀ_mode · H for the given mode, streamed over the sparse entries; the
/// N×K (or T×K for mode 4) right-hand side of each least-squares update.
Matrix mttkrp(const EgonetTensor& w, const FactorSet& f, int mode);

/// Approximate minimizer of ‖W − H Zᵀ‖²_F + λ‖Z‖²_F over Z ≥ 0, given the
/// Gram HᵀH and the product WᵀH. Returns the final projected iterate. Passing
/// a workspace enables warm starts across calls per cfg.warm_duals.
Matrix admm_nonneg_ridge(const Matrix& h_gram, const Matrix& wth, const Matrix& z_init,
                         double lambda, const SolverConfig& cfg, AdmmWorkspace* ws = nullptr);

/// Same sub-solver with rows constrained to the probability simplex and no
/// ridge term.
Matrix admm_simplex(const Matrix& h_gram, const Matrix& wth, const Matrix& z_init,
                    const SolverConfig& cfg, AdmmWorkspace* ws = nullptr);

/// ‖W − model‖²_F + λ(‖A‖²_F + ‖B‖²_F), evaluated sparsely via
/// ‖W‖² − 2⟨W, model⟩ + ‖model‖² with the Gram identity for ‖model‖².
double objective(const EgonetTensor& w, const FactorSet& f, double lambda);

/// One block's least-squares objective up to the constant ‖W‖² term:
/// tr(Z·HᵀH·Zᵀ) − 2·tr(Zᵀ·WᵀH) + λ‖Z‖². Lets callers compare an inexact
/// sub-solve against the point it started from.
double block_objective(const Matrix& h_gram, const Matrix& wth, const Matrix& z, double lambda);

/// Alternating least squares with ADMM sub-solvers over a 3-way egonet
/// tensor: A, B nonnegative with ridge, C rows on the simplex.
std::pair<FactorSet, SolverTrace> als_decompose(const EgonetTensor& w, const SolverConfig& cfg);

/// 4-way variant: additionally fits D (T×K) with simplex rows.
std::pair<FactorSet, SolverTrace> als_decompose_4way(const EgonetTensor& w,
                                                     const SolverConfig& cfg);

/// Row-stochastic N×K soft membership read off a converged factor set. Each
/// component's mass on a node is measured in data units from two views: the
/// node's endpoint rows in A and B, and its egonet weight in C scaled by the
/// basis magnitude ‖a_k‖‖b_k‖. The views are normalized and blended; raw C
/// alone is a poor readout on sparse graphs because its simplex rows must
/// park surplus mass on whichever component has the smallest basis.
Matrix soft_membership(const FactorSet& f);

/// Per-time soft memberships from a 4-way factor set: the same two-view
/// readout with each component additionally weighted by its presence d(t, k)
/// at that snapshot. Rows are normalized per time slice.
std::vector<Matrix> temporal_association(const FactorSet& f);

}  // namespace egoten
