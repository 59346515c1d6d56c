#include <cmath>
#include <string>

#include "egoten/kernels.hpp"
#include "egoten/solver.hpp"

namespace egoten {

namespace {

void check_factors(const EgonetTensor& w, const FactorSet& f) {
    const std::size_t n = w.n();
    const std::size_t k = f.a.cols();
    if (f.a.rows() != n || f.b.rows() != n || f.c.rows() != n)
        throw Error("factors: A, B, C must each have one row per node");
    if (f.b.cols() != k || f.c.cols() != k) throw Error("factors: rank mismatch across factors");
    if (w.arity() == 4) {
        if (!f.d) throw Error("factors: 4-way tensor requires factor D");
        if (f.d->rows() != w.t_len() || f.d->cols() != k)
            throw Error("factors: D must be T×K");
    }
}

}  // namespace

Matrix khatri_rao_gram(std::span<const Matrix> grams) {
    if (grams.empty()) throw Error("khatri_rao_gram: empty Gram list");
    const std::size_t k = grams[0].rows();
    for (const Matrix& g : grams)
        if (g.rows() != k || g.cols() != k)
            throw Error("khatri_rao_gram: Grams must all be K×K for one K");
    Matrix out = grams[0];
    for (std::size_t p = 1; p < grams.size(); ++p) hadamard_inplace(out, grams[p]);
    return out;
}

Matrix mttkrp(const EgonetTensor& w, const FactorSet& f, int mode) {
    if (mode < 1 || mode > w.arity())
        throw Error("mttkrp: mode " + std::to_string(mode) + " invalid for arity " +
                    std::to_string(w.arity()));
    check_factors(w, f);

    const std::size_t k = f.a.cols();
    const auto ii = w.ii();
    const auto jj = w.jj();
    const auto nn = w.nn();
    const auto tt = w.tt();
    const auto vv = w.values();

    if (w.arity() == 3) {
        Matrix out(w.n(), k);
        switch (mode) {
            case 1:
                for (std::size_t e = 0; e < vv.size(); ++e)
                    kernels::hadamard_axpy2(out.row(ii[e]), f.b.row(jj[e]), f.c.row(nn[e]),
                                            vv[e], k);
                break;
            case 2:
                for (std::size_t e = 0; e < vv.size(); ++e)
                    kernels::hadamard_axpy2(out.row(jj[e]), f.a.row(ii[e]), f.c.row(nn[e]),
                                            vv[e], k);
                break;
            default:
                for (std::size_t e = 0; e < vv.size(); ++e)
                    kernels::hadamard_axpy2(out.row(nn[e]), f.a.row(ii[e]), f.b.row(jj[e]),
                                            vv[e], k);
        }
        return out;
    }

    const Matrix& d = *f.d;
    Matrix out(mode == 4 ? w.t_len() : w.n(), k);
    switch (mode) {
        case 1:
            for (std::size_t e = 0; e < vv.size(); ++e)
                kernels::hadamard_axpy3(out.row(ii[e]), f.b.row(jj[e]), f.c.row(nn[e]),
                                        d.row(tt[e]), vv[e], k);
            break;
        case 2:
            for (std::size_t e = 0; e < vv.size(); ++e)
                kernels::hadamard_axpy3(out.row(jj[e]), f.a.row(ii[e]), f.c.row(nn[e]),
                                        d.row(tt[e]), vv[e], k);
            break;
        case 3:
            for (std::size_t e = 0; e < vv.size(); ++e)
                kernels::hadamard_axpy3(out.row(nn[e]), f.a.row(ii[e]), f.b.row(jj[e]),
                                        d.row(tt[e]), vv[e], k);
            break;
        default:
            for (std::size_t e = 0; e < vv.size(); ++e)
                kernels::hadamard_axpy3(out.row(tt[e]), f.a.row(ii[e]), f.b.row(jj[e]),
                                        f.c.row(nn[e]), vv[e], k);
    }
    return out;
}

double objective(const EgonetTensor& w, const FactorSet& f, double lambda) {
    if (!(lambda >= 0.0)) throw ConfigError("objective: lambda must be nonnegative");
    check_factors(w, f);
    const std::size_t k = f.a.cols();
    const auto ii = w.ii();
    const auto jj = w.jj();
    const auto nn = w.nn();
    const auto tt = w.tt();
    const auto vv = w.values();

    // ⟨W, model⟩ streamed over the nonzeros.
    double inner = 0.0;
    if (w.arity() == 3) {
        for (std::size_t e = 0; e < vv.size(); ++e)
            inner += vv[e] * kernels::dot3(f.a.row(ii[e]), f.b.row(jj[e]), f.c.row(nn[e]), k);
    } else {
        for (std::size_t e = 0; e < vv.size(); ++e)
            inner += vv[e] * kernels::dot4(f.a.row(ii[e]), f.b.row(jj[e]), f.c.row(nn[e]),
                                           f.d->row(tt[e]), k);
    }

    // ‖model‖² via the Khatri-Rao Gram identity.
    std::vector<Matrix> grams{gram(f.a), gram(f.b), gram(f.c)};
    if (w.arity() == 4) grams.push_back(gram(*f.d));
    const double model_sq = sum_all(khatri_rao_gram(grams));

    const double residual = w.norm_sq() - 2.0 * inner + model_sq;
    if (residual < -1e-9 * std::max(1.0, w.norm_sq() + model_sq))
        throw SolverError("objective: residual evaluated negative beyond round-off (" +
                          std::to_string(residual) + ")");
    const double ridge = lambda * (frobenius_norm_sq(f.a) + frobenius_norm_sq(f.b));
    return std::max(residual, 0.0) + ridge;
}

double block_objective(const Matrix& h_gram, const Matrix& wth, const Matrix& z, double lambda) {
    if (!(lambda >= 0.0)) throw ConfigError("block_objective: lambda must be nonnegative");
    const std::size_t k = h_gram.rows();
    if (h_gram.cols() != k || z.cols() != k || wth.rows() != z.rows() || wth.cols() != k)
        throw ConfigError("block_objective: shape mismatch");
    std::vector<double> gz(k);
    double value = 0.0;
    for (std::size_t i = 0; i < z.rows(); ++i) {
        const double* zi = z.row(i);
        for (std::size_t q = 0; q < k; ++q) {
            double acc = 0.0;
            for (std::size_t r = 0; r < k; ++r) acc += h_gram(q, r) * zi[r];
            gz[q] = acc;
        }
        value += kernels::dot2(zi, gz.data(), k) - 2.0 * kernels::dot2(zi, wth.row(i), k);
        if (lambda != 0.0) value += lambda * kernels::dot2(zi, zi, k);
    }
    return value;
}

}  // namespace egoten
