#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "egoten/graph.hpp"

namespace egoten {

/// Sparse egonet tensor in coordinate form. Slab n holds the adjacency of the
/// subgraph induced by the closed neighborhood N[n]; the 4-way variant stacks
/// one such tensor per snapshot. Entries are sorted by (n[, t], i, j) and the
/// tensor is never unfolded densely.
class EgonetTensor {
public:
    static EgonetTensor build(const Graph& g, bool self_loops);
    static EgonetTensor build(const TemporalGraph& tg, bool self_loops);

    int arity() const { return temporal_ ? 4 : 3; }
    index_t n() const { return n_; }
    index_t t_len() const { return t_len_; }

    std::size_t nnz() const { return vv_.size(); }
    double norm_sq() const { return norm_sq_; }

    std::span<const index_t> ii() const { return ii_; }
    std::span<const index_t> jj() const { return jj_; }
    std::span<const index_t> nn() const { return nn_; }
    std::span<const index_t> tt() const { return tt_; }  // empty for 3-way
    std::span<const double> values() const { return vv_; }

    /// Offsets into the entry arrays for slab group n*t_len + t (plain n for
    /// the 3-way case); size n()*t_len() + 1.
    std::span<const std::size_t> slab_offsets() const { return slab_offsets_; }

private:
    EgonetTensor() = default;
    void append_slab(const Graph& g, index_t center, index_t t, bool self_loops);

    bool temporal_ = false;
    index_t n_ = 0;
    index_t t_len_ = 1;
    std::vector<index_t> ii_, jj_, nn_, tt_;
    std::vector<double> vv_;
    std::vector<std::size_t> slab_offsets_;
    double norm_sq_ = 0.0;
};

/// Streams the nonzeros of the requested mode unfolding as
/// f(row, column, value). The unfolding pairs each mode with the matching
/// Khatri-Rao ordering under column-major slab vectorization:
///   mode 1: column i, row j + n·N (+ t·N²)   <->  H = (D ⊙) C ⊙ B
///   mode 2: column j, row i + n·N (+ t·N²)   <->  H = (D ⊙) C ⊙ A
///   mode 3: column n, row i + j·N (+ t·N²)   <->  H = (D ⊙) B ⊙ A
///   mode 4: column t, row i + j·N + n·N²     <->  H =  C ⊙ B ⊙ A
template <class F>
void mode_entries(const EgonetTensor& w, int mode, F&& f) {
    if (mode < 1 || mode > w.arity())
        throw Error("mode_entries: mode " + std::to_string(mode) + " invalid for arity " +
                    std::to_string(w.arity()));
    const auto N = static_cast<std::uint64_t>(w.n());
    const auto ii = w.ii();
    const auto jj = w.jj();
    const auto nn = w.nn();
    const auto tt = w.tt();
    const auto vv = w.values();
    const bool four = w.arity() == 4;
    for (std::size_t e = 0; e < vv.size(); ++e) {
        const std::uint64_t i = ii[e], j = jj[e], n = nn[e];
        const std::uint64_t t = four ? tt[e] : 0;
        std::uint64_t row = 0;
        index_t col = 0;
        switch (mode) {
            case 1: row = j + n * N + t * N * N; col = ii[e]; break;
            case 2: row = i + n * N + t * N * N; col = jj[e]; break;
            case 3: row = i + j * N + t * N * N; col = nn[e]; break;
            case 4: row = i + j * N + n * N * N; col = tt[e]; break;
        }
        f(row, col, vv[e]);
    }
}

}  // namespace egoten
