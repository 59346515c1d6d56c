#include "egoten/tensor.hpp"

namespace egoten {

void EgonetTensor::append_slab(const Graph& g, index_t center, index_t t, bool self_loops) {
    for (const EgonetEntry& e : egonet(g, center, self_loops)) {
        ii_.push_back(e.i);
        jj_.push_back(e.j);
        nn_.push_back(center);
        if (temporal_) tt_.push_back(t);
        vv_.push_back(e.w);
        norm_sq_ += e.w * e.w;
    }
    slab_offsets_.push_back(vv_.size());
}

EgonetTensor EgonetTensor::build(const Graph& g, bool self_loops) {
    EgonetTensor w;
    w.n_ = g.n_nodes();
    if (w.n_ == 0) throw Error("EgonetTensor: graph has no nodes");
    w.slab_offsets_.reserve(w.n_ + 1);
    w.slab_offsets_.push_back(0);
    for (index_t n = 0; n < w.n_; ++n) w.append_slab(g, n, 0, self_loops);
    return w;
}

EgonetTensor EgonetTensor::build(const TemporalGraph& tg, bool self_loops) {
    EgonetTensor w;
    w.temporal_ = true;
    w.n_ = tg.n_nodes;
    w.t_len_ = tg.t_len();
    if (w.n_ == 0) throw Error("EgonetTensor: graph has no nodes");
    w.slab_offsets_.reserve(static_cast<std::size_t>(w.n_) * w.t_len_ + 1);
    w.slab_offsets_.push_back(0);
    for (index_t n = 0; n < w.n_; ++n)
        for (index_t t = 0; t < w.t_len_; ++t) w.append_slab(tg.snapshots[t], n, t, self_loops);
    return w;
}

}  // namespace egoten
