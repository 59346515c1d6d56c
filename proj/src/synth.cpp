#include "egoten/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "egoten/rng.hpp"

namespace egoten {

namespace {

void check_probability(double p, const char* name) {
    if (!(p >= 0.0) || !(p <= 1.0))
        throw ConfigError(std::string(name) + " must lie in [0, 1]");
}

/// Lays out community node sets. Each community owns a contiguous range of
/// fresh ids; an overlap (count, a, b) makes community b additionally contain
/// the last `count` fresh ids of community a, so both communities keep their
/// stated sizes and N = Σ sizes − Σ counts. Every shared node belongs to
/// exactly two communities.
std::vector<std::vector<index_t>> layout_communities(const BlockModel& model) {
    const std::size_t m = model.sizes.size();
    if (m == 0) throw ConfigError("block model needs at least one community");
    if (m > 64) throw ConfigError("block model supports at most 64 communities");
    for (index_t s : model.sizes)
        if (s == 0) throw ConfigError("community sizes must be positive");

    std::vector<index_t> borrowed(m, 0), lender(m, 0);
    std::vector<char> lends(m, 0);
    for (const OverlapSpec& ov : model.overlaps) {
        if (ov.b >= m || ov.a >= ov.b)
            throw ConfigError("overlap must name two distinct communities a < b");
        if (ov.count == 0) throw ConfigError("overlap node count must be positive");
        if (borrowed[ov.b] != 0)
            throw ConfigError("community " + std::to_string(ov.b) +
                              " borrows in more than one overlap");
        if (lends[ov.a])
            throw ConfigError("community " + std::to_string(ov.a) +
                              " lends in more than one overlap");
        borrowed[ov.b] = ov.count;
        lender[ov.b] = ov.a;
        lends[ov.a] = 1;
    }
    for (const OverlapSpec& ov : model.overlaps) {
        if (ov.count >= model.sizes[ov.b])
            throw ConfigError("overlap as large as the borrowing community");
        if (ov.count > model.sizes[ov.a] - borrowed[ov.a])
            throw ConfigError("overlap exceeds the lending community's own nodes");
    }

    std::vector<index_t> fresh_begin(m);
    index_t next_id = 0;
    for (std::size_t c = 0; c < m; ++c) {
        fresh_begin[c] = next_id;
        next_id += model.sizes[c] - borrowed[c];
    }

    std::vector<std::vector<index_t>> communities(m);
    for (std::size_t c = 0; c < m; ++c) {
        if (borrowed[c] > 0) {
            const index_t a = lender[c];
            const index_t start = fresh_begin[a] + (model.sizes[a] - borrowed[a]) - borrowed[c];
            for (index_t q = 0; q < borrowed[c]; ++q) communities[c].push_back(start + q);
        }
        for (index_t q = 0; q < model.sizes[c] - borrowed[c]; ++q)
            communities[c].push_back(fresh_begin[c] + q);
    }
    return communities;
}

}  // namespace

std::pair<Graph, Cover> block_stochastic(const BlockModel& model, std::uint64_t seed) {
    check_probability(model.p_in, "p_in");
    check_probability(model.p_out, "p_out");
    auto communities = layout_communities(model);

    index_t n = 0;
    for (const auto& c : communities)
        for (index_t v : c) n = std::max(n, static_cast<index_t>(v + 1));

    std::vector<std::uint64_t> mask(n, 0);
    for (std::size_t c = 0; c < communities.size(); ++c)
        for (index_t v : communities[c]) mask[v] |= (1ULL << c);

    auto rng = substream(seed, "gen.edges");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::tuple<index_t, index_t, double>> edges;
    for (index_t u = 0; u < n; ++u)
        for (index_t v = u + 1; v < n; ++v) {
            const double p = (mask[u] & mask[v]) ? model.p_in : model.p_out;
            if (unit(rng) < p) edges.emplace_back(u, v, 1.0);
        }

    Cover truth;
    truth.n_nodes = n;
    for (auto& c : communities) {
        std::sort(c.begin(), c.end());
        truth.communities.push_back(std::move(c));
    }
    return {Graph::from_edges(n, edges), std::move(truth)};
}

std::pair<TemporalGraph, std::vector<Cover>> temporal_migration(const MigrationModel& model,
                                                                std::uint64_t seed) {
    check_probability(model.p_in, "p_in");
    check_probability(model.p_out, "p_out");
    if (model.sizes[0] == 0 || model.sizes[1] == 0)
        throw ConfigError("both initial blocks must be non-empty");
    if (model.n != model.sizes[0] + model.sizes[1])
        throw ConfigError("n must equal the sum of the two initial block sizes");
    if (model.t_len < 2) throw ConfigError("a migration scenario needs at least two snapshots");
    if (!(model.transition_std >= 0.0)) throw ConfigError("transition std must be nonnegative");

    const index_t n = model.n;
    const index_t t_len = model.t_len;

    // Migrants split as evenly as possible across the two blocks, taken from
    // the tail of each block's id range; blocks are exchangeable, so which
    // nodes migrate does not affect the distribution of the scenario.
    const index_t from_first = model.migrants / 2 + model.migrants % 2;
    const index_t from_second = model.migrants / 2;
    if (from_first > model.sizes[0] || from_second > model.sizes[1])
        throw ConfigError("migrant count does not fit the initial blocks");

    std::vector<index_t> migrants;
    for (index_t q = 0; q < from_first; ++q)
        migrants.push_back(model.sizes[0] - from_first + q);
    for (index_t q = 0; q < from_second; ++q)
        migrants.push_back(n - from_second + q);

    // Transition slots are 1-based: slot s means the node belongs to the
    // third community from snapshot s−1 onward. Clamping to [2, T] keeps
    // every migrant in its original block at the first snapshot and moved by
    // the last one.
    auto slot_rng = substream(seed, "gen.slots");
    std::normal_distribution<double> gauss(model.transition_mean, model.transition_std);
    std::vector<index_t> slot(migrants.size());
    for (std::size_t q = 0; q < migrants.size(); ++q) {
        const double raw = std::round(gauss(slot_rng));
        slot[q] = static_cast<index_t>(std::clamp(raw, 2.0, static_cast<double>(t_len)));
    }

    std::vector<char> in_third(n, 0);
    std::vector<Graph> snapshots;
    std::vector<Cover> truths;
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (index_t t = 0; t < t_len; ++t) {
        for (std::size_t q = 0; q < migrants.size(); ++q)
            if (slot[q] <= t + 1) in_third[migrants[q]] = 1;

        std::vector<std::uint8_t> label(n);
        for (index_t v = 0; v < n; ++v)
            label[v] = in_third[v] ? 2 : (v < model.sizes[0] ? 0 : 1);

        auto rng = substream(seed, "gen.edges.t" + std::to_string(t));
        std::vector<std::tuple<index_t, index_t, double>> edges;
        for (index_t u = 0; u < n; ++u)
            for (index_t v = u + 1; v < n; ++v) {
                const double p = label[u] == label[v] ? model.p_in : model.p_out;
                if (unit(rng) < p) edges.emplace_back(u, v, 1.0);
            }
        snapshots.push_back(Graph::from_edges(n, edges));

        Cover truth;
        truth.n_nodes = n;
        std::vector<std::vector<index_t>> groups(3);
        for (index_t v = 0; v < n; ++v) groups[label[v]].push_back(v);
        for (auto& grp : groups)
            if (!grp.empty()) truth.communities.push_back(std::move(grp));
        truths.push_back(std::move(truth));
    }

    return {TemporalGraph(n, std::move(snapshots)), std::move(truths)};
}

}  // namespace egoten
