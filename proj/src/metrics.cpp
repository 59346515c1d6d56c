#include "egoten/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace egoten {

namespace {

void check_pair(const Cover& truth, const Cover& pred, const char* where) {
    truth.validate();
    pred.validate();
    if (truth.n_nodes != pred.n_nodes)
        throw Error(std::string(where) + ": covers are over different node counts (" +
                    std::to_string(truth.n_nodes) + " vs " + std::to_string(pred.n_nodes) + ")");
    if (truth.n_nodes == 0) throw Error(std::string(where) + ": empty node set");
}

std::size_t intersection_size(std::span<const index_t> a, std::span<const index_t> b) {
    std::size_t count = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

// −p·log p with the 0·log 0 = 0 convention; natural log throughout.
double h(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

double partition_entropy(const Cover& c) {
    const double n = c.n_nodes;
    double sum = 0.0;
    for (const auto& comm : c.communities) sum += h(static_cast<double>(comm.size()) / n);
    return sum;
}

// Entropy of one community's binary membership indicator.
double membership_entropy(double size, double n) { return h(size / n) + h(1.0 - size / n); }

/// Σ_i min_j H(X_i | Y_j) over X's communities, where the min is restricted
/// to candidates whose joint distribution carries more agreement than
/// disagreement information; unmatched communities fall back to H(X_i).
double conditional_entropy_sum(const Cover& x, const Cover& y) {
    const double n = x.n_nodes;
    double total = 0.0;
    for (const auto& xi : x.communities) {
        const double hx = membership_entropy(static_cast<double>(xi.size()), n);
        double best = hx;
        for (const auto& yj : y.communities) {
            const double p11 = static_cast<double>(intersection_size(xi, yj)) / n;
            const double p10 = static_cast<double>(xi.size()) / n - p11;
            const double p01 = static_cast<double>(yj.size()) / n - p11;
            const double p00 = 1.0 - p11 - p10 - p01;
            if (h(p11) + h(p00) < h(p01) + h(p10)) continue;
            const double hy = membership_entropy(static_cast<double>(yj.size()), n);
            const double joint = h(p11) + h(p10) + h(p01) + h(p00);
            best = std::min(best, joint - hy);
        }
        total += best;
    }
    return total;
}

}  // namespace

double nmi(const Cover& truth, const Cover& pred) {
    check_pair(truth, pred, "nmi");
    if (!truth.is_disjoint_partition() || !pred.is_disjoint_partition())
        throw Error("nmi: covers must be disjoint partitions; use overlapping_nmi for overlap");

    const double n = truth.n_nodes;
    const double h1 = partition_entropy(truth);
    const double h2 = partition_entropy(pred);
    if (h1 + h2 == 0.0) return 1.0;  // both are one community over all nodes

    // I = H1 + H2 − H_joint. The entropy form makes identical partitions
    // score exactly 1: the joint entropy then cancels h1 term for term.
    double hj = 0.0;
    for (const auto& a : truth.communities)
        for (const auto& b : pred.communities) {
            const auto common = static_cast<double>(intersection_size(a, b));
            if (common == 0.0) continue;
            hj += h(common / n);
        }
    const double mi = h1 + h2 - hj;
    return std::clamp(2.0 * mi / (h1 + h2), 0.0, 1.0);
}

double overlapping_nmi(const Cover& truth, const Cover& pred) {
    check_pair(truth, pred, "overlapping_nmi");
    const double n = truth.n_nodes;

    double hx = 0.0, hy = 0.0;
    for (const auto& c : truth.communities)
        hx += membership_entropy(static_cast<double>(c.size()), n);
    for (const auto& c : pred.communities)
        hy += membership_entropy(static_cast<double>(c.size()), n);

    const double denom = std::max(hx, hy);
    if (denom == 0.0) return 1.0;  // neither cover carries any information

    const double hx_given_y = conditional_entropy_sum(truth, pred);
    const double hy_given_x = conditional_entropy_sum(pred, truth);
    const double mi = 0.5 * ((hx - hx_given_y) + (hy - hy_given_x));
    return std::clamp(mi / denom, 0.0, 1.0);
}

double avg_f1(const Cover& truth, const Cover& pred, bool symmetric) {
    check_pair(truth, pred, "avg_f1");
    if (truth.communities.empty() || pred.communities.empty())
        throw Error("avg_f1: both covers must contain at least one community");

    const auto one_way = [](const Cover& from, const Cover& to) {
        double sum = 0.0;
        for (const auto& a : from.communities) {
            double best = 0.0;
            for (const auto& b : to.communities) {
                const double common = static_cast<double>(intersection_size(a, b));
                best = std::max(best, 2.0 * common /
                                          static_cast<double>(a.size() + b.size()));
            }
            sum += best;
        }
        return sum / static_cast<double>(from.communities.size());
    };

    const double forward = one_way(truth, pred);
    if (!symmetric) return forward;
    return 0.5 * (forward + one_way(pred, truth));
}

namespace {

struct CutVolume {
    double cut = 0.0;
    double vol = 0.0;
};

CutVolume cut_and_volume(const Graph& g, std::span<const index_t> community,
                         std::vector<char>& member) {
    for (index_t v : community) member[v] = 1;
    CutVolume r;
    for (index_t v : community) {
        r.vol += g.strength(v);
        const auto nb = g.neighbors(v);
        const auto wt = g.weights(v);
        for (std::size_t p = 0; p < nb.size(); ++p)
            if (!member[nb[p]]) r.cut += wt[p];
    }
    for (index_t v : community) member[v] = 0;
    return r;
}

/// Conductance without the proper-subset precondition: an all-node community
/// has no cut and scores 0. Used by the coverage machinery, where covers may
/// legitimately contain such communities.
double conductance_relaxed(const Graph& g, std::span<const index_t> community,
                           std::vector<char>& member) {
    const CutVolume r = cut_and_volume(g, community, member);
    const double denom = std::min(r.vol, 2.0 * g.total_weight() - r.vol);
    if (denom == 0.0) {
        if (r.cut == 0.0) return 0.0;
        throw SolverError("conductance: zero volume with nonzero cut");
    }
    return r.cut / denom;
}

}  // namespace

double conductance(const Graph& g, std::span<const index_t> community) {
    if (community.empty()) throw Error("conductance: empty community");
    if (community.size() >= g.n_nodes())
        throw Error("conductance: community must be a proper subset of the nodes");
    for (index_t v : community)
        if (v >= g.n_nodes())
            throw Error("conductance: node id " + std::to_string(v) + " out of range");
    std::vector<char> member(g.n_nodes(), 0);
    return conductance_relaxed(g, community, member);
}

double avg_conductance(const Graph& g, const Cover& cover) {
    cover.validate();
    if (cover.n_nodes != g.n_nodes())
        throw Error("avg_conductance: cover and graph node counts differ");
    if (cover.communities.empty()) throw Error("avg_conductance: empty cover");
    const double n = g.n_nodes();
    double sum = 0.0;
    for (const auto& comm : cover.communities)
        sum += (static_cast<double>(comm.size()) / n) * conductance(g, comm);
    return sum;
}

std::vector<CoveragePoint> coverage_curve(const Graph& g, const Cover& cover,
                                          std::span<const double> nu_grid) {
    cover.validate();
    if (cover.n_nodes != g.n_nodes())
        throw Error("coverage_curve: cover and graph node counts differ");
    if (nu_grid.empty()) throw Error("coverage_curve: empty grid");
    for (std::size_t p = 0; p < nu_grid.size(); ++p) {
        if (!(nu_grid[p] >= 0.0) || !(nu_grid[p] <= 1.0))
            throw Error("coverage_curve: grid values must lie in [0, 1]");
        if (p > 0 && nu_grid[p] < nu_grid[p - 1])
            throw Error("coverage_curve: grid must be ascending");
    }

    // Conductance per community once, then sweep the grid over communities
    // sorted by conductance, growing the union incrementally.
    std::vector<char> member(g.n_nodes(), 0);
    std::vector<std::pair<double, std::size_t>> by_phi;
    by_phi.reserve(cover.communities.size());
    for (std::size_t c = 0; c < cover.communities.size(); ++c)
        by_phi.emplace_back(conductance_relaxed(g, cover.communities[c], member), c);
    std::sort(by_phi.begin(), by_phi.end());

    std::vector<char> covered(g.n_nodes(), 0);
    std::size_t covered_count = 0, next = 0;
    std::vector<CoveragePoint> curve;
    curve.reserve(nu_grid.size());
    for (double nu : nu_grid) {
        while (next < by_phi.size() && by_phi[next].first < nu) {
            for (index_t v : cover.communities[by_phi[next].second])
                if (!covered[v]) {
                    covered[v] = 1;
                    ++covered_count;
                }
            ++next;
        }
        curve.push_back({nu, static_cast<double>(covered_count) /
                                 static_cast<double>(g.n_nodes())});
    }
    return curve;
}

double auc(std::span<const CoveragePoint> curve) {
    if (curve.empty()) throw Error("auc: empty curve");
    double prev_nu = -1.0;
    for (const CoveragePoint& p : curve) {
        if (!(p.nu >= 0.0) || !(p.nu <= 1.0) || !(p.coverage >= 0.0) || !(p.coverage <= 1.0))
            throw Error("auc: curve points must lie in the unit square");
        if (p.nu < prev_nu) throw Error("auc: curve must be sorted by nu");
        prev_nu = p.nu;
    }

    // Integrate the lower-left staircase: each first attainment of a new
    // coverage level contributes a rectangle at that ν.
    double area = 0.0, cov = 0.0;
    for (const CoveragePoint& p : curve) {
        if (p.coverage > cov) {
            area += (p.coverage - cov) * p.nu;
            cov = p.coverage;
        }
    }
    area += (1.0 - cov) * 1.0;
    return area;
}

}  // namespace egoten
