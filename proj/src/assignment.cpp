#include "egoten/assignment.hpp"

#include <algorithm>
#include <string>

namespace egoten {

void Cover::validate() const {
    for (const auto& comm : communities) {
        if (comm.empty()) throw Error("cover: empty community stored");
        if (!std::is_sorted(comm.begin(), comm.end()) ||
            std::adjacent_find(comm.begin(), comm.end()) != comm.end())
            throw Error("cover: community node list must be sorted and duplicate-free");
        if (comm.back() >= n_nodes)
            throw Error("cover: node id " + std::to_string(comm.back()) + " out of range for n=" +
                        std::to_string(n_nodes));
    }
}

bool Cover::is_disjoint_partition() const {
    std::vector<char> seen(n_nodes, 0);
    std::size_t covered = 0;
    for (const auto& comm : communities)
        for (index_t v : comm) {
            if (seen[v]) return false;
            seen[v] = 1;
            ++covered;
        }
    return covered == n_nodes;
}

namespace {

std::size_t row_argmax(const double* row, std::size_t k) {
    std::size_t best = 0;
    for (std::size_t q = 1; q < k; ++q)
        if (row[q] > row[best]) best = q;  // strict: ties keep the lowest index
    return best;
}

Cover pack(std::vector<std::vector<index_t>> members, index_t n, const Matrix& c) {
    Cover cover;
    cover.n_nodes = n;
    cover.soft = c;
    for (auto& m : members)
        if (!m.empty()) cover.communities.push_back(std::move(m));
    return cover;
}

}  // namespace

Cover hard_assign(const Matrix& c) {
    const auto n = static_cast<index_t>(c.rows());
    const std::size_t k = c.cols();
    if (n == 0 || k == 0) throw Error("hard_assign: empty membership matrix");
    std::vector<std::vector<index_t>> members(k);
    for (index_t i = 0; i < n; ++i) members[row_argmax(c.row(i), k)].push_back(i);
    return pack(std::move(members), n, c);
}

Cover crisp_cover(const Matrix& c, double tau, bool strict) {
    const auto n = static_cast<index_t>(c.rows());
    const std::size_t k = c.cols();
    if (n == 0 || k == 0) throw Error("crisp_cover: empty membership matrix");
    if (!(tau >= 0.0) || !(tau < 1.0)) throw ConfigError("tau must lie in [0, 1)");
    std::vector<std::vector<index_t>> members(k);
    for (index_t i = 0; i < n; ++i) {
        const double* row = c.row(i);
        bool any = false;
        for (std::size_t q = 0; q < k; ++q)
            if (row[q] > tau) {
                members[q].push_back(i);
                any = true;
            }
        if (!any && !strict) members[row_argmax(row, k)].push_back(i);
    }
    return pack(std::move(members), n, c);
}

}  // namespace egoten
