#include "egoten/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <unordered_map>

namespace egoten {

namespace {

std::uint64_t pair_key(index_t a, index_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

Graph Graph::from_edges(index_t n,
                        std::span<const std::tuple<index_t, index_t, double>> edges) {
    Graph g;
    g.n_ = n;

    // Merge duplicates keeping the last weight, then build sorted CSR.
    std::unordered_map<std::uint64_t, double> merged;
    merged.reserve(edges.size());
    for (const auto& [u, v, w] : edges) {
        if (u >= n || v >= n)
            throw Error("from_edges: node id " + std::to_string(std::max(u, v)) +
                        " out of range for n=" + std::to_string(n));
        if (u == v) throw Error("from_edges: self-loop at node " + std::to_string(u));
        if (!(w > 0.0) || !std::isfinite(w))
            throw Error("from_edges: edge weight must be positive and finite");
        merged[pair_key(u, v)] = w;
    }

    std::vector<std::tuple<index_t, index_t, double>> directed;
    directed.reserve(merged.size() * 2);
    for (const auto& [key, w] : merged) {
        const auto a = static_cast<index_t>(key >> 32);
        const auto b = static_cast<index_t>(key & 0xffffffffu);
        directed.emplace_back(a, b, w);
        directed.emplace_back(b, a, w);
    }
    std::sort(directed.begin(), directed.end());

    g.offsets_.assign(n + 1, 0);
    g.adj_.resize(directed.size());
    g.wts_.resize(directed.size());
    for (const auto& [u, v, w] : directed) g.offsets_[u + 1]++;
    for (index_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
    std::size_t pos = 0;
    for (const auto& [u, v, w] : directed) {
        g.adj_[pos] = v;
        g.wts_[pos] = w;
        ++pos;
    }

    g.strength_.assign(n, 0.0);
    for (index_t v = 0; v < n; ++v) {
        double s = 0.0;
        for (double w : g.weights(v)) s += w;
        g.strength_[v] = s;
        g.total_weight_ += s;
    }
    g.total_weight_ /= 2.0;
    return g;
}

double Graph::edge_weight(index_t u, index_t v) const {
    const auto nb = neighbors(u);
    const auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return 0.0;
    return wts_[offsets_[u] + static_cast<std::size_t>(it - nb.begin())];
}

TemporalGraph::TemporalGraph(index_t n, std::vector<Graph> snaps)
    : n_nodes(n), snapshots(std::move(snaps)) {
    if (snapshots.empty()) throw Error("TemporalGraph: at least one snapshot required");
    for (const Graph& g : snapshots)
        if (g.n_nodes() != n)
            throw Error("TemporalGraph: snapshot node count " + std::to_string(g.n_nodes()) +
                        " does not match shared node set of " + std::to_string(n));
}

index_t NodeRemap::require_internal(std::int64_t original) const {
    const auto it = to_internal.find(original);
    if (it == to_internal.end())
        throw UsageError("node id " + std::to_string(original) + " does not occur in the graph");
    return it->second;
}

namespace {

struct RawEdge {
    std::int64_t t;  // -1 for static edge lists
    std::int64_t u, v;
    double w;
};

std::int64_t parse_int(std::string_view tok, std::size_t line_no, const char* what) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line_no, std::string("malformed ") + what + " '" + std::string(tok) + "'");
    return value;
}

double parse_weight(std::string_view tok, std::size_t line_no) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(value))
        throw ParseError(line_no, "malformed weight '" + std::string(tok) + "'");
    if (value < 0.0) throw ParseError(line_no, "negative edge weight " + std::string(tok));
    if (value == 0.0) throw ParseError(line_no, "zero edge weight (edges must carry weight > 0)");
    return value;
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t p = 0;
    while (p < line.size()) {
        while (p < line.size() && (line[p] == ' ' || line[p] == '\t' || line[p] == '\r')) ++p;
        std::size_t q = p;
        while (q < line.size() && line[q] != ' ' && line[q] != '\t' && line[q] != '\r') ++q;
        if (q > p) toks.push_back(line.substr(p, q - p));
        p = q;
    }
    return toks;
}

struct RawParse {
    std::vector<RawEdge> edges;
    std::vector<std::int64_t> observed_ids;  // sorted unique, includes self-loop endpoints
    ParseReport report;
    std::int64_t max_t = -1;
};

RawParse read_raw(std::istream& in, const ParseOptions& opts, bool temporal) {
    if (opts.indexing_base != 0 && opts.indexing_base != 1)
        throw ConfigError("indexing base must be 0 or 1");

    RawParse out;
    std::string line;
    std::size_t line_no = 0;
    bool saw_data = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv(line);
        if (const auto hash = sv.find('#'); hash != std::string_view::npos)
            sv = sv.substr(0, hash);
        const auto toks = tokenize(sv);
        if (toks.empty()) continue;
        saw_data = true;

        const std::size_t base_cols = temporal ? 3 : 2;
        if (toks.size() < base_cols)
            throw ParseError(line_no, "expected at least " + std::to_string(base_cols) +
                                          " columns, got " + std::to_string(toks.size()));
        const std::size_t max_cols = base_cols + (opts.weighted ? 1 : 0);
        if (toks.size() > max_cols)
            throw ParseError(line_no, "unexpected extra column '" + std::string(toks[max_cols]) +
                                          (opts.weighted ? "'" : "' (pass the weighted flag for weighted lists)"));

        RawEdge e;
        std::size_t c = 0;
        if (temporal) {
            e.t = parse_int(toks[c++], line_no, "snapshot index");
            if (e.t < 0) throw ParseError(line_no, "snapshot index must be nonnegative");
            out.max_t = std::max(out.max_t, e.t);
        } else {
            e.t = -1;
        }
        e.u = parse_int(toks[c++], line_no, "node id");
        e.v = parse_int(toks[c++], line_no, "node id");
        e.w = c < toks.size() ? parse_weight(toks[c], line_no) : 1.0;

        if (e.u < opts.indexing_base || e.v < opts.indexing_base)
            throw ParseError(line_no, "node id below indexing base " +
                                          std::to_string(opts.indexing_base));

        out.observed_ids.push_back(e.u);
        out.observed_ids.push_back(e.v);
        if (e.u == e.v) {
            out.report.self_loops_dropped++;
            continue;
        }
        out.edges.push_back(e);
    }
    if (!saw_data) throw UsageError("edge list is empty");

    std::sort(out.observed_ids.begin(), out.observed_ids.end());
    out.observed_ids.erase(std::unique(out.observed_ids.begin(), out.observed_ids.end()),
                           out.observed_ids.end());
    return out;
}

NodeRemap build_remap(const RawParse& raw, const ParseOptions& opts) {
    NodeRemap remap;
    if (opts.n_nodes) {
        // Explicit node count: file ids (minus base) are the internal ids.
        const index_t n = *opts.n_nodes;
        if (n == 0) throw ConfigError("node count must be positive");
        for (std::int64_t id : raw.observed_ids)
            if (id - opts.indexing_base >= static_cast<std::int64_t>(n))
                throw UsageError("node id " + std::to_string(id) +
                                 " outside declared node count " + std::to_string(n));
        remap.to_original.resize(n);
        for (index_t i = 0; i < n; ++i) {
            const std::int64_t orig = static_cast<std::int64_t>(i) + opts.indexing_base;
            remap.to_original[i] = orig;
            remap.to_internal.emplace(orig, i);
        }
    } else {
        remap.to_original = raw.observed_ids;
        remap.to_internal.reserve(raw.observed_ids.size());
        for (std::size_t i = 0; i < raw.observed_ids.size(); ++i)
            remap.to_internal.emplace(raw.observed_ids[i], static_cast<index_t>(i));
    }
    return remap;
}

// Dedup in file order (last weight wins), then hand sorted edges to the CSR
// builder. Counts the merged-away lines.
std::vector<std::tuple<index_t, index_t, double>> dedup_edges(
    std::vector<std::tuple<index_t, index_t, double>>& in_order, ParseReport& report) {
    std::unordered_map<std::uint64_t, double> merged;
    merged.reserve(in_order.size());
    for (const auto& [u, v, w] : in_order) {
        const auto [it, inserted] = merged.insert_or_assign(pair_key(u, v), w);
        (void)it;
        if (!inserted) report.duplicate_edges++;
    }
    std::vector<std::tuple<index_t, index_t, double>> out;
    out.reserve(merged.size());
    for (const auto& [key, w] : merged)
        out.emplace_back(static_cast<index_t>(key >> 32), static_cast<index_t>(key & 0xffffffffu),
                         w);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ParsedGraph parse_edge_list(std::istream& in, const ParseOptions& opts) {
    RawParse raw = read_raw(in, opts, /*temporal=*/false);
    NodeRemap remap = build_remap(raw, opts);
    const index_t n = static_cast<index_t>(remap.to_original.size());

    std::vector<std::tuple<index_t, index_t, double>> edges;
    edges.reserve(raw.edges.size());
    for (const RawEdge& e : raw.edges)
        edges.emplace_back(remap.to_internal.at(e.u), remap.to_internal.at(e.v), e.w);
    auto unique_edges = dedup_edges(edges, raw.report);

    ParsedGraph out{Graph::from_edges(n, unique_edges), std::move(remap), raw.report};
    return out;
}

ParsedTemporalGraph parse_temporal_edge_list(std::istream& in, const ParseOptions& opts) {
    RawParse raw = read_raw(in, opts, /*temporal=*/true);
    NodeRemap remap = build_remap(raw, opts);
    const index_t n = static_cast<index_t>(remap.to_original.size());
    const index_t t_len = static_cast<index_t>(raw.max_t + 1);

    std::vector<std::vector<std::tuple<index_t, index_t, double>>> per_t(t_len);
    for (const RawEdge& e : raw.edges)
        per_t[static_cast<std::size_t>(e.t)].emplace_back(remap.to_internal.at(e.u),
                                                          remap.to_internal.at(e.v), e.w);

    std::vector<Graph> snaps;
    snaps.reserve(t_len);
    for (auto& edges : per_t) {
        auto unique_edges = dedup_edges(edges, raw.report);
        snaps.push_back(Graph::from_edges(n, unique_edges));
    }
    return ParsedTemporalGraph{TemporalGraph(n, std::move(snaps)), std::move(remap), raw.report};
}

std::vector<EgonetEntry> egonet(const Graph& g, index_t center, bool self_loops) {
    if (center >= g.n_nodes())
        throw Error("egonet: center " + std::to_string(center) + " out of range");

    // Closed neighborhood, sorted. Neighbor lists are sorted already; splice
    // the center into place.
    const auto nb = g.neighbors(center);
    std::vector<index_t> hood;
    hood.reserve(nb.size() + 1);
    const auto pos = std::lower_bound(nb.begin(), nb.end(), center);
    hood.insert(hood.end(), nb.begin(), pos);
    hood.push_back(center);
    hood.insert(hood.end(), pos, nb.end());

    std::vector<EgonetEntry> entries;
    for (index_t i : hood) {
        const auto adj = g.neighbors(i);
        const auto wts = g.weights(i);
        bool diagonal_pending = self_loops;
        std::size_t a = 0, h = 0;
        while (a < adj.size() && h < hood.size()) {
            if (adj[a] < hood[h]) {
                ++a;
            } else if (hood[h] < adj[a]) {
                ++h;
            } else {
                if (diagonal_pending && adj[a] > i) {
                    entries.push_back({i, i, 1.0});
                    diagonal_pending = false;
                }
                entries.push_back({i, adj[a], wts[a]});
                ++a;
                ++h;
            }
        }
        if (diagonal_pending) entries.push_back({i, i, 1.0});
    }
    return entries;
}

}  // namespace egoten
