#include "egoten/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

#include "egoten/rng.hpp"

namespace egoten {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // binary: no platform newline surprises
    if (!out) throw UsageError("cannot open '" + path.string() + "' for writing");
    return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open input file '" + path.string() + "'");
    return in;
}

}  // namespace

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_factor_csv(const std::filesystem::path& path, const Matrix& m,
                      std::span<const std::int64_t> ids, const std::string& id_column) {
    if (ids.size() != m.rows()) throw Error("write_factor_csv: id column length mismatch");
    auto out = open_out(path);
    out << id_column;
    for (std::size_t q = 0; q < m.cols(); ++q) out << ",k" << q;
    out << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << ids[i];
        for (std::size_t q = 0; q < m.cols(); ++q) out << ',' << format_value(m(i, q));
        out << "\n";
    }
}

void write_trace_csv(const std::filesystem::path& path, const SolverTrace& trace, bool has_d,
                     bool with_timing) {
    auto out = open_out(path);
    out << (has_d ? "iter,objective,dA,dB,dC,dD,seconds" : "iter,objective,dA,dB,dC,seconds")
        << "\n";
    for (const TraceRow& r : trace.rows) {
        out << r.iter << ',' << format_value(r.objective) << ',' << format_value(r.da) << ','
            << format_value(r.db) << ',' << format_value(r.dc);
        if (has_d) out << ',' << format_value(r.dd.value_or(0.0));
        out << ',' << format_value(with_timing ? r.seconds : 0.0) << "\n";
    }
}

void write_cover_file(const std::filesystem::path& path, const Cover& cover,
                      const NodeRemap& remap) {
    cover.validate();
    if (remap.to_original.size() < cover.n_nodes)
        throw Error("write_cover_file: remap does not cover all nodes");
    auto out = open_out(path);
    for (const auto& comm : cover.communities) {
        for (std::size_t p = 0; p < comm.size(); ++p) {
            if (p) out << ' ';
            out << remap.to_original[comm[p]];
        }
        out << "\n";
    }
}

Cover read_cover_file(const std::filesystem::path& path, const NodeRemap& remap, index_t n) {
    auto in = open_in(path);
    Cover cover;
    cover.n_nodes = n;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv(line);
        if (const auto hash = sv.find('#'); hash != std::string_view::npos)
            sv = sv.substr(0, hash);
        std::vector<index_t> comm;
        std::size_t p = 0;
        while (p < sv.size()) {
            while (p < sv.size() && (sv[p] == ' ' || sv[p] == '\t' || sv[p] == '\r')) ++p;
            std::size_t q = p;
            while (q < sv.size() && sv[q] != ' ' && sv[q] != '\t' && sv[q] != '\r') ++q;
            if (q > p) {
                std::int64_t original = 0;
                const auto tok = sv.substr(p, q - p);
                const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(),
                                                       original);
                if (ec != std::errc() || ptr != tok.data() + tok.size())
                    throw ParseError(line_no, "malformed node id '" + std::string(tok) + "'");
                comm.push_back(remap.require_internal(original));
            }
            p = q;
        }
        if (comm.empty()) continue;
        std::sort(comm.begin(), comm.end());
        comm.erase(std::unique(comm.begin(), comm.end()), comm.end());
        cover.communities.push_back(std::move(comm));
    }
    if (cover.communities.empty()) throw UsageError("cover file '" + path.string() + "' is empty");
    cover.validate();
    return cover;
}

Matrix read_membership_csv(const std::filesystem::path& path, const NodeRemap& remap,
                           index_t n) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) throw UsageError("membership CSV '" + path.string() + "' is empty");
    std::size_t k = 0;
    for (char c : line)
        if (c == ',') ++k;
    if (k == 0) throw ParseError(1, "membership CSV header needs at least one factor column");

    Matrix m(n, k);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const char* p = line.data();
        const char* end = line.data() + line.size();
        std::int64_t original = 0;
        auto [ptr, ec] = std::from_chars(p, end, original);
        if (ec != std::errc() || ptr == end || *ptr != ',')
            throw ParseError(line_no, "malformed node id");
        const index_t row = remap.require_internal(original);
        p = ptr;
        for (std::size_t q = 0; q < k; ++q) {
            if (p == end || *p != ',') throw ParseError(line_no, "expected " + std::to_string(k) +
                                                                     " factor columns");
            ++p;
            double v = 0.0;
            auto [vptr, vec] = std::from_chars(p, end, v);
            if (vec != std::errc()) throw ParseError(line_no, "malformed value");
            m(row, q) = v;
            p = vptr;
        }
        while (p != end && (*p == '\r' || *p == ' ')) ++p;
        if (p != end) throw ParseError(line_no, "unexpected trailing columns");
    }
    return m;
}

void write_remap_csv(const std::filesystem::path& path, const NodeRemap& remap) {
    auto out = open_out(path);
    out << "original_id,internal_id\n";
    for (std::size_t i = 0; i < remap.to_original.size(); ++i)
        out << remap.to_original[i] << ',' << i << "\n";
}

void write_edge_list(const std::filesystem::path& path, const Graph& g, bool weighted) {
    auto out = open_out(path);
    out << "# " << g.n_nodes() << " nodes, " << g.n_edges() << " edges\n";
    for (index_t u = 0; u < g.n_nodes(); ++u) {
        const auto nb = g.neighbors(u);
        const auto wt = g.weights(u);
        for (std::size_t p = 0; p < nb.size(); ++p) {
            if (nb[p] < u) continue;  // each undirected edge once
            out << u << ' ' << nb[p];
            if (weighted) out << ' ' << format_value(wt[p]);
            out << "\n";
        }
    }
}

void write_temporal_edge_list(const std::filesystem::path& path, const TemporalGraph& tg,
                              bool weighted) {
    auto out = open_out(path);
    out << "# " << tg.n_nodes << " nodes, " << tg.t_len() << " snapshots\n";
    for (index_t t = 0; t < tg.t_len(); ++t) {
        const Graph& g = tg.snapshots[t];
        for (index_t u = 0; u < g.n_nodes(); ++u) {
            const auto nb = g.neighbors(u);
            const auto wt = g.weights(u);
            for (std::size_t p = 0; p < nb.size(); ++p) {
                if (nb[p] < u) continue;
                out << t << ' ' << u << ' ' << nb[p];
                if (weighted) out << ' ' << format_value(wt[p]);
                out << "\n";
            }
        }
    }
}

void write_association_csv(const std::filesystem::path& path, const std::vector<Matrix>& assoc,
                           const NodeRemap& remap) {
    auto out = open_out(path);
    out << "t,node,k,value\n";
    for (std::size_t t = 0; t < assoc.size(); ++t) {
        const Matrix& m = assoc[t];
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t q = 0; q < m.cols(); ++q)
                if (m(i, q) != 0.0)
                    out << t << ',' << remap.to_original[i] << ',' << q << ','
                        << format_value(m(i, q)) << "\n";
    }
}

void write_curve_csv(const std::filesystem::path& path, std::span<const CoveragePoint> curve) {
    auto out = open_out(path);
    out << "nu,coverage\n";
    for (const CoveragePoint& p : curve)
        out << format_value(p.nu) << ',' << format_value(p.coverage) << "\n";
}

void write_report_csv(const std::filesystem::path& path,
                      std::span<const std::pair<std::string, std::string>> rows) {
    auto out = open_out(path);
    out << "metric,value\n";
    for (const auto& [metric, value] : rows) out << metric << ',' << value << "\n";
}

void write_manifest(const std::filesystem::path& path,
                    std::span<const std::pair<std::string, std::string>> entries) {
    auto out = open_out(path);
    for (const auto& [key, value] : entries) out << key << '=' << value << "\n";
}

std::uint64_t fnv1a64_file(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

}  // namespace egoten
