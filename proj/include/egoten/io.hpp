#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "egoten/assignment.hpp"
#include "egoten/graph.hpp"
#include "egoten/matrix.hpp"
#include "egoten/metrics.hpp"
#include "egoten/solver.hpp"

namespace egoten {

/// Factor CSV: header "node,k0,k1,...", one row per matrix row, values with
/// 17 significant digits. The id column carries the ids passed in.
void write_factor_csv(const std::filesystem::path& path, const Matrix& m,
                      std::span<const std::int64_t> ids, const std::string& id_column = "node");

/// Trace CSV: "iter,objective,dA,dB,dC[,dD],seconds". Unless with_timing is
/// set, the seconds column is written as 0 so that repeated runs stay
/// byte-identical.
void write_trace_csv(const std::filesystem::path& path, const SolverTrace& trace, bool has_d,
                     bool with_timing);

/// Cover file: one community per line, space-separated original node ids.
void write_cover_file(const std::filesystem::path& path, const Cover& cover,
                      const NodeRemap& remap);

/// Reads a cover file of original node ids, mapping them through the remap.
Cover read_cover_file(const std::filesystem::path& path, const NodeRemap& remap, index_t n);

/// Reads a membership CSV ("node,k0,...") back into an N×K matrix, mapping
/// the id column through the remap. Rows may come in any order; missing
/// nodes keep zero rows.
Matrix read_membership_csv(const std::filesystem::path& path, const NodeRemap& remap, index_t n);

/// Node remap CSV: "original_id,internal_id".
void write_remap_csv(const std::filesystem::path& path, const NodeRemap& remap);

/// Edge list "u v [w]" (0-based contiguous ids), '#' header comment allowed.
void write_edge_list(const std::filesystem::path& path, const Graph& g, bool weighted);

/// Temporal edge list "t u v [w]".
void write_temporal_edge_list(const std::filesystem::path& path, const TemporalGraph& tg,
                              bool weighted);

/// Long-form association CSV: "t,node,k,value", zero entries omitted, node
/// ids mapped to originals.
void write_association_csv(const std::filesystem::path& path, const std::vector<Matrix>& assoc,
                           const NodeRemap& remap);

/// Coverage curve CSV: "nu,coverage".
void write_curve_csv(const std::filesystem::path& path, std::span<const CoveragePoint> curve);

/// Metric report CSV: "metric,value" rows.
void write_report_csv(const std::filesystem::path& path,
                      std::span<const std::pair<std::string, std::string>> rows);

/// Flat key=value run manifest, one pair per line, keys in the given order.
void write_manifest(const std::filesystem::path& path,
                    std::span<const std::pair<std::string, std::string>> entries);

/// FNV-1a digest of a file's bytes, for recording inputs in manifests.
std::uint64_t fnv1a64_file(const std::filesystem::path& path);

/// 17-significant-digit decimal form used by every CSV writer.
std::string format_value(double v);

}  // namespace egoten
