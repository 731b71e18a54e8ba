#ifndef GIRTHLAB_DIGRAPH_HPP
#define GIRTHLAB_DIGRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "girthlab/errors.hpp"

namespace girthlab {

using Edge = std::pair<int, int>;

/// Simple loopless, digon-free directed graph on dense 0-based vertices.
///
/// Adjacency is kept in both directions as sorted lists (canonical) plus
/// word-packed bit rows, which make neighborhood intersections cheap.
/// Immutable after construction; concurrent reads are safe.
class Digraph {
public:
    /// Builds and validates a digraph from an explicit edge list.
    /// Throws Error with code SelfLoop / Digon / DuplicateEdge /
    /// VertexOutOfRange on the first offending edge.
    static Digraph from_edge_list(int n, const std::vector<Edge>& edges);

    int n() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const int> out(int v) const { return out_adj_[v]; }
    std::span<const int> in(int v) const { return in_adj_[v]; }
    int outdeg(int v) const { return static_cast<int>(out_adj_[v].size()); }
    int indeg(int v) const { return static_cast<int>(in_adj_[v].size()); }

    bool has_edge(int u, int v) const {
        return (out_bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
                (v & 63)) & 1u;
    }

    /// Word-packed out-/in-neighborhood rows (words_per_row() words each).
    std::span<const std::uint64_t> out_row(int v) const {
        return {out_bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }
    std::span<const std::uint64_t> in_row(int v) const {
        return {in_bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }
    std::size_t words_per_row() const noexcept { return words_; }

    /// All edges sorted lexicographically by (u, v).
    std::vector<Edge> edges() const;

    /// Number of unordered nonadjacent vertex pairs, C(n,2) - edge_count.
    /// Valid because digon-freedom gives each adjacent pair exactly one edge.
    std::int64_t gamma() const noexcept;

    bool operator==(const Digraph& other) const = default;

private:
    Digraph() = default;
    void build_bits();

    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<int>> out_adj_;
    std::vector<std::vector<int>> in_adj_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> out_bits_;
    std::vector<std::uint64_t> in_bits_;
};

/// Subgraph induced by `vertices` (need not be sorted; duplicates rejected),
/// plus the map from new index to original vertex id.
struct InducedSubgraph {
    Digraph graph;
    std::vector<int> to_original;
};

InducedSubgraph induced_subgraph(const Digraph& d, std::vector<int> vertices);

/// Popcount of the intersection of two bit rows.
int intersect_count(std::span<const std::uint64_t> a,
                    std::span<const std::uint64_t> b);

/// Popcount of a \ b.
int diff_count(std::span<const std::uint64_t> a,
               std::span<const std::uint64_t> b);

} // namespace girthlab

#endif
