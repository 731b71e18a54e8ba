#include "girthlab/digraph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace girthlab {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

Digraph Digraph::from_edge_list(int n, const std::vector<Edge>& edges) {
    if (n < 0)
        throw Error(ErrorCode::BadArgument, "vertex count must be >= 0");
    Digraph d;
    d.n_ = n;
    d.out_adj_.assign(n, {});
    d.in_adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorCode::VertexOutOfRange,
                        "edge " + edge_str(u, v) + " out of range [0," +
                            std::to_string(n) + ")");
        if (u == v)
            throw Error(ErrorCode::SelfLoop,
                        "self-loop at vertex " + std::to_string(u));
        d.out_adj_[u].push_back(v);
    }
    for (int v = 0; v < n; ++v) {
        auto& row = d.out_adj_[v];
        std::sort(row.begin(), row.end());
        if (auto it = std::adjacent_find(row.begin(), row.end()); it != row.end())
            throw Error(ErrorCode::DuplicateEdge,
                        "duplicate edge " + edge_str(v, *it));
        d.edge_count_ += row.size();
        for (int w : row)
            d.in_adj_[w].push_back(v);
    }
    for (int v = 0; v < n; ++v)
        std::sort(d.in_adj_[v].begin(), d.in_adj_[v].end());
    // Digon check needs both directions present.
    for (int u = 0; u < n; ++u)
        for (int v : d.out_adj_[u])
            if (u < v && std::binary_search(d.out_adj_[v].begin(),
                                            d.out_adj_[v].end(), u))
                throw Error(ErrorCode::Digon, "digon " + edge_str(u, v));
    d.build_bits();
    return d;
}

void Digraph::build_bits() {
    words_ = static_cast<std::size_t>((n_ + 63) / 64);
    out_bits_.assign(words_ * n_, 0);
    in_bits_.assign(words_ * n_, 0);
    for (int v = 0; v < n_; ++v) {
        for (int w : out_adj_[v])
            out_bits_[v * words_ + (w >> 6)] |= std::uint64_t{1} << (w & 63);
        for (int w : in_adj_[v])
            in_bits_[v * words_ + (w >> 6)] |= std::uint64_t{1} << (w & 63);
    }
}

std::vector<Edge> Digraph::edges() const {
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_adj_[u])
            result.emplace_back(u, v);
    return result;
}

std::int64_t Digraph::gamma() const noexcept {
    std::int64_t nn = n_;
    return nn * (nn - 1) / 2 - static_cast<std::int64_t>(edge_count_);
}

InducedSubgraph induced_subgraph(const Digraph& d, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw Error(ErrorCode::BadArgument, "duplicate vertex in induced set");
    if (!vertices.empty() && (vertices.front() < 0 || vertices.back() >= d.n()))
        throw Error(ErrorCode::VertexOutOfRange, "induced set out of range");

    std::vector<int> to_new(d.n(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        to_new[vertices[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (int u : vertices)
        for (int v : d.out(u))
            if (to_new[v] >= 0)
                edges.emplace_back(to_new[u], to_new[v]);

    int n_sub = static_cast<int>(vertices.size());
    return {Digraph::from_edge_list(n_sub, edges), std::move(vertices)};
}

int intersect_count(std::span<const std::uint64_t> a,
                    std::span<const std::uint64_t> b) {
    int total = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        total += std::popcount(a[i] & b[i]);
    return total;
}

int diff_count(std::span<const std::uint64_t> a,
               std::span<const std::uint64_t> b) {
    int total = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        total += std::popcount(a[i] & ~b[i]);
    return total;
}

} // namespace girthlab
