#ifndef GIRTHLAB_CYCLES_HPP
#define GIRTHLAB_CYCLES_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "girthlab/digraph.hpp"

namespace girthlab {

enum class Provenance { BfsOracle, ExpansionDisjointness, DenseSubgraphRecursion };

/// An explicit directed cycle: vertices[i] -> vertices[i+1] and
/// vertices.back() -> vertices.front() are all edges, no vertex repeats.
struct CycleWitness {
    std::vector<int> vertices;
    Provenance provenance = Provenance::BfsOracle;

    int length() const noexcept { return static_cast<int>(vertices.size()); }
};

/// Checks a witness edge-by-edge against the digraph (and simplicity).
bool validate_witness(const Digraph& d, const CycleWitness& w);

/// Exact girth via BFS from every vertex; nullopt iff acyclic.
/// `threads` caps the BFS-source parallelism; results are independent of
/// scheduling.
std::optional<int> girth(const Digraph& d, int threads = 1);

/// Shortest directed cycle with an explicit witness; nullopt iff acyclic.
std::optional<CycleWitness> shortest_cycle(const Digraph& d, int threads = 1);

struct MFreeResult {
    bool m_free;
    std::optional<CycleWitness> witness; // present iff !m_free (a shortest cycle)
};

/// True iff girth(d) > m. Requires m >= 3.
MFreeResult is_m_free(const Digraph& d, int m, int threads = 1);

enum class ExpansionMode { NoBaseTriangle, BaseTriangle, IndegreeLemma };

/// One expansion layer S_k grown from pivot w_k inside G_k. Every member's
/// predecessor on its chain back to the anchor is the layer's pivot.
struct ExpansionLayer {
    int pivot = -1;             // -1 when G_k was empty
    int subgraph_size = 0;      // |G_k|
    int pivot_outdeg_in_sub = 0;
    int pivot_outdeg = 0;       // outdegree of the pivot in the whole digraph
    std::vector<int> members;   // S_k, sorted
    double cumulative_lower_bound = 0.0; // guaranteed |S_1|+...+|S_k|
};

struct ExpansionTrace {
    ExpansionMode mode;
    int anchor_u = -1; // -1 in indegree-lemma mode
    int anchor_v = -1;
    std::vector<ExpansionLayer> layers;
};

/// Every vertex of the induced subgraph exceeded the alpha-fraction
/// outdegree cap; the caller recurses on it.
struct DenseSubgraph {
    std::vector<int> vertices;
    int min_outdeg_inside = 0;
};

using ExpandOutcome = std::variant<ExpansionTrace, CycleWitness, DenseSubgraph>;

/// Runs the layered set expansion from an anchor edge (u,v). Mode
/// NoBaseTriangle grows m-3 layers, BaseTriangle m-2 (seeding the first
/// layer inside the common out-neighborhood, which must be nonempty).
/// Any disjointness violation is returned as a short cycle reconstructed
/// from the stored chains.
ExpandOutcome expand_sets(const Digraph& d, double alpha, int m, int u, int v,
                          ExpansionMode mode);

/// Indegree-lemma variant anchored at a vertex: m-2 layers, base sets
/// {v}, N+(v), N-(v).
ExpandOutcome expand_sets(const Digraph& d, double alpha, int m, int v);

struct FinderResult {
    CycleWitness witness;
    int recursion_depth = 0;
};

/// Constructive short-cycle finder: requires every outdegree >= ceil(alpha*n).
/// For alpha >= alpha(m) this always produces a cycle of length <= m; below
/// that threshold the search is best-effort and may legitimately throw
/// Error(InternalContradiction).
FinderResult find_short_cycle_constructive(const Digraph& d, int m, double alpha);

const char* to_string(Provenance p) noexcept;
const char* to_string(ExpansionMode m) noexcept;

} // namespace girthlab

#endif
