#ifndef GIRTHLAB_GENERATORS_HPP
#define GIRTHLAB_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "girthlab/digraph.hpp"

namespace girthlab {

/// Circulant digraph: edges i -> (i+s) mod n for every offset s.
/// Offsets must satisfy 1 <= s <= n-1, be distinct, and never contain both
/// s and n-s (including s == n-s), which would create digons.
Digraph circulant(int n, const std::vector<int>& offsets);

/// Every vertex gets outdegree exactly r, edges sampled uniformly with
/// digon/duplicate rejection; the whole construction restarts after
/// 100*n*r failed attempts. Deterministic for a fixed seed.
Digraph random_outregular(int n, int r, std::uint64_t seed);

/// Inserts candidate edges in seeded random order, accepting an edge only
/// if it closes no cycle of length <= m, until the target edge count
/// density * C(n,2) is reached or candidates run out (best effort).
/// The result has girth > m by construction.
Digraph random_mfree(int n, int m, double density, std::uint64_t seed);

/// Acyclic tournament: edges i -> j for all i < j.
Digraph transitive_tournament(int n);

/// Generator request as it arrives from the CLI / files.
struct GenSpec {
    enum class Kind { Circulant, OutregularRandom, MfreeRandom, TransitiveTournament };
    Kind kind;
    int n = 0;
    std::vector<int> offsets;      // circulant
    int r = 0;                     // outregular-random
    int m = 0;                     // mfree-random
    double density = 1.0;          // mfree-random
    std::uint64_t seed = 0;
};

Digraph generate(const GenSpec& spec);

} // namespace girthlab

#endif
