#pragma once

// The k-coloring state space of a small graph and its Kempe move structure.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

/// Swap colors i and j on the (i,j)-component containing `anchor`.
struct KempeMove {
    int i = 0;
    int j = 0;
    Vertex anchor = 0;

    bool operator==(const KempeMove&) const = default;
};

struct KcReport {
    int kc = 0;
    std::vector<std::uint64_t> class_sizes;  ///< labeled colorings per class
    std::vector<Coloring> representatives;   ///< lexicographically first member
    std::vector<bool> frozen_classes;        ///< every member has the same color-class partition
    std::uint64_t total_colorings = 0;       ///< labeled count
    std::uint64_t states_explored = 0;       ///< states stored (canonical forms in canonical mode)
};

/// How kempe_classes keys its visited set. `labeled` walks every coloring
/// with named colors. `canonical` walks one representative per
/// color-permutation orbit and weights each by its orbit size; both produce
/// the same report because every global color transposition is a product of
/// Kempe swaps.
enum class StateSpace { labeled, canonical };

inline constexpr std::uint64_t kDefaultCap = 50'000'000;

/// Throws InputError if the coloring length differs from g.order(). Colors
/// outside 1..c.k make the coloring improper.
bool is_proper(const Graph& g, const Coloring& c);

int colors_used(const Coloring& c);

/// Relabel colors by order of first occurrence along the vertex order.
Coloring canonical_coloring(const Coloring& c);

/// True iff a and b induce the same partition into color classes.
bool same_partition(const Coloring& a, const Coloring& b);

/// Components of the subgraph induced by colors i and j, ordered by smallest
/// vertex. Throws InputError if i == j.
std::vector<VertexSet> kempe_components(const Graph& g, const Coloring& c, int i, int j);

/// Throws InputError unless the anchor is colored i or j and i != j.
Coloring apply_swap(const Graph& g, const Coloring& c, const KempeMove& m);

/// All distinct colorings one Kempe swap away, sorted.
std::vector<Coloring> neighbors(const Graph& g, const Coloring& c);

/// Streams every proper k-coloring in lexicographic order (backtracking in
/// vertex order, ascending colors). Throws ResourceError once more than
/// `cap` colorings have been produced.
void for_each_coloring(const Graph& g, int k, std::uint64_t cap, const std::function<void(const Coloring&)>& fn);
std::vector<Coloring> enumerate_colorings(const Graph& g, int k, std::uint64_t cap = kDefaultCap);

/// Partition of the proper k-colorings into Kempe classes by flood fill over
/// the move graph. `cap` bounds the number of stored states.
KcReport kempe_classes(const Graph& g, int k, std::uint64_t cap = kDefaultCap,
                       StateSpace space = StateSpace::labeled);

/// Every Kempe swap from c preserves the partition into color classes.
bool is_frozen(const Graph& g, const Coloring& c, int k);

std::string to_string(const Coloring& c);

} // namespace kempe
