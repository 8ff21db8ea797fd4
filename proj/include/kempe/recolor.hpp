#pragma once

// Constructive recoloring on almost-bipartite graphs: move each color onto a
// single side, then absorb one color into another with singleton swaps. When
// fewer than f(k) edges lie inside the parts this always reaches a
// (k-1)-coloring, and the returned move list is a replayable witness.

#include <optional>
#include <utility>
#include <vector>

#include "kempe/kempe.hpp"

namespace kempe {

struct Recoloring {
    Coloring coloring;
    std::vector<KempeMove> moves;
};

struct ReductionRun {
    Coloring coloring;
    std::vector<KempeMove> moves;
    /// Colors (of 1..k) present on at most one side, recorded before the
    /// first confinement and after each one.
    std::vector<int> confined_counts;
};

/// True if some edge inside a part joins a vertex colored i to one colored j.
bool has_inside_edge(const AlmostBipartiteView& view, const Coloring& c, int i, int j);

/// Swap every (i,j)-component that puts j on S or i on T. Afterwards i
/// appears only on S and j only on T. Throws InputError if an inside edge
/// joins colors i and j.
Recoloring confine_pair(const AlmostBipartiteView& view, const Coloring& c, int i, int j);

/// Lexicographically smallest pair of used colors lying on one common side
/// with no inside edge between them.
std::optional<std::pair<int, int>> find_mergeable_pair(const AlmostBipartiteView& view, const Coloring& c, int k);

/// Recolor every vertex colored i to j, one singleton swap per vertex.
/// Throws InputError if the pair is not mergeable.
Recoloring merge_pair(const AlmostBipartiteView& view, const Coloring& c, int i, int j);

/// Requires view.ell < f_bound(k). Returns a coloring using at most k-1
/// colors together with the moves reaching it. Throws InvariantViolation if
/// the confinement measure stalls or no mergeable pair exists.
ReductionRun reduce_to_fewer_colors(const AlmostBipartiteView& view, const Coloring& c, int k);

} // namespace kempe
