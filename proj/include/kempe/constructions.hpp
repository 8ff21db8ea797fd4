#pragma once

// The frozen graphs and the join family built from them.
//
// Index layouts:
//   H = K3 x K4: vertex (i, j) at 4(i-1) + (j-1).
//   H-hat: H minus (1,1), (2,2), (3,3); the survivors in order are
//     0:(1,2) 1:(1,3) 2:(1,4) 3:(2,1) 4:(2,3) 5:(2,4) 6:(3,1) 7:(3,2) 8:(3,4)
//   G_k: H-hat at 0..8, the clique K_{k-4} at 9..k+4.

#include <optional>

#include "kempe/bounds.hpp"
#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

struct GkBundle {
    int k = 0;
    Graph graph;
    AlmostBipartiteView naive_view;                   ///< H-hat vs the clique
    std::optional<AlmostBipartiteView> balanced_view; ///< k >= 12 only
    Coloring frozen;
    long ell_naive = 0;    ///< C(k-4, 2) + 21
    long ell_balanced = 0; ///< f(k+5) - 15; meaningful when balanced_view is set
};

Graph build_H();
Graph build_H_hat();

/// H-hat coordinates (i, j), 1-based, of each vertex in index order.
std::pair<int, int> h_hat_coordinates(Vertex v);

/// Second coordinate of each vertex: 4 colors, classes of sizes 2,2,2,3.
Coloring frozen_coloring_H_hat();
/// First coordinate of each vertex: a proper 3-coloring with k = 4.
Coloring row_coloring_H_hat();

Coloring frozen_coloring_H();
Coloring row_coloring_H();

/// Throws InputError for k < 8.
GkBundle build_G_k(int k);

} // namespace kempe
