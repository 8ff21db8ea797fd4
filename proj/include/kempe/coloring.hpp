#pragma once

#include <vector>

namespace kempe {

/// A point of the k-coloring space: colors[v] in 1..k. Properness is a
/// property relative to a graph and is checked by is_proper.
struct Coloring {
    std::vector<int> colors;
    int k = 0;

    int order() const { return static_cast<int>(colors.size()); }
    int operator[](int v) const { return colors[v]; }
    bool operator==(const Coloring&) const = default;
};

} // namespace kempe
