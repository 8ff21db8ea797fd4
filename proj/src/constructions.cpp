#include "kempe/constructions.hpp"

#include <array>

#include "kempe/errors.hpp"

namespace kempe {

namespace {

constexpr int kRows = 3;
constexpr int kCols = 4;

// H-hat vertex -> index in H.
constexpr std::array<int, 9> kHHatToH = {1, 2, 3, 4, 6, 7, 8, 9, 11};

} // namespace

Graph build_H()
{
    return categorical_product_complete(kRows, kCols);
}

Graph build_H_hat()
{
    return delete_vertices(build_H(), singleton(0) | singleton(5) | singleton(10));
}

std::pair<int, int> h_hat_coordinates(Vertex v)
{
    const int h = kHHatToH.at(static_cast<std::size_t>(v));
    return {h / kCols + 1, h % kCols + 1};
}

Coloring frozen_coloring_H()
{
    Coloring c{{}, 4};
    for (int h = 0; h < kRows * kCols; ++h) c.colors.push_back(h % kCols + 1);
    return c;
}

Coloring row_coloring_H()
{
    Coloring c{{}, 4};
    for (int h = 0; h < kRows * kCols; ++h) c.colors.push_back(h / kCols + 1);
    return c;
}

Coloring frozen_coloring_H_hat()
{
    Coloring c{{}, 4};
    for (Vertex v = 0; v < 9; ++v) c.colors.push_back(h_hat_coordinates(v).second);
    return c;
}

Coloring row_coloring_H_hat()
{
    Coloring c{{}, 4};
    for (Vertex v = 0; v < 9; ++v) c.colors.push_back(h_hat_coordinates(v).first);
    return c;
}

GkBundle build_G_k(int k)
{
    if (k < 8) throw InputError("G_k needs k >= 8, got " + std::to_string(k));
    const int n = k + 5;
    if (n > kMaxVertices) throw InputError("G_k exceeds 64 vertices");
    constexpr int hat = 9;

    GkBundle out;
    out.k = k;
    out.graph = join(build_H_hat(), Graph::complete(k - 4));

    std::vector<Side> naive(static_cast<std::size_t>(n), Side::T);
    for (Vertex v = 0; v < hat; ++v) naive[v] = Side::S;
    out.naive_view = view_as_almost_bipartite(out.graph, naive);
    out.ell_naive = binomial2(k - 4) + 21;

    // The side holding H-hat takes ceil(n/2) vertices: H-hat plus the
    // lowest-index clique vertices.
    const int larger = (n + 1) / 2;
    if (larger >= hat) {
        std::vector<Side> balanced(static_cast<std::size_t>(n), Side::T);
        for (Vertex v = 0; v < larger; ++v) balanced[v] = Side::S;
        out.balanced_view = view_as_almost_bipartite(out.graph, balanced);
    }
    out.ell_balanced = f_bound(n) - (binomial2(hat) - 21);

    out.frozen = frozen_coloring_H_hat();
    out.frozen.k = k;
    for (int c = 5; c <= k; ++c) out.frozen.colors.push_back(c);
    return out;
}

} // namespace kempe
