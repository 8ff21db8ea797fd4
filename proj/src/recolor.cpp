#include "kempe/recolor.hpp"

#include <string>

#include "kempe/bounds.hpp"
#include "kempe/errors.hpp"

namespace kempe {

namespace {

VertexSet class_of(const Coloring& c, int color)
{
    VertexSet out = 0;
    for (Vertex v = 0; v < c.order(); ++v) {
        if (c[v] == color) out |= singleton(v);
    }
    return out;
}

int confined_count(const AlmostBipartiteView& view, const Coloring& c, int k)
{
    const VertexSet s = view.side_set(Side::S);
    const VertexSet t = view.side_set(Side::T);
    int count = 0;
    for (int color = 1; color <= k; ++color) {
        const VertexSet cls = class_of(c, color);
        if ((cls & s) == 0 || (cls & t) == 0) ++count;
    }
    return count;
}

void require_proper(const AlmostBipartiteView& view, const Coloring& c)
{
    if (!is_proper(view.graph, c)) throw InputError("coloring " + to_string(c) + " is not proper");
}

} // namespace

bool has_inside_edge(const AlmostBipartiteView& view, const Coloring& c, int i, int j)
{
    for (auto [u, v] : view.extra_edges) {
        if ((c[u] == i && c[v] == j) || (c[u] == j && c[v] == i)) return true;
    }
    return false;
}

Recoloring confine_pair(const AlmostBipartiteView& view, const Coloring& c, int i, int j)
{
    require_proper(view, c);
    if (i == j) throw InputError("confine_pair needs two distinct colors");
    if (has_inside_edge(view, c, i, j)) {
        throw InputError("an inside edge joins colors " + std::to_string(i) + " and " + std::to_string(j));
    }
    Recoloring out{c, {}};
    for (VertexSet comp : kempe_components(view.graph, c, i, j)) {
        bool misplaced = false;
        for_each_vertex(comp, [&](Vertex v) {
            misplaced = misplaced || (view.side[v] == Side::S && c[v] == j) || (view.side[v] == Side::T && c[v] == i);
        });
        if (!misplaced) continue;
        const KempeMove move{i, j, lowest(comp)};
        out.coloring = apply_swap(view.graph, out.coloring, move);
        out.moves.push_back(move);
    }
    return out;
}

std::optional<std::pair<int, int>> find_mergeable_pair(const AlmostBipartiteView& view, const Coloring& c, int k)
{
    require_proper(view, c);
    const VertexSet s = view.side_set(Side::S);
    const VertexSet t = view.side_set(Side::T);
    for (int i = 1; i <= k; ++i) {
        const VertexSet ci = class_of(c, i);
        if (ci == 0) continue;
        for (int j = i + 1; j <= k; ++j) {
            const VertexSet cj = class_of(c, j);
            if (cj == 0) continue;
            const VertexSet both = ci | cj;
            const bool one_side = (both & t) == 0 || (both & s) == 0;
            if (one_side && !has_inside_edge(view, c, i, j)) return std::pair{i, j};
        }
    }
    return std::nullopt;
}

Recoloring merge_pair(const AlmostBipartiteView& view, const Coloring& c, int i, int j)
{
    require_proper(view, c);
    if (i == j) throw InputError("merge_pair needs two distinct colors");
    const VertexSet both = class_of(c, i) | class_of(c, j);
    const bool one_side = (both & view.side_set(Side::T)) == 0 || (both & view.side_set(Side::S)) == 0;
    if (!one_side || has_inside_edge(view, c, i, j)) {
        throw InputError("colors " + std::to_string(i) + " and " + std::to_string(j) + " are not mergeable");
    }
    Recoloring out{c, {}};
    for_each_vertex(class_of(c, i), [&](Vertex v) {
        const KempeMove move{i, j, v};
        out.coloring = apply_swap(view.graph, out.coloring, move);
        out.moves.push_back(move);
    });
    return out;
}

ReductionRun reduce_to_fewer_colors(const AlmostBipartiteView& view, const Coloring& c, int k)
{
    require_proper(view, Coloring{c.colors, k});
    if (view.ell >= f_bound(k)) {
        throw InputError("reduce_to_fewer_colors needs ell = " + std::to_string(view.ell) + " < f(" +
                         std::to_string(k) + ") = " + std::to_string(f_bound(k)));
    }
    ReductionRun run{Coloring{c.colors, k}, {}, {}};
    if (colors_used(c) < k) return run;

    const VertexSet s = view.side_set(Side::S);
    const VertexSet t = view.side_set(Side::T);
    auto on_both_sides = [&](int color) {
        const VertexSet cls = class_of(run.coloring, color);
        return (cls & s) != 0 && (cls & t) != 0;
    };
    auto next_unconfined_pair = [&]() -> std::optional<std::pair<int, int>> {
        for (int i = 1; i <= k; ++i) {
            for (int j = i + 1; j <= k; ++j) {
                if ((on_both_sides(i) || on_both_sides(j)) && !has_inside_edge(view, run.coloring, i, j)) {
                    return std::pair{i, j};
                }
            }
        }
        return std::nullopt;
    };

    run.confined_counts.push_back(confined_count(view, run.coloring, k));
    while (auto pair = next_unconfined_pair()) {
        Recoloring step = confine_pair(view, run.coloring, pair->first, pair->second);
        run.coloring = std::move(step.coloring);
        run.moves.insert(run.moves.end(), step.moves.begin(), step.moves.end());
        const int measure = confined_count(view, run.coloring, k);
        if (measure <= run.confined_counts.back()) {
            throw InvariantViolation("confinement of colors " + std::to_string(pair->first) + "," +
                                     std::to_string(pair->second) + " did not increase the confined count");
        }
        run.confined_counts.push_back(measure);
        // Confinement can empty a class outright.
        if (colors_used(run.coloring) < k) return run;
    }

    const auto mergeable = find_mergeable_pair(view, run.coloring, k);
    if (!mergeable) {
        throw InvariantViolation("no mergeable pair for " + to_string(run.coloring) + " with ell = " +
                                 std::to_string(view.ell) + " < f(" + std::to_string(k) + ")");
    }
    Recoloring merged = merge_pair(view, run.coloring, mergeable->first, mergeable->second);
    run.coloring = std::move(merged.coloring);
    run.moves.insert(run.moves.end(), merged.moves.begin(), merged.moves.end());
    if (colors_used(run.coloring) >= k) throw InvariantViolation("merge did not reduce the number of colors");
    return run;
}

} // namespace kempe
