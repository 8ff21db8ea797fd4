#pragma once

// Brute-force oracles for the tests. Nothing here calls the engine: graphs
// are read through their edge list only, colorings are raw vectors, and
// Kempe classes come from union-find over every k^n assignment.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kempe/bounds.hpp"
#include "kempe/graph.hpp"
#include "kempe/verifier.hpp"

namespace oracle {

using Assignment = std::vector<int>;
using AdjList = std::vector<std::vector<int>>;

inline AdjList adjacency(const kempe::Graph& g)
{
    AdjList adj(static_cast<std::size_t>(g.order()));
    for (auto [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

inline bool proper(const AdjList& adj, const Assignment& c)
{
    for (std::size_t v = 0; v < adj.size(); ++v) {
        for (int u : adj[v]) {
            if (c[v] == c[u]) return false;
        }
    }
    return true;
}

/// Every proper coloring with colors 1..k, by odometer over k^n.
inline std::vector<Assignment> all_proper(const kempe::Graph& g, int k)
{
    const AdjList adj = adjacency(g);
    const int n = g.order();
    std::vector<Assignment> out;
    if (n == 0) return {Assignment{}};
    if (k == 0) return out;
    Assignment c(static_cast<std::size_t>(n), 1);
    while (true) {
        if (proper(adj, c)) out.push_back(c);
        int pos = n - 1;
        while (pos >= 0 && c[pos] == k) c[pos--] = 1;
        if (pos < 0) break;
        ++c[pos];
    }
    return out;
}

inline int chromatic_number(const kempe::Graph& g)
{
    for (int k = 0;; ++k) {
        if (!all_proper(g, k).empty()) return k;
    }
}

/// Component of `start` in the subgraph induced by colors i and j, by DFS.
inline std::vector<int> two_color_component(const AdjList& adj, const Assignment& c, int i, int j, int start)
{
    std::vector<int> seen(adj.size(), 0);
    std::vector<int> stack{start};
    std::vector<int> comp;
    seen[start] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (int u : adj[v]) {
            if (!seen[u] && (c[u] == i || c[u] == j)) {
                seen[u] = 1;
                stack.push_back(u);
            }
        }
    }
    return comp;
}

/// Every coloring one swap away: all (pair, component) choices.
inline std::set<Assignment> single_swaps(const kempe::Graph& g, const Assignment& c, int k)
{
    const AdjList adj = adjacency(g);
    std::set<Assignment> out;
    for (int i = 1; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            for (std::size_t v = 0; v < c.size(); ++v) {
                if (c[v] != i && c[v] != j) continue;
                Assignment next = c;
                for (int u : two_color_component(adj, c, i, j, static_cast<int>(v))) next[u] = c[u] == i ? j : i;
                out.insert(next);
            }
        }
    }
    return out;
}

struct Classes {
    int count = 0;
    std::vector<std::uint64_t> sizes; // sorted
    std::uint64_t total = 0;
};

inline Classes kempe_classes(const kempe::Graph& g, int k)
{
    const auto colorings = all_proper(g, k);
    std::map<Assignment, int> index;
    for (int t = 0; t < static_cast<int>(colorings.size()); ++t) index[colorings[t]] = t;
    std::vector<int> parent(colorings.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int t = 0; t < static_cast<int>(colorings.size()); ++t) {
        for (const auto& next : single_swaps(g, colorings[t], k)) parent[find(t)] = find(index.at(next));
    }
    std::map<int, std::uint64_t> sizes;
    for (int t = 0; t < static_cast<int>(colorings.size()); ++t) ++sizes[find(t)];
    Classes out;
    out.count = static_cast<int>(sizes.size());
    for (auto [root, size] : sizes) out.sizes.push_back(size);
    std::sort(out.sizes.begin(), out.sizes.end());
    out.total = colorings.size();
    return out;
}

/// Colors relabeled in order of first appearance.
inline Assignment partition_key(const Assignment& c)
{
    std::map<int, int> relabel;
    Assignment out;
    for (int x : c) {
        auto it = relabel.try_emplace(x, static_cast<int>(relabel.size()) + 1).first;
        out.push_back(it->second);
    }
    return out;
}

inline kempe::Graph random_graph(std::mt19937_64& rng, int n, double p)
{
    std::bernoulli_distribution keep(p);
    kempe::Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (keep(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

/// Random proper k-coloring by greedy over a shuffled order, or an empty
/// vector if the greedy pass gets stuck.
inline Assignment random_proper(std::mt19937_64& rng, const kempe::Graph& g, int k)
{
    const AdjList adj = adjacency(g);
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Assignment c(order.size(), 0);
    for (int v : order) {
        std::vector<int> free;
        for (int color = 1; color <= k; ++color) {
            if (std::none_of(adj[v].begin(), adj[v].end(), [&](int u) { return c[u] == color; })) free.push_back(color);
        }
        if (free.empty()) return {};
        c[v] = free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
    }
    return c;
}

struct RecolorInstance {
    kempe::AlmostBipartiteView view;
    kempe::Coloring coloring;
    int k = 0;
};

/// Random view with ell < f(k) and a random proper k-coloring of it. Tries
/// a few times for a coloring using all k colors, the only case where the
/// procedure has work to do.
inline RecolorInstance random_recolor_instance(std::mt19937_64& rng, int nmax = 12)
{
    while (true) {
        const int k = std::uniform_int_distribution<int>(3, 6)(rng);
        const int n = std::uniform_int_distribution<int>(k, nmax)(rng);
        const int ell = std::uniform_int_distribution<int>(0, static_cast<int>(kempe::f_bound(k)) - 1)(rng);
        const double p = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
        auto view = kempe::random_almost_bipartite(rng, n, ell, p);
        Assignment best;
        for (int attempt = 0; attempt < 20; ++attempt) {
            Assignment a = random_proper(rng, view.graph, k);
            if (a.empty()) continue;
            best = a;
            if (std::set<int>(a.begin(), a.end()).size() == static_cast<std::size_t>(k)) break;
        }
        if (best.empty()) continue;
        return {std::move(view), kempe::Coloring{best, k}, k};
    }
}

inline std::vector<std::string> read_lines(const std::string& path)
{
    std::ifstream in(path);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

} // namespace oracle
