#include "kempe/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>

#include "kempe/errors.hpp"

namespace kempe {

Graph::Graph(int n) : n_(n)
{
    if (n < 0 || n > kMaxVertices) {
        throw InputError("graph order " + std::to_string(n) + " outside [0, 64]");
    }
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges)
{
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::complete(int n)
{
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.adj_[v] = first_n(n) & ~singleton(v);
    return g;
}

Graph Graph::cycle(int n)
{
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::path(int n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

int Graph::size() const
{
    int twice = 0;
    for (VertexSet row : adj_) twice += set_size(row);
    return twice / 2;
}

int Graph::min_degree() const
{
    int d = n_ == 0 ? 0 : kMaxVertices;
    for (VertexSet row : adj_) d = std::min(d, set_size(row));
    return d;
}

int Graph::max_degree() const
{
    int d = 0;
    for (VertexSet row : adj_) d = std::max(d, set_size(row));
    return d;
}

void Graph::add_edge(Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
        throw InputError("invalid edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    adj_[u] |= singleton(v);
    adj_[v] |= singleton(u);
}

void Graph::remove_edge(Vertex u, Vertex v)
{
    adj_[u] &= ~singleton(v);
    adj_[v] &= ~singleton(u);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
        for_each_vertex(adj_[u] & ~first_n(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
    }
    return out;
}

VertexSet AlmostBipartiteView::side_set(Side s) const
{
    VertexSet out = 0;
    for (Vertex v = 0; v < static_cast<int>(side.size()); ++v) {
        if (side[v] == s) out |= singleton(v);
    }
    return out;
}

// ---------------------------------------------------------------- graph6

namespace {

constexpr int kG6Offset = 63;

int decode_byte(char ch)
{
    const int b = static_cast<unsigned char>(ch);
    if (b < 63 || b > 126) {
        throw InputError("graph6 byte " + std::to_string(b) + " outside [63, 126]");
    }
    return b - kG6Offset;
}

} // namespace

Graph graph6_decode(std::string_view text)
{
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    if (text.empty()) throw InputError("empty graph6 string");
    if (text.front() == ':' || text.front() == ';') throw InputError("sparse6 input is not supported");
    if (text.front() == '&') throw InputError("digraph6 input is not supported");

    std::size_t pos = 0;
    long n = 0;
    if (text.front() == '~') {
        if (text.size() >= 2 && text[1] == '~') throw InputError("graph6 order exceeds 64");
        if (text.size() < 4) throw InputError("truncated graph6 long-form header");
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | decode_byte(text[i]);
        pos = 4;
        if (n < 63) throw InputError("graph6 long form used for order below 63");
    } else {
        n = decode_byte(text.front());
        pos = 1;
    }
    if (n > kMaxVertices) throw InputError("graph6 order " + std::to_string(n) + " exceeds 64");

    const long bits = n * (n - 1) / 2;
    const auto expected = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != expected) {
        throw InputError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(expected));
    }

    Graph g(static_cast<int>(n));
    long bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            const int byte = decode_byte(text[pos + static_cast<std::size_t>(bit / 6)]);
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string graph6_encode(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + kG6Offset));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kG6Offset));
    }
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kG6Offset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kG6Offset));
    return out;
}

// ---------------------------------------------------------------- combinators

Graph complement(const Graph& g)
{
    Graph out = Graph::complete(g.order());
    for (auto [u, v] : g.edges()) out.remove_edge(u, v);
    return out;
}

Graph categorical_product_complete(int m, int n)
{
    if (m < 1 || n < 1) throw InputError("categorical product factors must be non-empty");
    if (m * n > kMaxVertices) throw InputError("categorical product exceeds 64 vertices");
    Graph g(m * n);
    for (int a = 0; a < m * n; ++a) {
        for (int b = a + 1; b < m * n; ++b) {
            if (a / n != b / n && a % n != b % n) g.add_edge(a, b);
        }
    }
    return g;
}

Graph delete_vertices(const Graph& g, VertexSet drop)
{
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!contains(drop, v)) index[v] = next++;
    }
    Graph out(next);
    for (auto [u, v] : g.edges()) {
        if (index[u] >= 0 && index[v] >= 0) out.add_edge(index[u], index[v]);
    }
    return out;
}

Graph join(const Graph& g1, const Graph& g2)
{
    const int n1 = g1.order();
    const int n2 = g2.order();
    if (n1 + n2 > kMaxVertices) throw InputError("join exceeds 64 vertices");
    Graph out(n1 + n2);
    for (auto [u, v] : g1.edges()) out.add_edge(u, v);
    for (auto [u, v] : g2.edges()) out.add_edge(n1 + u, n1 + v);
    for (Vertex u = 0; u < n1; ++u) {
        for (Vertex v = 0; v < n2; ++v) out.add_edge(u, n1 + v);
    }
    return out;
}

// ---------------------------------------------------------------- coloring search

int clique_lower_bound(const Graph& g)
{
    int best = g.order() > 0 ? 1 : 0;
    for (Vertex start = 0; start < g.order(); ++start) {
        int size = 1;
        VertexSet cand = g.neighbors(start);
        while (cand != 0) {
            Vertex pick = -1;
            int pick_deg = -1;
            for_each_vertex(cand, [&](Vertex u) {
                const int d = set_size(g.neighbors(u) & cand);
                if (d > pick_deg) {
                    pick = u;
                    pick_deg = d;
                }
            });
            ++size;
            cand &= g.neighbors(pick);
        }
        best = std::max(best, size);
    }
    return best;
}

namespace {

std::vector<int> greedy_coloring(const Graph& g)
{
    std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : order) {
        std::uint64_t used = 0;
        for_each_vertex(g.neighbors(v), [&](Vertex u) {
            if (color[u] > 0) used |= std::uint64_t{1} << (color[u] - 1);
        });
        color[v] = std::countr_one(used) + 1;
    }
    return color;
}

// DSATUR-ordered backtracking. Color masks are bitsets over 0..k-1.
class ColoringSearch {
public:
    ColoringSearch(const Graph& g, int k) : g_(g), k_(k), color_(static_cast<std::size_t>(g.order()), -1) {}

    bool run()
    {
        std::array<std::uint64_t, kMaxVertices> forbidden{};
        return extend(g_.vertices(), forbidden, 0);
    }

    std::vector<int> colors() const
    {
        std::vector<int> out(color_.size());
        std::transform(color_.begin(), color_.end(), out.begin(), [](int c) { return c + 1; });
        return out;
    }

private:
    bool extend(VertexSet uncolored, std::array<std::uint64_t, kMaxVertices>& forbidden, int used)
    {
        if (uncolored == 0) return true;
        Vertex pick = -1;
        int best_sat = -1;
        int best_deg = -1;
        for_each_vertex(uncolored, [&](Vertex v) {
            const int sat = std::popcount(forbidden[v]);
            const int deg = set_size(g_.neighbors(v) & uncolored);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                pick = v;
                best_sat = sat;
                best_deg = deg;
            }
        });
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            const std::uint64_t bit = std::uint64_t{1} << c;
            if (forbidden[pick] & bit) continue;
            auto next = forbidden;
            for_each_vertex(g_.neighbors(pick) & uncolored, [&](Vertex u) { next[u] |= bit; });
            color_[pick] = c;
            if (extend(uncolored & ~singleton(pick), next, std::max(used, c + 1))) return true;
        }
        color_[pick] = -1;
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<int> color_;
};

} // namespace

int greedy_upper_bound(const Graph& g)
{
    const auto colors = greedy_coloring(g);
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

std::optional<Coloring> is_k_colorable(const Graph& g, int k)
{
    if (k < 0) throw InputError("color budget must be non-negative");
    if (g.order() == 0) return Coloring{{}, k};
    if (k == 0 || clique_lower_bound(g) > k) return std::nullopt;
    if (greedy_upper_bound(g) <= k) return Coloring{greedy_coloring(g), k};
    ColoringSearch search(g, std::min(k, kMaxVertices));
    if (!search.run()) return std::nullopt;
    return Coloring{search.colors(), k};
}

int chromatic_number(const Graph& g)
{
    if (g.order() == 0) return 0;
    const int lower = clique_lower_bound(g);
    int upper = greedy_upper_bound(g);
    for (int k = upper - 1; k >= lower; --k) {
        if (!is_k_colorable(g, k)) break;
        upper = k;
    }
    return upper;
}

// ---------------------------------------------------------------- bipartite views

std::optional<std::vector<Side>> bipartition_of(const Graph& g)
{
    const int n = g.order();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    for (Vertex root = 0; root < n; ++root) {
        if (label[root] >= 0) continue;
        label[root] = 0;
        std::queue<Vertex> frontier;
        frontier.push(root);
        while (!frontier.empty()) {
            const Vertex v = frontier.front();
            frontier.pop();
            bool clash = false;
            for_each_vertex(g.neighbors(v), [&](Vertex u) {
                if (label[u] < 0) {
                    label[u] = 1 - label[v];
                    frontier.push(u);
                } else if (label[u] == label[v]) {
                    clash = true;
                }
            });
            if (clash) return std::nullopt;
        }
    }
    std::vector<Side> side(static_cast<std::size_t>(n));
    std::transform(label.begin(), label.end(), side.begin(), [](int l) { return l == 0 ? Side::S : Side::T; });
    return side;
}

AlmostBipartiteView view_as_almost_bipartite(const Graph& g, const std::vector<Side>& side)
{
    if (static_cast<int>(side.size()) != g.order()) throw InputError("side assignment length differs from graph order");
    AlmostBipartiteView view{g, side, {}, 0};
    for (auto [u, v] : g.edges()) {
        if (side[u] == side[v]) view.extra_edges.emplace_back(u, v);
    }
    view.ell = static_cast<int>(view.extra_edges.size());
    return view;
}

} // namespace kempe
