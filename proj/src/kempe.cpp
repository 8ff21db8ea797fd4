#include "kempe/kempe.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "kempe/errors.hpp"

namespace kempe {

namespace {

VertexSet component_of(const Graph& g, VertexSet within, Vertex v)
{
    VertexSet comp = singleton(v);
    VertexSet frontier = comp;
    while (frontier != 0) {
        const Vertex u = lowest(frontier);
        frontier &= frontier - 1;
        const VertexSet fresh = g.neighbors(u) & within & ~comp;
        comp |= fresh;
        frontier |= fresh;
    }
    return comp;
}

/// masks[c] = vertices colored c, for c in 0..k (index 0 unused).
std::vector<VertexSet> color_masks(const std::vector<int>& colors, int k)
{
    std::vector<VertexSet> masks(static_cast<std::size_t>(k) + 1, 0);
    for (Vertex v = 0; v < static_cast<int>(colors.size()); ++v) masks[colors[v]] |= singleton(v);
    return masks;
}

void relabel_in_place(std::vector<int>& colors, std::vector<int>& scratch)
{
    std::fill(scratch.begin(), scratch.end(), 0);
    int next = 0;
    for (int& c : colors) {
        if (scratch[c] == 0) scratch[c] = ++next;
        c = scratch[c];
    }
}

void check_length(const Graph& g, const Coloring& c)
{
    if (c.order() != g.order()) {
        throw InputError("coloring has " + std::to_string(c.order()) + " entries for a graph of order " +
                         std::to_string(g.order()));
    }
}

// Colorings packed as fixed-width digits, vertex 0 most significant, so
// word-wise lexicographic order matches the coloring order.
class StateCodec {
public:
    StateCodec(int n, int k)
        : n_(n)
        , bits_(std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(std::max(k, 1) - 1)))))
        , per_word_(64 / bits_)
        , words_(std::max(1, (n + per_word_ - 1) / per_word_))
    {
    }

    int words() const { return words_; }

    void pack(const std::vector<int>& colors, std::uint64_t* out) const
    {
        std::fill(out, out + words_, 0);
        for (Vertex v = 0; v < n_; ++v) {
            out[v / per_word_] |= static_cast<std::uint64_t>(colors[v] - 1) << shift(v);
        }
    }

    void unpack(const std::uint64_t* in, std::vector<int>& colors) const
    {
        const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
        for (Vertex v = 0; v < n_; ++v) colors[v] = static_cast<int>((in[v / per_word_] >> shift(v)) & mask) + 1;
    }

private:
    int shift(Vertex v) const { return (per_word_ - 1 - v % per_word_) * bits_; }

    int n_;
    int bits_;
    int per_word_;
    int words_;
};

// Sorted flat array of packed states; appended in increasing order.
class StateTable {
public:
    explicit StateTable(const StateCodec& codec) : codec_(codec) {}

    std::size_t size() const { return keys_.size() / static_cast<std::size_t>(codec_.words()); }
    const std::uint64_t* at(std::size_t idx) const { return keys_.data() + idx * static_cast<std::size_t>(codec_.words()); }

    void push(const std::vector<int>& colors)
    {
        const auto w = static_cast<std::size_t>(codec_.words());
        keys_.resize(keys_.size() + w);
        codec_.pack(colors, keys_.data() + keys_.size() - w);
    }

    std::size_t find(const std::uint64_t* key) const
    {
        const int w = codec_.words();
        std::size_t lo = 0;
        std::size_t hi = size();
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            if (std::lexicographical_compare(at(mid), at(mid) + w, key, key + w)) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        if (lo == size() || !std::equal(key, key + w, at(lo))) {
            throw InvariantViolation("Kempe neighbor missing from the enumerated state space");
        }
        return lo;
    }

private:
    const StateCodec& codec_;
    std::vector<std::uint64_t> keys_;
};

// Backtracking over proper colorings in vertex order, ascending colors. With
// `canonical` set only first-occurrence-labeled colorings are produced.
class ColoringEnumerator {
public:
    ColoringEnumerator(const Graph& g, int k, bool canonical, std::uint64_t cap)
        : g_(g), k_(k), canonical_(canonical), cap_(cap), colors_(static_cast<std::size_t>(g.order()), 0)
    {
    }

    template <class Fn> void run(Fn&& fn)
    {
        if (g_.order() == 0) {
            emit(fn);
            return;
        }
        if (k_ <= 0) return;
        extend(0, 0, fn);
    }

private:
    template <class Fn> void emit(Fn& fn)
    {
        if (++count_ > cap_) {
            throw ResourceError("coloring enumeration exceeded cap of " + std::to_string(cap_), count_ - 1);
        }
        fn(colors_);
    }

    template <class Fn> void extend(Vertex v, int used, Fn& fn)
    {
        if (v == g_.order()) {
            emit(fn);
            return;
        }
        std::uint64_t blocked = 0;
        for_each_vertex(g_.neighbors(v) & first_n(v), [&](Vertex u) { blocked |= std::uint64_t{1} << (colors_[u] - 1); });
        const int limit = canonical_ ? std::min(k_, used + 1) : k_;
        for (int c = 1; c <= limit; ++c) {
            if ((blocked >> (c - 1)) & 1) continue;
            colors_[v] = c;
            extend(v + 1, std::max(used, c), fn);
        }
    }

    const Graph& g_;
    int k_;
    bool canonical_;
    std::uint64_t cap_;
    std::uint64_t count_ = 0;
    std::vector<int> colors_;
};

std::uint64_t falling_factorial(int k, int m)
{
    std::uint64_t out = 1;
    for (int t = 0; t < m; ++t) {
        const auto factor = static_cast<std::uint64_t>(k - t);
        if (out > std::numeric_limits<std::uint64_t>::max() / factor) {
            throw InputError("labeled coloring count overflows 64 bits");
        }
        out *= factor;
    }
    return out;
}

} // namespace

bool is_proper(const Graph& g, const Coloring& c)
{
    check_length(g, c);
    for (int color : c.colors) {
        if (color < 1 || color > c.k) return false;
    }
    for (auto [u, v] : g.edges()) {
        if (c[u] == c[v]) return false;
    }
    return true;
}

int colors_used(const Coloring& c)
{
    std::vector<int> seen;
    for (int color : c.colors) {
        if (std::find(seen.begin(), seen.end(), color) == seen.end()) seen.push_back(color);
    }
    return static_cast<int>(seen.size());
}

Coloring canonical_coloring(const Coloring& c)
{
    Coloring out = c;
    int top = c.k;
    for (int color : c.colors) {
        if (color < 1) throw InputError("colors must be positive");
        top = std::max(top, color);
    }
    std::vector<int> scratch(static_cast<std::size_t>(top) + 1);
    relabel_in_place(out.colors, scratch);
    return out;
}

bool same_partition(const Coloring& a, const Coloring& b)
{
    return canonical_coloring(a).colors == canonical_coloring(b).colors;
}

std::vector<VertexSet> kempe_components(const Graph& g, const Coloring& c, int i, int j)
{
    check_length(g, c);
    if (i == j) throw InputError("Kempe pair needs two distinct colors");
    VertexSet within = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (c[v] == i || c[v] == j) within |= singleton(v);
    }
    std::vector<VertexSet> out;
    while (within != 0) {
        const VertexSet comp = component_of(g, within, lowest(within));
        out.push_back(comp);
        within &= ~comp;
    }
    return out;
}

Coloring apply_swap(const Graph& g, const Coloring& c, const KempeMove& m)
{
    check_length(g, c);
    if (m.i == m.j) throw InputError("Kempe move needs two distinct colors");
    if (m.anchor < 0 || m.anchor >= g.order()) throw InputError("Kempe move anchor out of range");
    if (c[m.anchor] != m.i && c[m.anchor] != m.j) {
        throw InputError("anchor " + std::to_string(m.anchor) + " is colored " + std::to_string(c[m.anchor]) +
                         ", not " + std::to_string(m.i) + " or " + std::to_string(m.j));
    }
    VertexSet within = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (c[v] == m.i || c[v] == m.j) within |= singleton(v);
    }
    Coloring out = c;
    for_each_vertex(component_of(g, within, m.anchor), [&](Vertex v) { out.colors[v] = c[v] == m.i ? m.j : m.i; });
    return out;
}

std::vector<Coloring> neighbors(const Graph& g, const Coloring& c)
{
    check_length(g, c);
    if (!is_proper(g, c)) throw InputError("neighbors requires a proper coloring");
    std::vector<Coloring> out;
    const auto masks = color_masks(c.colors, c.k);
    for (int i = 1; i <= c.k; ++i) {
        for (int j = i + 1; j <= c.k; ++j) {
            VertexSet rest = masks[i] | masks[j];
            while (rest != 0) {
                const VertexSet comp = component_of(g, masks[i] | masks[j], lowest(rest));
                rest &= ~comp;
                Coloring next = c;
                for_each_vertex(comp, [&](Vertex v) { next.colors[v] = c[v] == i ? j : i; });
                out.push_back(std::move(next));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Coloring& a, const Coloring& b) { return a.colors < b.colors; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void for_each_coloring(const Graph& g, int k, std::uint64_t cap, const std::function<void(const Coloring&)>& fn)
{
    if (k < 0) throw InputError("color budget must be non-negative");
    if (k > kMaxVertices) throw InputError("color budget above 64 is not supported");
    Coloring current{{}, k};
    ColoringEnumerator(g, k, false, cap).run([&](const std::vector<int>& colors) {
        current.colors = colors;
        fn(current);
    });
}

std::vector<Coloring> enumerate_colorings(const Graph& g, int k, std::uint64_t cap)
{
    std::vector<Coloring> out;
    for_each_coloring(g, k, cap, [&](const Coloring& c) { out.push_back(c); });
    return out;
}

KcReport kempe_classes(const Graph& g, int k, std::uint64_t cap, StateSpace space)
{
    if (k < 0) throw InputError("color budget must be non-negative");
    if (k > kMaxVertices) throw InputError("color budget above 64 is not supported");
    const bool canonical = space == StateSpace::canonical;
    const int n = g.order();

    StateCodec codec(n, k);
    StateTable table(codec);
    ColoringEnumerator(g, k, canonical, cap).run([&](const std::vector<int>& colors) { table.push(colors); });

    KcReport report;
    report.states_explored = table.size();
    const std::size_t states = table.size();
    std::vector<bool> visited(states, false);
    std::vector<std::size_t> frontier;
    std::vector<int> colors(static_cast<std::size_t>(n));
    std::vector<int> next(static_cast<std::size_t>(n));
    std::vector<int> scratch(static_cast<std::size_t>(k) + 1);
    std::vector<std::uint64_t> key(static_cast<std::size_t>(codec.words()));

    for (std::size_t seed = 0; seed < states; ++seed) {
        if (visited[seed]) continue;
        visited[seed] = true;
        frontier.push_back(seed);

        std::vector<int> rep(static_cast<std::size_t>(n));
        codec.unpack(table.at(seed), rep);
        std::vector<int> rep_partition = rep;
        relabel_in_place(rep_partition, scratch);

        std::uint64_t class_size = 0;
        std::uint64_t members = 0;
        bool frozen = true;
        while (!frontier.empty()) {
            const std::size_t state = frontier.back();
            frontier.pop_back();
            codec.unpack(table.at(state), colors);
            ++members;

            const auto masks = color_masks(colors, k);
            int used = 0;
            for (int c = 1; c <= k; ++c) used += masks[c] != 0 ? 1 : 0;
            if (canonical) {
                class_size += falling_factorial(k, used);
            } else {
                ++class_size;
                if (frozen) {
                    next = colors;
                    relabel_in_place(next, scratch);
                    frozen = next == rep_partition;
                }
            }

            // Canonical states use colors 1..used, and every unused color is
            // interchangeable, so only used + 1 needs to be tried.
            const int top = canonical ? std::min(k, used + 1) : k;
            for (int i = 1; i <= top; ++i) {
                for (int j = i + 1; j <= top; ++j) {
                    const VertexSet within = masks[i] | masks[j];
                    VertexSet rest = within;
                    while (rest != 0) {
                        const VertexSet comp = component_of(g, within, lowest(rest));
                        rest &= ~comp;
                        next = colors;
                        for_each_vertex(comp, [&](Vertex v) { next[v] = colors[v] == i ? j : i; });
                        if (canonical) relabel_in_place(next, scratch);
                        codec.pack(next, key.data());
                        const std::size_t idx = table.find(key.data());
                        if (!visited[idx]) {
                            visited[idx] = true;
                            frontier.push_back(idx);
                        }
                    }
                }
            }
        }
        if (canonical) frozen = members == 1;

        report.class_sizes.push_back(class_size);
        report.representatives.push_back(Coloring{std::move(rep), k});
        report.frozen_classes.push_back(frozen);
        report.total_colorings += class_size;
    }
    report.kc = static_cast<int>(report.class_sizes.size());
    return report;
}

bool is_frozen(const Graph& g, const Coloring& c, int k)
{
    Coloring as_k{c.colors, k};
    if (!is_proper(g, as_k)) throw InputError("is_frozen requires a proper coloring");
    const auto masks = color_masks(c.colors, k);
    std::vector<int> used;
    for (int color = 1; color <= k; ++color) {
        if (masks[color] != 0) used.push_back(color);
    }
    for (std::size_t a = 0; a < used.size(); ++a) {
        for (std::size_t b = a + 1; b < used.size(); ++b) {
            const VertexSet within = masks[used[a]] | masks[used[b]];
            if (component_of(g, within, lowest(within)) != within) return false;
        }
    }
    if (static_cast<int>(used.size()) < k) {
        for (int color : used) {
            if (set_size(masks[color]) > 1) return false;
        }
    }
    return true;
}

std::string to_string(const Coloring& c)
{
    std::ostringstream out;
    out << '(';
    for (std::size_t v = 0; v < c.colors.size(); ++v) out << (v ? "," : "") << c.colors[v];
    out << ')';
    return out.str();
}

} // namespace kempe
