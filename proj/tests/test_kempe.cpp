#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "kempe/constructions.hpp"
#include "kempe/errors.hpp"
#include "kempe/kempe.hpp"
#include "kempe/verifier.hpp"
#include "support.hpp"

using namespace kempe;

namespace {

Coloring col(std::vector<int> c, int k) { return Coloring{std::move(c), k}; }

std::vector<std::uint64_t> sorted_sizes(const KcReport& r)
{
    auto s = r.class_sizes;
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

TEST_CASE("is_proper")
{
    CHECK(is_proper(Graph::cycle(4), col({1, 2, 1, 2}, 2)));
    CHECK_FALSE(is_proper(Graph::complete(2), col({1, 1}, 2)));
    CHECK_FALSE(is_proper(Graph::complete(2), col({1, 3}, 2)));
    CHECK_FALSE(is_proper(Graph::complete(2), col({0, 1}, 2)));
    CHECK_THROWS_AS(is_proper(Graph::complete(2), col({1}, 2)), InputError);
    CHECK(is_proper(build_H(), frozen_coloring_H()));
}

TEST_CASE("kempe_components")
{
    const auto c4 = kempe_components(Graph::cycle(4), col({1, 2, 1, 2}, 2), 1, 2);
    REQUIRE(c4.size() == 1);
    CHECK(set_size(c4[0]) == 4);

    const auto p = kempe_components(Graph::path(3), col({1, 2, 1}, 3), 1, 3);
    CHECK(p == std::vector<VertexSet>{singleton(0), singleton(2)});

    const Graph h = build_H();
    const Coloring beta = frozen_coloring_H();
    for (int i = 1; i <= 4; ++i) {
        for (int j = i + 1; j <= 4; ++j) {
            const auto comps = kempe_components(h, beta, i, j);
            REQUIRE(comps.size() == 1);
            CHECK(set_size(comps[0]) == 6);
        }
    }
    CHECK_THROWS_AS(kempe_components(Graph::path(3), col({1, 2, 1}, 3), 2, 2), InputError);
}

TEST_CASE("apply_swap")
{
    CHECK(apply_swap(Graph::cycle(4), col({1, 2, 1, 2}, 2), {1, 2, 3}) == col({2, 1, 2, 1}, 2));
    CHECK(apply_swap(Graph::path(3), col({1, 2, 1}, 3), {1, 3, 0}) == col({3, 2, 1}, 3));
    CHECK_THROWS_AS(apply_swap(Graph::path(3), col({1, 2, 1}, 3), {1, 3, 1}), InputError);
}

TEST_CASE("swap involution and properness preservation")
{
    std::mt19937_64 rng(21);
    int checked = 0;
    while (checked < 2000) {
        const int n = std::uniform_int_distribution<int>(1, 10)(rng);
        const int k = std::uniform_int_distribution<int>(2, 5)(rng);
        const Graph g = oracle::random_graph(rng, n, 0.4);
        const auto a = oracle::random_proper(rng, g, k);
        if (a.empty()) continue;
        const Coloring c = col(a, k);
        const Vertex v = std::uniform_int_distribution<int>(0, n - 1)(rng);
        int other = std::uniform_int_distribution<int>(1, k - 1)(rng);
        if (other >= c[v]) ++other;
        const KempeMove m{c[v], other, v};
        const Coloring d = apply_swap(g, c, m);
        REQUIRE(is_proper(g, d));
        CHECK(apply_swap(g, d, m) == c);
        ++checked;
    }
}

TEST_CASE("neighbors agree with the single-swap oracle for n <= 5")
{
    CHECK(neighbors(Graph::complete(2), col({1, 2}, 2)) == std::vector<Coloring>{col({2, 1}, 2)});

    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : generate_all_graphs_small(n)) {
            for (int k : {2, 3}) {
                for (const auto& a : oracle::all_proper(g, k)) {
                    std::set<oracle::Assignment> expected = oracle::single_swaps(g, a, k);
                    expected.erase(a);
                    std::set<oracle::Assignment> got;
                    for (const Coloring& d : neighbors(g, col(a, k))) got.insert(d.colors);
                    REQUIRE(got == expected);
                }
            }
        }
    }
}

TEST_CASE("enumerate_colorings")
{
    CHECK(enumerate_colorings(Graph::complete(3), 3).size() == 6);
    CHECK(enumerate_colorings(Graph::cycle(6), 2).size() == 2);

    // Chromatic polynomial of C_n: (k-1)^n + (-1)^n (k-1).
    for (int n = 3; n <= 8; ++n) {
        for (int k = 2; k <= 4; ++k) {
            long expected = 1;
            for (int t = 0; t < n; ++t) expected *= k - 1;
            expected += (n % 2 == 0 ? 1 : -1) * (k - 1);
            CHECK(static_cast<long>(enumerate_colorings(Graph::cycle(n), k).size()) == expected);
        }
    }
    CHECK(enumerate_colorings(Graph::cycle(5), 3).size() == 30);

    const auto all = enumerate_colorings(Graph::path(4), 3);
    CHECK(std::is_sorted(all.begin(), all.end(), [](const Coloring& a, const Coloring& b) { return a.colors < b.colors; }));
    CHECK(all.size() == oracle::all_proper(Graph::path(4), 3).size());

    try {
        enumerate_colorings(Graph(6), 3, 100);
        FAIL("cap not enforced");
    } catch (const ResourceError& e) {
        CHECK(e.partial_count() == 100);
    }
}

TEST_CASE("canonical_coloring and same_partition")
{
    CHECK(canonical_coloring(col({3, 1, 3}, 3)) == col({1, 2, 1}, 3));
    CHECK(same_partition(col({3, 1, 3}, 3), col({2, 3, 2}, 3)));
    CHECK_FALSE(same_partition(col({1, 1, 2}, 3), col({1, 2, 2}, 3)));
    CHECK(colors_used(col({3, 1, 3}, 4)) == 2);
}

TEST_CASE("kempe_classes small values")
{
    CHECK(kempe_classes(Graph::complete(4), 4).kc == 1);
    CHECK(kempe_classes(Graph::complete(4), 4).total_colorings == 24);
    CHECK(kempe_classes(Graph::cycle(6), 3).kc == 1);
    CHECK(kempe_classes(Graph::cycle(5), 3).total_colorings == 30);

    const KcReport e = kempe_classes(Graph(0), 3);
    CHECK(e.kc == 1);
    CHECK(e.total_colorings == 1);
    CHECK(kempe_classes(Graph(1), 0).kc == 0);
}

TEST_CASE("kempe_classes agrees with union-find oracle")
{
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : generate_all_graphs_small(n)) {
            for (int k = 2; k <= 3; ++k) {
                const oracle::Classes want = oracle::kempe_classes(g, k);
                const KcReport got = kempe_classes(g, k);
                REQUIRE(got.kc == want.count);
                REQUIRE(sorted_sizes(got) == want.sizes);
                REQUIRE(got.total_colorings == want.total);
            }
        }
    }
    std::mt19937_64 rng(99);
    for (int t = 0; t < 40; ++t) {
        const Graph g = oracle::random_graph(rng, 6, 0.5);
        const oracle::Classes want = oracle::kempe_classes(g, 4);
        const KcReport got = kempe_classes(g, 4);
        REQUIRE(got.kc == want.count);
        REQUIRE(sorted_sizes(got) == want.sizes);
    }
}

TEST_CASE("labeled and canonical state spaces agree for n <= 5, k <= 4")
{
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : generate_all_graphs_small(n)) {
            for (int k = 1; k <= 4; ++k) {
                const KcReport a = kempe_classes(g, k, kDefaultCap, StateSpace::labeled);
                const KcReport b = kempe_classes(g, k, kDefaultCap, StateSpace::canonical);
                REQUIRE(a.kc == b.kc);
                REQUIRE(sorted_sizes(a) == sorted_sizes(b));
                REQUIRE(a.total_colorings == b.total_colorings);
                REQUIRE(std::count(a.frozen_classes.begin(), a.frozen_classes.end(), true) ==
                        std::count(b.frozen_classes.begin(), b.frozen_classes.end(), true));
            }
        }
    }
}

TEST_CASE("canonical state space on a frozen orbit")
{
    // Every 3-coloring of K3 is a relabeling of one partition: one canonical
    // state of orbit size 6.
    const KcReport r = kempe_classes(Graph::complete(3), 3, kDefaultCap, StateSpace::canonical);
    CHECK(r.kc == 1);
    CHECK(r.states_explored == 1);
    CHECK(r.class_sizes == std::vector<std::uint64_t>{6});
    CHECK(r.frozen_classes == std::vector<bool>{true});
}

TEST_CASE("bipartite graphs have one Kempe class")
{
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : generate_all_graphs_small(n)) {
            if (!bipartition_of(g)) continue;
            for (int k = 2; k <= 4; ++k) REQUIRE(kempe_classes(g, k, kDefaultCap, StateSpace::canonical).kc == 1);
        }
    }
    for (const char* file : {"bipartite7.g6", "bipartite8.g6"}) {
        const auto lines = oracle::read_lines(std::string(KEMPE_TEST_DATA) + "/" + file);
        REQUIRE(!lines.empty());
        for (const auto& line : lines) {
            const Graph g = graph6_decode(line);
            REQUIRE(bipartition_of(g));
            for (int k = 2; k <= 4; ++k) REQUIRE(kempe_classes(g, k, kDefaultCap, StateSpace::canonical).kc == 1);
        }
    }
}

TEST_CASE("is_frozen")
{
    CHECK(is_frozen(build_H(), frozen_coloring_H(), 4));
    CHECK(is_frozen(build_H_hat(), frozen_coloring_H_hat(), 4));
    CHECK_FALSE(is_frozen(build_H(), row_coloring_H(), 4));
    CHECK_FALSE(is_frozen(build_H_hat(), row_coloring_H_hat(), 4));
    CHECK(is_frozen(Graph::complete(3), col({1, 2, 3}, 3), 3));
    CHECK(is_frozen(Graph::complete(3), col({1, 2, 3}, 4), 4));
    CHECK_FALSE(is_frozen(Graph::path(3), col({1, 2, 1}, 3), 3));
    CHECK_THROWS_AS(is_frozen(Graph::complete(2), col({1, 1}, 2), 2), InputError);

    // A frozen coloring's neighbors all share its partition.
    const Graph hat = build_H_hat();
    for (const Coloring& d : neighbors(hat, frozen_coloring_H_hat())) CHECK(same_partition(d, frozen_coloring_H_hat()));
}

TEST_CASE("is_frozen agrees with the neighbor definition")
{
    std::mt19937_64 rng(4);
    for (int t = 0; t < 1500; ++t) {
        const int n = std::uniform_int_distribution<int>(1, 8)(rng);
        const int k = std::uniform_int_distribution<int>(2, 5)(rng);
        const Graph g = oracle::random_graph(rng, n, 0.6);
        const auto a = oracle::random_proper(rng, g, k);
        if (a.empty()) continue;
        bool frozen = true;
        for (const auto& next : oracle::single_swaps(g, a, k)) {
            if (oracle::partition_key(next) != oracle::partition_key(a)) frozen = false;
        }
        REQUIRE(is_frozen(g, col(a, k), k) == frozen);
    }
}

TEST_CASE("Kempe classes of H-hat with four colors")
{
    const Graph hat = build_H_hat();
    const oracle::Classes want = oracle::kempe_classes(hat, 4);
    CHECK(want.count == 2);
    CHECK(want.sizes == std::vector<std::uint64_t>{24, 408});
    CHECK(want.total == 432);

    for (StateSpace space : {StateSpace::labeled, StateSpace::canonical}) {
        const KcReport r = kempe_classes(hat, 4, kDefaultCap, space);
        CHECK(r.kc == 2);
        CHECK(sorted_sizes(r) == std::vector<std::uint64_t>{24, 408});
        CHECK(r.total_colorings == 432);
        CHECK(std::count(r.frozen_classes.begin(), r.frozen_classes.end(), true) == 1);
    }
}

TEST_CASE("to_string")
{
    CHECK(to_string(col({1, 2, 3}, 3)) == "(1,2,3)");
}
