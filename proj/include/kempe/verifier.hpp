#pragma once

// Batch verification: frozen-pair certificates, the reduction rules for
// (chi+1)-colorings, graph-stream scanning, and the construction and sweep checks.

#include <chrono>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "kempe/constructions.hpp"
#include "kempe/kempe.hpp"

namespace kempe {

enum class CertificateKind { frozen_pair, kc_report, reduction_trace };

std::string to_string(CertificateKind kind);

struct Certificate {
    CertificateKind kind = CertificateKind::frozen_pair;
    std::string graph; ///< graph6
    int k = 0;
    std::optional<Coloring> frozen_coloring;
    std::optional<Coloring> witness_coloring;
    nlohmann::json detail = nlohmann::json::object();
};

nlohmann::json to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

/// Checks that both colorings are proper k-colorings, that `frozen` is
/// frozen and that the two partitions differ. Together these show
/// Kc(g, k) >= 2. Throws CertificationError naming the failed condition.
Certificate certify_kc_ge_2(const Graph& g, const Coloring& frozen, const Coloring& witness, int k);

/// Re-runs every check of a frozen-pair certificate from its serialized
/// fields alone.
void revalidate(const Certificate& cert);

struct ReductionStep {
    std::string rule; ///< low-degree | dominating | antisimplicial | bipartite | empty
    std::vector<Vertex> removed; ///< indices in the input graph
    int k_after = 0;
};

struct Reduced {
    Graph graph;
    int k = 0;
    std::vector<ReductionStep> trace;
    /// Reductions alone settled Kc = 1 (empty or bipartite remnant).
    bool settled = false;
    /// Graph and budget just before the first one-way (antisimplicial) step.
    std::optional<std::pair<Graph, int>> checkpoint;
};

nlohmann::json to_json(const std::vector<ReductionStep>& trace);

/// Repeatedly deletes a vertex of degree < k. Kc(., k) = 1 is preserved in
/// both directions.
Reduced reduce_low_degree(const Graph& g, int k);

/// Lowest vertex whose non-neighbors are pairwise non-adjacent.
std::optional<Vertex> find_antisimplicial(const Graph& g);

enum class KMode { fixed, chi_plus_1 };

/// Low-degree deletion always; in chi_plus_1 mode (and while k = chi + 1
/// still holds) also dominating-vertex and antisimplicial-set deletion.
Reduced apply_reductions(const Graph& g, int k, KMode mode);

struct KcVerdict {
    bool kc_is_one = false;
    int chi = 0;
    int k = 0;
    /// Kc of the graph that was enumerated (the remnant, or the input after
    /// a one-way fallback); unset when reductions settled the question.
    std::optional<KcReport> report;
    bool enumerated = false;
    Certificate certificate;
};

/// Whether Kc(g, k) = 1. In chi_plus_1 mode k must equal chi(g) + 1.
/// Throws ResourceError when the enumeration cap is hit.
KcVerdict kc_with_reductions(const Graph& g, int k, std::uint64_t cap = kDefaultCap,
                             KMode mode = KMode::chi_plus_1, StateSpace space = StateSpace::canonical);

struct ScanPolicy {
    KMode mode = KMode::chi_plus_1;
    int k = 0; ///< used in fixed mode
    std::uint64_t cap = kDefaultCap;
    int workers = 1;
    StateSpace space = StateSpace::canonical;
};

struct GraphRecord {
    std::uint64_t line = 0;
    std::string g6;
    int n = 0;
    int chi = 0;
    int k = 0;
    std::optional<int> kc; ///< unset when the cap was hit
    int frozen_classes = 0;
    bool reduced = false; ///< kc refers to a reduced graph, or reductions settled it
    bool violation = false;
};

nlohmann::json to_json(const GraphRecord& rec);

struct ScanReport {
    std::uint64_t graphs_seen = 0;
    std::uint64_t graphs_reduced_away = 0;
    std::uint64_t kc_computed = 0;
    std::uint64_t caps_hit = 0;
    std::vector<Certificate> violations;
    std::map<int, std::uint64_t> graphs_by_order;
    std::chrono::milliseconds elapsed{0};
};

nlohmann::json to_json(const ScanReport& report, bool with_elapsed = true);

using RecordSink = std::function<void(const GraphRecord&)>;

/// Scans graph6 lines (blank lines skipped). Records reach `sink` in input
/// order whatever the worker count. Throws InputError naming the line
/// number of a malformed graph.
ScanReport scan_stream(std::istream& in, const ScanPolicy& policy, const RecordSink& sink = {});
ScanReport scan_graphs(const std::vector<Graph>& graphs, const ScanPolicy& policy, const RecordSink& sink = {});

/// All 2^C(n,2) labeled graphs on n <= 6 vertices, in edge-mask order.
std::vector<Graph> generate_all_graphs_small(int n);

/// Number of unlabeled graphs of each order, used to reject short streams.
std::optional<std::uint64_t> expected_unlabeled_count(int n);

/// Requires view.ell < f_bound(k); true iff Kc(view.graph, k) = 1.
bool check_thm2_instance(const AlmostBipartiteView& view, int k, std::uint64_t cap = kDefaultCap,
                         StateSpace space = StateSpace::canonical);

struct Thm2Sweep {
    std::uint64_t views = 0;
    std::uint64_t distinct_graphs = 0;
    std::vector<std::string> failures; ///< graph6 of graphs with Kc >= 2
};

/// Every side assignment (vertex 0 on S) of n <= nmax vertices, every set
/// of cross edges and every set of fewer than f(k) inside edges.
Thm2Sweep sweep_thm2(int nmax, int k, std::uint64_t cap = kDefaultCap);

/// Random view on n vertices: random sides, each cross pair an edge with
/// probability p, and min(ell, available) inside edges chosen uniformly.
AlmostBipartiteView random_almost_bipartite(std::mt19937_64& rng, int n, int ell, double p = 0.5);

/// Builds G_k, checks chi = k-1 and the edge accounting, and returns a
/// validated frozen-pair certificate. Throws CertificationError.
Certificate check_thm1_instance(int k);

/// k = 4: H-hat; k >= 8: G_k. Enumerates the full state space, requires
/// Kc >= 2 and a frozen-pair certificate. Throws CertificationError.
Certificate check_hm_counterexample(int k, std::uint64_t cap = kDefaultCap);

} // namespace kempe
