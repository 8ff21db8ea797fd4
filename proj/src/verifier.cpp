#include "kempe/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <unordered_map>

#include "kempe/bounds.hpp"
#include "kempe/errors.hpp"

namespace kempe {

using nlohmann::json;

// ---------------------------------------------------------------- certificates

std::string to_string(CertificateKind kind)
{
    switch (kind) {
    case CertificateKind::frozen_pair: return "frozen-pair";
    case CertificateKind::kc_report: return "kc-report";
    case CertificateKind::reduction_trace: return "reduction-trace";
    }
    return "unknown";
}

namespace {

CertificateKind kind_from_string(const std::string& s)
{
    if (s == "frozen-pair") return CertificateKind::frozen_pair;
    if (s == "kc-report") return CertificateKind::kc_report;
    if (s == "reduction-trace") return CertificateKind::reduction_trace;
    throw InputError("unknown certificate kind '" + s + "'");
}

json coloring_json(const std::optional<Coloring>& c)
{
    return c ? json(c->colors) : json(nullptr);
}

std::optional<Coloring> coloring_from_json(const json& j, int k)
{
    if (j.is_null()) return std::nullopt;
    return Coloring{j.get<std::vector<int>>(), k};
}

json report_json(const KcReport& report)
{
    json reps = json::array();
    for (const auto& c : report.representatives) reps.push_back(c.colors);
    return {{"kc", report.kc},
            {"class_sizes", report.class_sizes},
            {"frozen_classes", report.frozen_classes},
            {"total_colorings", report.total_colorings},
            {"states_explored", report.states_explored},
            {"representatives", reps}};
}

int count_frozen(const KcReport& report)
{
    return static_cast<int>(std::count(report.frozen_classes.begin(), report.frozen_classes.end(), true));
}

} // namespace

json to_json(const Certificate& cert)
{
    return {{"kind", to_string(cert.kind)},
            {"graph", cert.graph},
            {"k", cert.k},
            {"frozen_coloring", coloring_json(cert.frozen_coloring)},
            {"witness_coloring", coloring_json(cert.witness_coloring)},
            {"detail", cert.detail}};
}

Certificate certificate_from_json(const json& j)
{
    try {
        Certificate cert;
        cert.kind = kind_from_string(j.at("kind").get<std::string>());
        cert.graph = j.at("graph").get<std::string>();
        cert.k = j.at("k").get<int>();
        cert.frozen_coloring = coloring_from_json(j.value("frozen_coloring", json(nullptr)), cert.k);
        cert.witness_coloring = coloring_from_json(j.value("witness_coloring", json(nullptr)), cert.k);
        cert.detail = j.value("detail", json::object());
        return cert;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed certificate: ") + e.what());
    }
}

Certificate certify_kc_ge_2(const Graph& g, const Coloring& frozen, const Coloring& witness, int k)
{
    auto fail = [](const std::string& what) { throw CertificationError(what); };
    if (frozen.order() != g.order()) fail("frozen coloring length differs from graph order");
    if (witness.order() != g.order()) fail("witness coloring length differs from graph order");
    const Coloring f{frozen.colors, k};
    const Coloring w{witness.colors, k};
    if (!is_proper(g, f)) fail("frozen coloring is not a proper " + std::to_string(k) + "-coloring");
    if (!is_proper(g, w)) fail("witness coloring is not a proper " + std::to_string(k) + "-coloring");
    if (!is_frozen(g, f, k)) fail("frozen coloring is not frozen under Kempe swaps");
    if (same_partition(f, w)) fail("witness has the same color classes as the frozen coloring");

    Certificate cert;
    cert.kind = CertificateKind::frozen_pair;
    cert.graph = graph6_encode(g);
    cert.k = k;
    cert.frozen_coloring = f;
    cert.witness_coloring = w;
    cert.detail = {{"claim", "Kc >= 2"},
                   {"frozen_colors_used", colors_used(f)},
                   {"witness_colors_used", colors_used(w)}};
    return cert;
}

void revalidate(const Certificate& cert)
{
    if (!cert.frozen_coloring || !cert.witness_coloring) {
        throw CertificationError(to_string(cert.kind) + " certificate carries no frozen pair to re-check");
    }
    Graph g;
    try {
        g = graph6_decode(cert.graph);
    } catch (const InputError& e) {
        throw CertificationError(std::string("certificate graph: ") + e.what());
    }
    certify_kc_ge_2(g, *cert.frozen_coloring, *cert.witness_coloring, cert.k);
}

// ---------------------------------------------------------------- reductions

json to_json(const std::vector<ReductionStep>& trace)
{
    json out = json::array();
    for (const auto& step : trace) {
        out.push_back({{"rule", step.rule}, {"removed", step.removed}, {"k_after", step.k_after}});
    }
    return out;
}

std::optional<Vertex> find_antisimplicial(const Graph& g)
{
    for (Vertex v = 0; v < g.order(); ++v) {
        const VertexSet others = g.vertices() & ~g.neighbors(v) & ~singleton(v);
        bool independent = true;
        for_each_vertex(others, [&](Vertex u) { independent = independent && (g.neighbors(u) & others) == 0; });
        if (independent) return v;
    }
    return std::nullopt;
}

namespace {

class Reducer {
public:
    Reducer(const Graph& g, int k) : label_(static_cast<std::size_t>(g.order()))
    {
        out_.graph = g;
        out_.k = k;
        for (Vertex v = 0; v < g.order(); ++v) label_[v] = v;
    }

    bool low_degree_step()
    {
        for (Vertex v = 0; v < out_.graph.order(); ++v) {
            if (out_.graph.degree(v) < out_.k) {
                remove(singleton(v), "low-degree", out_.k);
                return true;
            }
        }
        return false;
    }

    bool settle_if_trivial()
    {
        if (out_.graph.order() == 0) {
            out_.trace.push_back({"empty", {}, out_.k});
            out_.settled = true;
            return true;
        }
        const int chi = chromatic_number(out_.graph);
        // Edgeless graphs and bipartite graphs with k >= 2 have Kc = 1.
        if (chi <= 2 && out_.k >= chi) {
            out_.trace.push_back({"bipartite", {}, out_.k});
            out_.settled = true;
            return true;
        }
        return false;
    }

    // Only sound while k = chi + 1.
    bool chi_plus_1_step()
    {
        const Graph& g = out_.graph;
        if (out_.k != chromatic_number(g) + 1) return false;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (g.degree(v) == g.order() - 1) {
                remove(singleton(v), "dominating", out_.k - 1);
                return true;
            }
        }
        if (auto v = find_antisimplicial(g)) {
            const VertexSet drop = (g.vertices() & ~g.neighbors(*v)) | singleton(*v);
            if (!out_.checkpoint) out_.checkpoint = std::pair{g, out_.k};
            remove(drop, "antisimplicial", out_.k - 1);
            return true;
        }
        return false;
    }

    Reduced take() { return std::move(out_); }

private:
    void remove(VertexSet drop, const std::string& rule, int new_k)
    {
        ReductionStep step{rule, {}, new_k};
        std::vector<Vertex> kept;
        for (Vertex v = 0; v < out_.graph.order(); ++v) {
            (contains(drop, v) ? step.removed : kept).push_back(label_[v]);
        }
        out_.graph = delete_vertices(out_.graph, drop);
        out_.k = new_k;
        label_ = std::move(kept);
        out_.trace.push_back(std::move(step));
    }

    Reduced out_;
    std::vector<Vertex> label_;
};

} // namespace

Reduced reduce_low_degree(const Graph& g, int k)
{
    Reducer reducer(g, k);
    while (reducer.low_degree_step()) {
    }
    return reducer.take();
}

Reduced apply_reductions(const Graph& g, int k, KMode mode)
{
    Reducer reducer(g, k);
    while (true) {
        if (reducer.low_degree_step()) continue;
        if (reducer.settle_if_trivial()) break;
        if (mode == KMode::chi_plus_1 && reducer.chi_plus_1_step()) continue;
        break;
    }
    return reducer.take();
}

KcVerdict kc_with_reductions(const Graph& g, int k, std::uint64_t cap, KMode mode, StateSpace space)
{
    KcVerdict verdict;
    verdict.chi = chromatic_number(g);
    verdict.k = k;
    if (mode == KMode::chi_plus_1 && k != verdict.chi + 1) {
        throw InputError("chi-plus-1 mode needs k = " + std::to_string(verdict.chi + 1) + ", got " + std::to_string(k));
    }
    Reduced reduced = apply_reductions(g, k, mode);

    Certificate& cert = verdict.certificate;
    cert.graph = graph6_encode(g);
    cert.k = k;
    if (reduced.settled) {
        verdict.kc_is_one = true;
        cert.kind = CertificateKind::reduction_trace;
        cert.detail = {{"trace", to_json(reduced.trace)}};
        return verdict;
    }

    KcReport report = kempe_classes(reduced.graph, reduced.k, cap, space);
    bool fallback = false;
    if (report.kc != 1 && reduced.checkpoint) {
        // The antisimplicial rule only transfers Kc = 1 upwards.
        report = kempe_classes(reduced.checkpoint->first, reduced.checkpoint->second, cap, space);
        fallback = true;
    }
    verdict.enumerated = true;
    verdict.kc_is_one = report.kc == 1;
    cert.kind = CertificateKind::kc_report;
    cert.detail = report_json(report);
    cert.detail["trace"] = to_json(reduced.trace);
    cert.detail["fallback_to_checkpoint"] = fallback;
    if (fallback) {
        cert.detail["enumerated_graph"] = graph6_encode(reduced.checkpoint->first);
        cert.detail["enumerated_k"] = reduced.checkpoint->second;
    } else {
        cert.detail["enumerated_graph"] = graph6_encode(reduced.graph);
        cert.detail["enumerated_k"] = reduced.k;
    }
    verdict.report = std::move(report);
    return verdict;
}

// ---------------------------------------------------------------- scanning

json to_json(const GraphRecord& rec)
{
    return {{"line", rec.line},
            {"g6", rec.g6},
            {"n", rec.n},
            {"chi", rec.chi},
            {"k", rec.k},
            {"kc", rec.kc ? json(*rec.kc) : json("cap")},
            {"frozen_classes", rec.frozen_classes},
            {"reduced", rec.reduced},
            {"violation", rec.violation}};
}

json to_json(const ScanReport& report, bool with_elapsed)
{
    json violations = json::array();
    for (const auto& cert : report.violations) violations.push_back(to_json(cert));
    json by_order = json::object();
    for (auto [n, count] : report.graphs_by_order) by_order[std::to_string(n)] = count;
    json out = {{"graphs_seen", report.graphs_seen},
                {"graphs_reduced_away", report.graphs_reduced_away},
                {"kc_computed", report.kc_computed},
                {"caps_hit", report.caps_hit},
                {"graphs_by_order", by_order},
                {"violations", violations}};
    if (with_elapsed) out["elapsed_ms"] = report.elapsed.count();
    return out;
}

namespace {

struct Outcome {
    GraphRecord record;
    std::optional<Certificate> violation;
    enum class Path { reduced_away, computed, capped } path = Path::computed;
};

Outcome process_graph(const Graph& g, std::uint64_t line, const std::string& g6, const ScanPolicy& policy)
{
    Outcome out;
    GraphRecord& rec = out.record;
    rec.line = line;
    rec.g6 = g6;
    rec.n = g.order();
    rec.chi = chromatic_number(g);
    rec.k = policy.mode == KMode::chi_plus_1 ? rec.chi + 1 : policy.k;
    try {
        KcVerdict verdict = kc_with_reductions(g, rec.k, policy.cap, policy.mode, policy.space);
        const auto& trace = verdict.certificate.detail.value("trace", json::array());
        rec.reduced = !trace.empty();
        if (!verdict.enumerated) {
            rec.kc = 1;
            out.path = Outcome::Path::reduced_away;
        } else {
            rec.kc = verdict.report->kc;
            rec.frozen_classes = count_frozen(*verdict.report);
            out.path = Outcome::Path::computed;
        }
        rec.violation = verdict.report && verdict.report->kc >= 2;
        if (rec.violation) out.violation = std::move(verdict.certificate);
    } catch (const ResourceError&) {
        rec.kc.reset();
        out.path = Outcome::Path::capped;
    }
    return out;
}

struct Item {
    std::uint64_t line;
    std::string g6;
    Graph graph;
};

void run_batch(const std::vector<Item>& items, const ScanPolicy& policy, ScanReport& report, const RecordSink& sink)
{
    std::vector<Outcome> outcomes(items.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&]() {
        try {
            for (std::size_t i = next++; i < items.size() && !failed; i = next++) {
                outcomes[i] = process_graph(items[i].graph, items[i].line, items[i].g6, policy);
            }
        } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
        }
    };
    const int workers = std::max(1, std::min<int>(policy.workers, static_cast<int>(items.size())));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (auto& out : outcomes) {
        ++report.graphs_seen;
        ++report.graphs_by_order[out.record.n];
        switch (out.path) {
        case Outcome::Path::reduced_away: ++report.graphs_reduced_away; break;
        case Outcome::Path::computed: ++report.kc_computed; break;
        case Outcome::Path::capped: ++report.caps_hit; break;
        }
        if (out.violation) report.violations.push_back(std::move(*out.violation));
        if (sink) sink(out.record);
    }
}

constexpr std::size_t kBatch = 2048;

template <class NextItem> ScanReport scan_items(NextItem&& next_item, const ScanPolicy& policy, const RecordSink& sink)
{
    if (policy.cap < 1) throw InputError("cap must be at least 1");
    if (policy.workers < 1) throw InputError("workers must be at least 1");
    const auto start = std::chrono::steady_clock::now();
    ScanReport report;
    std::vector<Item> batch;
    Item item;
    while (next_item(item)) {
        batch.push_back(std::move(item));
        if (batch.size() == kBatch) {
            run_batch(batch, policy, report, sink);
            batch.clear();
        }
    }
    if (!batch.empty()) run_batch(batch, policy, report, sink);
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

} // namespace

ScanReport scan_stream(std::istream& in, const ScanPolicy& policy, const RecordSink& sink)
{
    std::uint64_t line_no = 0;
    std::string line;
    auto next_item = [&](Item& item) {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            try {
                item.graph = graph6_decode(line);
            } catch (const InputError& e) {
                throw InputError("line " + std::to_string(line_no) + ": " + e.what());
            }
            item.line = line_no;
            item.g6 = line;
            return true;
        }
        return false;
    };
    return scan_items(next_item, policy, sink);
}

ScanReport scan_graphs(const std::vector<Graph>& graphs, const ScanPolicy& policy, const RecordSink& sink)
{
    std::size_t pos = 0;
    auto next_item = [&](Item& item) {
        if (pos == graphs.size()) return false;
        item.graph = graphs[pos];
        item.g6 = graph6_encode(graphs[pos]);
        item.line = ++pos;
        return true;
    };
    return scan_items(next_item, policy, sink);
}

std::vector<Graph> generate_all_graphs_small(int n)
{
    if (n < 0) throw InputError("graph order must be non-negative");
    if (n > 6) {
        throw InputError("labeled generation is limited to n <= 6; supply a canonical graph6 stream for n = " +
                         std::to_string(n));
    }
    std::vector<Edge> pairs;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
    }
    std::vector<Graph> out;
    const std::uint32_t total = std::uint32_t{1} << pairs.size();
    out.reserve(total);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        Graph g(n);
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if ((mask >> b) & 1U) g.add_edge(pairs[b].first, pairs[b].second);
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::optional<std::uint64_t> expected_unlabeled_count(int n)
{
    static constexpr std::uint64_t counts[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168};
    if (n < 0 || n >= static_cast<int>(std::size(counts))) return std::nullopt;
    return counts[n];
}

// ---------------------------------------------------------------- verification checks

bool check_thm2_instance(const AlmostBipartiteView& view, int k, std::uint64_t cap, StateSpace space)
{
    if (view.ell >= f_bound(k)) {
        throw InputError("instance has ell = " + std::to_string(view.ell) + ", needs ell < f(" + std::to_string(k) +
                         ") = " + std::to_string(f_bound(k)));
    }
    return kempe_classes(view.graph, k, cap, space).kc == 1;
}

Thm2Sweep sweep_thm2(int nmax, int k, std::uint64_t cap)
{
    if (nmax < 0 || nmax > 6) throw InputError("thm2 sweep supports 0 <= nmax <= 6");
    if (k < 1) throw InputError("thm2 sweep needs k >= 1");
    const long limit = f_bound(k);
    Thm2Sweep sweep;
    std::unordered_map<std::string, bool> memo;

    for (int n = 1; n <= nmax; ++n) {
        for (std::uint32_t t_mask = 0; t_mask < (std::uint32_t{1} << (n - 1)); ++t_mask) {
            std::vector<Side> side(static_cast<std::size_t>(n), Side::S);
            for (Vertex v = 1; v < n; ++v) {
                if ((t_mask >> (v - 1)) & 1U) side[v] = Side::T;
            }
            std::vector<Edge> cross;
            std::vector<Edge> inside;
            for (Vertex u = 0; u < n; ++u) {
                for (Vertex v = u + 1; v < n; ++v) (side[u] == side[v] ? inside : cross).emplace_back(u, v);
            }
            for (std::uint32_t cm = 0; cm < (std::uint32_t{1} << cross.size()); ++cm) {
                for (std::uint32_t im = 0; im < (std::uint32_t{1} << inside.size()); ++im) {
                    if (std::popcount(im) >= limit) continue;
                    Graph g(n);
                    for (std::size_t b = 0; b < cross.size(); ++b) {
                        if ((cm >> b) & 1U) g.add_edge(cross[b].first, cross[b].second);
                    }
                    for (std::size_t b = 0; b < inside.size(); ++b) {
                        if ((im >> b) & 1U) g.add_edge(inside[b].first, inside[b].second);
                    }
                    ++sweep.views;
                    const std::string g6 = graph6_encode(g);
                    auto [it, fresh] = memo.try_emplace(g6, true);
                    if (!fresh) continue;
                    const AlmostBipartiteView view = view_as_almost_bipartite(g, side);
                    it->second = check_thm2_instance(view, k, cap);
                    if (!it->second) sweep.failures.push_back(g6);
                }
            }
        }
    }
    sweep.distinct_graphs = memo.size();
    return sweep;
}

AlmostBipartiteView random_almost_bipartite(std::mt19937_64& rng, int n, int ell, double p)
{
    std::bernoulli_distribution coin(0.5);
    std::bernoulli_distribution keep(p);
    std::vector<Side> side(static_cast<std::size_t>(n));
    for (auto& s : side) s = coin(rng) ? Side::S : Side::T;
    Graph g(n);
    std::vector<Edge> inside;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (side[u] == side[v]) {
                inside.emplace_back(u, v);
            } else if (keep(rng)) {
                g.add_edge(u, v);
            }
        }
    }
    std::shuffle(inside.begin(), inside.end(), rng);
    inside.resize(std::min(inside.size(), static_cast<std::size_t>(std::max(ell, 0))));
    for (auto [u, v] : inside) g.add_edge(u, v);
    return view_as_almost_bipartite(g, side);
}

namespace {

bool bipartite_without(const AlmostBipartiteView& view)
{
    Graph rest = view.graph;
    for (auto [u, v] : view.extra_edges) rest.remove_edge(u, v);
    auto sides = bipartition_of(rest);
    if (!sides) return false;
    // The view's own split must be a proper bipartition of the remainder.
    for (auto [u, v] : rest.edges()) {
        if (view.side[u] == view.side[v]) return false;
    }
    return true;
}

} // namespace

Certificate check_thm1_instance(int k)
{
    auto fail = [&](const std::string& what) { throw CertificationError("G_" + std::to_string(k) + ": " + what); };
    const GkBundle bundle = build_G_k(k);
    const Graph& g = bundle.graph;

    const int chi = chromatic_number(g);
    if (chi != k - 1) fail("chromatic number is " + std::to_string(chi) + ", expected " + std::to_string(k - 1));

    if (bundle.naive_view.ell != bundle.ell_naive) {
        fail("naive split has " + std::to_string(bundle.naive_view.ell) + " inside edges, formula gives " +
             std::to_string(bundle.ell_naive));
    }
    if (bundle.ell_naive >= binomial2(k)) fail("naive inside-edge count does not stay below C(k,2)");
    if (!bipartite_without(bundle.naive_view)) fail("naive split is not bipartite after removing inside edges");

    json detail = {{"n", g.order()},
                   {"m", g.size()},
                   {"chi", chi},
                   {"ell_naive", bundle.ell_naive},
                   {"ell_naive_counted", bundle.naive_view.ell},
                   {"binom_k_2", binomial2(k)}};
    if (k >= 12) {
        if (!bundle.balanced_view) fail("balanced split missing");
        const long closed = conjecture4_bound(k);
        if (bundle.balanced_view->ell != bundle.ell_balanced || bundle.ell_balanced != closed) {
            fail("balanced inside-edge count " + std::to_string(bundle.balanced_view->ell) + " vs f(k+5)-15 = " +
                 std::to_string(bundle.ell_balanced) + " vs closed form " + std::to_string(closed));
        }
        if (!bipartite_without(*bundle.balanced_view)) fail("balanced split is not bipartite after removing inside edges");
        detail["ell_balanced"] = bundle.ell_balanced;
        detail["ell_balanced_counted"] = bundle.balanced_view->ell;
    }

    const auto witness = is_k_colorable(g, k - 1);
    if (!witness) fail("no (k-1)-coloring found");
    Certificate cert = certify_kc_ge_2(g, bundle.frozen, *witness, k);
    for (auto& [key, value] : detail.items()) cert.detail[key] = value;
    return cert;
}

Certificate check_hm_counterexample(int k, std::uint64_t cap)
{
    Graph g;
    Coloring frozen;
    Coloring witness;
    StateSpace space = StateSpace::labeled;
    if (k == 4) {
        g = build_H_hat();
        frozen = frozen_coloring_H_hat();
        witness = row_coloring_H_hat();
    } else if (k >= 8) {
        const GkBundle bundle = build_G_k(k);
        g = bundle.graph;
        frozen = bundle.frozen;
        const auto fewer = is_k_colorable(g, k - 1);
        if (!fewer) throw CertificationError("G_k has no (k-1)-coloring");
        witness = *fewer;
        space = StateSpace::canonical;
    } else {
        throw InputError("hm-counterexample is defined for k = 4 (H-hat) and k >= 8 (G_k)");
    }

    const int chi = chromatic_number(g);
    if (chi != k - 1) throw CertificationError("chromatic number " + std::to_string(chi) + " is not k-1");
    const KcReport report = kempe_classes(g, k, cap, space);
    if (report.kc < 2) throw CertificationError("enumeration found Kc = " + std::to_string(report.kc));

    Certificate cert = certify_kc_ge_2(g, frozen, witness, k);
    cert.kind = CertificateKind::kc_report;
    json pair_detail = cert.detail;
    cert.detail = report_json(report);
    cert.detail["chi"] = chi;
    cert.detail["frozen_pair"] = pair_detail;
    cert.detail["state_space"] = space == StateSpace::labeled ? "labeled" : "canonical";
    return cert;
}

} // namespace kempe
