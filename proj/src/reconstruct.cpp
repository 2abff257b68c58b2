#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "pq/fixtures.hpp"
#include "pq/io.hpp"
#include "pq/reconstruction.hpp"
#include "pq/surface.hpp"

namespace pq {

const char* to_string(ReconMode m) { return m == ReconMode::Gqt ? "gqt" : "tsp4"; }

ReconMode recon_mode_from_string(const std::string& s) {
    if (s == "gqt") return ReconMode::Gqt;
    if (s == "tsp4") return ReconMode::Tsp4;
    throw Error(ErrorKind::ParseError, "mode must be gqt or tsp4, got '" + s + "'");
}

namespace {

template <class F>
void parallel_for(size_t count, int threads, F&& f) {
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    const int w = static_cast<int>(std::min<size_t>(threads, count));
    for (int t = 0; t < w; ++t)
        pool.emplace_back([&] {
            for (size_t i; (i = next.fetch_add(1)) < count;) f(i);
        });
    for (auto& th : pool) th.join();
}

Quiver from_rows(const Matrix& m) { return validate_quiver(m); }

const CaseTableEntry* table_match(const Quiver& q) {
    if (q.n() != 5) return nullptr;
    const Quiver key = canonical_up_to_opposite(q);
    for (const auto& e : case_table())
        if (canonical_up_to_opposite(e.pattern) == key) return &e;
    return nullptr;
}

}  // namespace

const std::vector<CaseTableEntry>& case_table() {
    static const std::vector<CaseTableEntry> t = {
        {"loopless-IV-triangle",
         from_rows({{0, 0, 1, 1, 1}, {2, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 1, 0, 0, 0}}),
         "periodicity forces a loop at the triangle vertex opposite the double arrow (block IV glueing)"},
        {"loopless-V3-glueing",
         from_rows({{0, 0, 0, 1, 1}, {1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {1, 1, 1, 0, 0}, {0, 0, 0, 1, 0}}),
         "periodicity forces a loop at the outlet of the block V3 glueing"},
    };
    return t;
}

ExclusionReport evaluate_candidate(const Quiver& q, const ReconstructOptions& opt) {
    ExclusionReport r = structural_filters(q, opt.mode);
    if (r.excluded) return r;
    r = dimension_exclusion(q);
    if (r.excluded) return r;
    if (auto tree = wild_unfolding_filter(q, opt.wild_cap))
        return {true, "wild", "wild subcategory in a Galois covering", tree_to_json(*tree), false};
    if (const CaseTableEntry* e = table_match(q)) {
        if (opt.mode == ReconMode::Tsp4) return {true, "table", e->citation, json{{"entry", e->id}}, false};
        return {false, "", e->citation, json{{"entry", e->id}}, true};
    }
    return {};
}

std::vector<CandidateResult> reconstruct(const Shadow& a, const ReconstructOptions& opt) {
    if (a.n() > 5) throw Error(ErrorKind::UnsupportedSize, "reconstruction covers n <= 5");
    if (!is_essential(a).is_essential()) throw Error(ErrorKind::NotEssential, "shadow is not essential");
    const Quiver qx = quiver_of_shadow(a);
    std::vector<CandidateResult> out;
    for (const auto& e : two_cycle_placements(qx)) {
        const Quiver qo = assemble(qx, e, {});
        for (const auto& l : loop_placements(qo)) {
            Quiver q = assemble(qx, e, l);
            if (!is_connected(q)) continue;
            out.push_back({{qx, e, l, q}, {}});
        }
    }
    std::vector<Quiver> keys(out.size());
    parallel_for(out.size(), opt.threads, [&](size_t i) {
        keys[i] = canonical_up_to_opposite(out[i].candidate.assembled);
        out[i].report = evaluate_candidate(out[i].candidate.assembled, opt);
    });
    std::vector<size_t> order(out.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        if (keys[x] != keys[y]) return keys[x] < keys[y];
        return out[x].candidate.assembled < out[y].candidate.assembled;
    });
    std::vector<CandidateResult> sorted;
    for (size_t i : order) sorted.push_back(std::move(out[i]));
    return sorted;
}

ClassifyResult classify(int n, ReconMode mode, int threads, int wild_cap) {
    if (n < 3 || n > 5) throw Error(ErrorKind::UnsupportedSize, "classify covers n = 3, 4, 5");
    ClassifyResult r;
    r.n = n;
    r.mode = mode;
    const auto shadows = enumerate_shadows(n, ShadowMode::Essential, threads);
    std::vector<std::vector<CandidateResult>> per(shadows.size());
    ReconstructOptions opt{mode, wild_cap, 1};
    parallel_for(shadows.size(), threads, [&](size_t i) { per[i] = reconstruct(shadows[i], opt); });
    std::set<Quiver> all, undecided;
    for (size_t i = 0; i < shadows.size(); ++i) {
        ShadowOutcome so{shadows[i], static_cast<int>(per[i].size()), {}};
        std::set<Quiver> mine;
        for (auto& c : per[i]) {
            if (c.report.excluded) {
                r.exclusions.push_back({shadows[i], c.candidate.assembled, std::move(c.report)});
                continue;
            }
            Quiver k = canonical_up_to_opposite(c.candidate.assembled);
            if (c.report.undecided) undecided.insert(k);
            mine.insert(k);
            all.insert(k);
        }
        so.survivors.assign(mine.begin(), mine.end());
        r.shadows.push_back(std::move(so));
    }
    r.survivors.assign(all.begin(), all.end());
    r.undecided.assign(undecided.begin(), undecided.end());
    return r;
}

json classify_to_json(const ClassifyResult& r) {
    json surv = json::array(), und = json::array(), shadows = json::array(), exc = json::array();
    for (const auto& q : r.survivors) surv.push_back(quiver_to_json(q));
    for (const auto& q : r.undecided) und.push_back(quiver_to_json(q));
    for (const auto& s : r.shadows)
        if (!s.survivors.empty()) shadows.push_back(shadow_to_json(s.shadow));
    for (const auto& e : r.exclusions)
        exc.push_back({{"shadow", shadow_to_json(e.shadow)},
                       {"candidate", quiver_to_json(e.candidate)},
                       {"rule", e.report.rule},
                       {"citation", e.report.citation},
                       {"witness", e.report.witness}});
    return {{"n", r.n},
            {"mode", to_string(r.mode)},
            {"shadow_count", r.shadows.size()},
            {"survivor_quivers", surv},
            {"undecided", und},
            {"shadows_with_survivors", shadows},
            {"exclusions", exc}};
}

Quiver family_key(const Quiver& q) { return canonical_up_to_opposite(loop_free(q)); }

VerifyReport verify_against_paper(const ClassifyResult& r) {
    VerifyReport v;
    v.n = r.n;
    v.family_level = r.n == 3;
    auto key = [&](const Quiver& q) { return v.family_level ? family_key(q) : canonical_up_to_opposite(q); };
    std::set<Quiver> golden, got;
    for (const auto& g : golden_quivers(r.n)) golden.insert(key(g.quiver));
    std::set<Quiver> undecided(r.undecided.begin(), r.undecided.end());
    for (const auto& q : r.survivors)
        if (!undecided.count(q)) got.insert(key(q));
    std::set_difference(golden.begin(), golden.end(), got.begin(), got.end(), std::back_inserter(v.missing));
    std::set_difference(got.begin(), got.end(), golden.begin(), golden.end(), std::back_inserter(v.extra));
    for (const auto& e : r.exclusions) (e.report.rule == "table" ? v.table_exclusions : v.generic_exclusions)++;
    return v;
}

VerifyReport verify_against_paper(int n, ReconMode mode, int threads) {
    return verify_against_paper(classify(n, mode, threads));
}

json verify_to_json(const VerifyReport& v) {
    json miss = json::array(), extra = json::array();
    for (const auto& q : v.missing) miss.push_back(quiver_to_json(q));
    for (const auto& q : v.extra) extra.push_back(quiver_to_json(q));
    return {{"n", v.n},
            {"level", v.family_level ? "family" : "quiver"},
            {"ok", v.ok()},
            {"missing", miss},
            {"extra", extra},
            {"generic_exclusions", v.generic_exclusions},
            {"table_exclusions", v.table_exclusions}};
}

MainTheoremReport verify_main_theorem(const ClassifyResult& r) {
    MainTheoremReport m;
    m.n = r.n;
    for (const auto& q : r.survivors) {
        ++m.checked;
        if (!recognize_gwsa_gabriel(q)) m.failures.push_back(q);
    }
    return m;
}

MainTheoremReport verify_main_theorem(int n, ReconMode mode, int threads) {
    return verify_main_theorem(classify(n, mode, threads));
}

}  // namespace pq
