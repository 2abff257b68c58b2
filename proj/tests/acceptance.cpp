#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "pq/fixtures.hpp"
#include "pq/io.hpp"
#include "pq/reconstruction.hpp"
#include "pq/surface.hpp"

using namespace pq;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

struct Check {
    bool ok = true;
    std::vector<std::string> notes;
    void expect(bool c, const std::string& what) {
        if (!c) {
            ok = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

int run_cli(const std::string& args, std::string* out = nullptr) {
    std::string cmd = std::string(PQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return -1;
    std::string text;
    char buf[4096];
    size_t k;
    while ((k = fread(buf, 1, sizeof buf, p)) > 0) text.append(buf, k);
    int st = pclose(p);
    if (out) *out = text;
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::set<Shadow> canon_set(const std::vector<Shadow>& v) {
    std::set<Shadow> s;
    for (const auto& a : v) s.insert(canonical_shadow(a));
    return s;
}

std::set<Shadow> canon_set(const std::vector<NamedShadow>& v) {
    std::set<Shadow> s;
    for (const auto& a : v) s.insert(canonical_shadow(a.shadow));
    return s;
}

Check criterion1() {
    Check c;
    struct Row {
        int n;
        ShadowMode mode;
        size_t want;
        double limit;
    };
    for (Row r : {Row{3, ShadowMode::BasicTame, 5, 1}, Row{3, ShadowMode::Essential, 4, 1},
                  Row{4, ShadowMode::BasicTame, 12, 10}, Row{4, ShadowMode::Essential, 7, 10},
                  Row{5, ShadowMode::Essential, 26, 300}}) {
        auto t0 = Clock::now();
        size_t got = enumerate_shadows(r.n, r.mode, 1).size();
        double s = since(t0);
        std::string tag = "n=" + std::to_string(r.n) + (r.mode == ShadowMode::BasicTame ? " basic" : " essential");
        c.expect(got == r.want, tag + " count " + std::to_string(got));
        c.expect(s < r.limit, tag + " took " + fmt(s));
        c.note(tag + "=" + std::to_string(got) + " in " + fmt(s));
    }
    return c;
}

Check criterion2() {
    Check c;
    for (int n : {3, 4, 5})
        for (auto mode : {ShadowMode::BasicTame, ShadowMode::Essential}) {
            if (n == 5 && mode == ShadowMode::BasicTame) continue;
            auto figs = figure_shadows(n, mode);
            bool eq = canon_set(enumerate_shadows(n, mode)) == canon_set(figs);
            c.expect(eq, "n=" + std::to_string(n) + " set differs from figures");
        }
    c.note("essential sets for n=3,4,5 and basic sets for n=3,4 match the figures");
    return c;
}

Check criterion3(ClassifyResult (&res)[3]) {
    Check c;
    auto t0 = Clock::now();
    for (int n : {3, 4, 5}) res[n - 3] = classify(n, ReconMode::Tsp4, 1);
    double lib = since(t0);
    for (int n : {3, 4, 5}) {
        auto v = verify_against_paper(res[n - 3]);
        c.expect(v.ok(), "verify n=" + std::to_string(n));
    }
    std::set<Quiver> fam;
    for (const auto& q : res[0].survivors) fam.insert(family_key(q));
    c.expect(fam.size() == 4, "n=3 families " + std::to_string(fam.size()));
    c.expect(res[1].survivors.size() == 6, "n=4 count " + std::to_string(res[1].survivors.size()));
    c.expect(res[2].survivors.size() == 19, "n=5 count " + std::to_string(res[2].survivors.size()));
    for (int n : {4, 5})
        for (const auto& g : golden_quivers(n)) {
            bool hit = std::any_of(res[n - 3].survivors.begin(), res[n - 3].survivors.end(),
                                   [&](const Quiver& q) { return oracle::iso_or_opposite(q, g.quiver); });
            c.expect(hit, g.name + " missing at n=" + std::to_string(n));
        }
    auto t1 = Clock::now();
    for (int n : {3, 4, 5}) {
        int code = run_cli("classify --n " + std::to_string(n) + " --mode tsp4 --verify");
        c.expect(code == 0, "classify --verify --n " + std::to_string(n) + " exit " + std::to_string(code));
    }
    double cli = since(t1);
    c.expect(lib + cli < 120, "runtime " + fmt(lib + cli));
    c.note("families=" + std::to_string(fam.size()) + ", n=4: " + std::to_string(res[1].survivors.size()) +
           ", n=5: " + std::to_string(res[2].survivors.size()) + "; library " + fmt(lib) + ", CLI --verify " +
           fmt(cli));
    return c;
}

Check criterion4(const ClassifyResult& r5) {
    Check c;
    std::vector<Shadow> with;
    for (const auto& s : r5.shadows)
        if (!s.survivors.empty()) with.push_back(s.shadow);
    c.expect(with.size() == 10, "shadows with survivors " + std::to_string(with.size()));
    c.expect(canon_set(with) == canon_set(surviving_shadow_figures()), "set differs from the ten figures");
    c.note(std::to_string(with.size()) + " shadows carry survivors");
    return c;
}

Check criterion5() {
    Check c;
    int total = 0, positive = 0;
    for (int x = -2; x <= 2; ++x)
        for (int y = -2; y <= 2; ++y)
            for (int z = -2; z <= 2; ++z) {
                Shadow a(3);
                a.set(0, 1, x);
                a.set(0, 2, y);
                a.set(1, 2, z);
                ++total;
                auto w = ps3_feasible(a);
                bool brute = oracle::ps3_bounded(a);
                c.expect(w.has_value() == brute, "disagreement at (" + std::to_string(x) + "," + std::to_string(y) +
                                                     "," + std::to_string(z) + ")");
                if (!w) continue;
                ++positive;
                // symmetric over N, nonzero columns, A*C = 0
                bool good = w->c.size() == 3;
                for (int i = 0; good && i < 3; ++i) good = w->c[i].size() == 3;
                for (int j = 0; good && j < 3; ++j) {
                    bool nz = false;
                    for (int i = 0; good && i < 3; ++i) {
                        good = w->c[i][j] == w->c[j][i] && w->c[i][j] >= 0;
                        nz |= w->c[i][j] != 0;
                        long long s = 0;
                        for (int k = 0; k < 3; ++k) s += static_cast<long long>(a(i, k)) * w->c[k][j];
                        good = good && s == 0;
                    }
                    good = good && nz;
                }
                c.expect(good, "witness check");
            }
    c.note(std::to_string(total) + " matrices, " + std::to_string(positive) + " positive with verified witnesses");
    return c;
}

Check criterion6() {
    Check c;
    // (a)
    int odd = 0;
    for (int n : {1, 3, 5})
        for (auto mode : {ShadowMode::BasicTame, ShadowMode::Essential})
            for (const auto& a : enumerate_shadows(n, mode)) {
                ++odd;
                c.expect(oracle::det(a) == 0 && det_is_zero(a), "(a) determinant");
            }
    // (b)
    std::mt19937 rng(2024);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + t % 6;
        Quiver q = oracle::random_quiver(rng, n);
        Quiver cq = canonical_form(q).quiver;
        c.expect(canonical_form(cq).quiver == cq, "(b) canonical_form idempotent");
        Quiver r = relabel(q, oracle::random_perm(rng, n));
        c.expect(canonical_form(r).quiver == cq, "(b) canonical_form orbit constant");
        Shadow a = shadow_of(q);
        Shadow ca = canonical_shadow(a);
        c.expect(canonical_shadow(ca) == ca, "(b) canonical_shadow idempotent");
        c.expect(canonical_shadow(relabel(a, oracle::random_perm(rng, n))) == ca, "(b) canonical_shadow orbit");
    }
    // (c)
    int occ = 0;
    for (int n : {3, 4, 5})
        for (const auto& g : golden_quivers(n))
            for (int v = 0; v < g.quiver.n(); ++v) {
                if (g.quiver.has_loop(v) || rewrite_matches(g.quiver, v).empty()) continue;
                ++occ;
                Quiver once = mutate_block(g.quiver, v);
                c.expect(oracle::isomorphic(mutate_block(once, v), g.quiver), "(c) involution on " + g.name);
            }
    c.expect(occ > 0, "(c) no occurrences");
    // (d)
    Quiver q17 = named_fixture("Q17"), q13 = named_fixture("Q13");
    c.expect(oracle::isomorphic(mutate_block(q17, 2), q13), "(d) mutate(Q17, x1) is not Q13");
    Shadow q26;
    for (const auto& s : figure_shadows(5, ShadowMode::Essential))
        if (s.name == "Q26") q26 = s.shadow;
    int pivots = 0;
    for (int v = 0; v < 5; ++v) {
        if (q13.has_loop(v) || !is_pq(q13, v, 1, 1) || rewrite_matches(q13, v).empty()) continue;
        ++pivots;
        c.expect(oracle::shadow_equivalent(shadow_of(mutate_block(q13, v)), q26), "(d) shadow of mutate(Q13, c)");
    }
    c.expect(pivots > 0, "(d) no pivot in Q13");
    // (e)
    int fam = 0;
    for (const auto& s : figure_shadows(5, ShadowMode::Essential)) {
        if (s.name != "Q18") continue;
        for (const auto& r : reconstruct(s.shadow)) {
            ++fam;
            c.expect(wild_unfolding_filter(r.candidate.assembled).has_value(), "(e) wild filter silent on Q18");
        }
    }
    c.expect(fam > 0, "(e) empty Q18 family");
    int golden = 0;
    for (int n : {3, 4, 5})
        for (const auto& g : golden_quivers(n)) {
            ++golden;
            c.expect(!wild_unfolding_filter(g.quiver), "(e) wild filter fires on " + g.name);
        }
    c.note("(a) " + std::to_string(odd) + " shadows, (b) 200 relabelings, (c) " + std::to_string(occ) +
           " occurrences, (d) " + std::to_string(pivots) + " pivot, (e) " + std::to_string(fam) +
           " candidates / " + std::to_string(golden) + " golden");
    return c;
}

Check criterion7(const ClassifyResult (&res)[3]) {
    Check c;
    std::string s;
    for (int n : {3, 4, 5}) {
        auto m = verify_main_theorem(res[n - 3]);
        c.expect(m.ok(), "n=" + std::to_string(n) + " " + std::to_string(m.failures.size()) + " failures");
        s += "n=" + std::to_string(n) + ": " + std::to_string(m.checked) + " ";
    }
    c.note(s + "recognized");
    return c;
}

Check criterion8() {
    Check c;
    for (int n : {3, 4, 5}) {
        std::string one = classify_to_json(classify(n, ReconMode::Tsp4, 1)).dump();
        for (int t : {2, 8})
            c.expect(classify_to_json(classify(n, ReconMode::Tsp4, t)).dump() == one,
                     "classify n=" + std::to_string(n) + " threads " + std::to_string(t));
        for (auto mode : {ShadowMode::BasicTame, ShadowMode::Essential}) {
            auto dump = [&](int t) {
                json j = json::array();
                for (const auto& a : enumerate_shadows(n, mode, t)) j.push_back(shadow_to_json(a));
                return j.dump();
            };
            std::string s1 = dump(1);
            c.expect(dump(2) == s1 && dump(8) == s1, "shadows n=" + std::to_string(n));
        }
    }
    std::string ref_c, ref_s;
    for (int t : {1, 2, 8}) {
        std::string ts = std::to_string(t);
        std::string cf = "acceptance_classify_t" + ts + ".json", sf = "acceptance_shadows_t" + ts + ".json";
        c.expect(run_cli("classify --n 5 --threads " + ts + " --out " + cf) == 0, "CLI classify threads " + ts);
        c.expect(run_cli("shadows --n 5 --mode basic --threads " + ts + " --out " + sf) == 0,
                 "CLI shadows threads " + ts);
        std::string a = slurp(cf), b = slurp(sf);
        if (t == 1) {
            ref_c = a;
            ref_s = b;
            c.expect(!a.empty() && !b.empty(), "CLI output empty");
        } else {
            c.expect(a == ref_c, "CLI classify bytes differ at threads " + ts);
            c.expect(b == ref_s, "CLI shadows bytes differ at threads " + ts);
        }
        std::remove(cf.c_str());
        std::remove(sf.c_str());
    }
    c.note("library and CLI output identical for threads 1, 2, 8");
    return c;
}

Check criterion9() {
    Check c;
    auto t0 = Clock::now();
    EnumerationStats st;
    auto list = enumerate_shadows(6, ShadowMode::BasicTame, 8, &st);
    double s = since(t0);
    json shadows = json::array();
    for (const auto& a : list) shadows.push_back(shadow_to_json(a));
    json j = {{"n", 6}, {"mode", "basic"}, {"count", list.size()}, {"shadows", shadows}};
    std::ofstream("acceptance_n6_basic.json") << j.dump() << "\n";
    c.note("n=6 basic tame shadows: " + std::to_string(list.size()) + " in " + fmt(s) + " (" +
           std::to_string(st.nodes) + " search nodes), written to acceptance_n6_basic.json");
    return c;
}

}  // namespace

int main() {
    int failed = 0;
    ClassifyResult res[3];
    std::vector<std::pair<int, std::function<Check()>>> all = {
        {1, criterion1},
        {2, criterion2},
        {3, [&] { return criterion3(res); }},
        {4, [&] { return criterion4(res[2]); }},
        {5, criterion5},
        {6, criterion6},
        {7, [&] { return criterion7(res); }},
        {8, criterion8},
        {9, criterion9},
    };
    for (auto& [k, f] : all) {
        auto t0 = Clock::now();
        Check c;
        try {
            c = f();
        } catch (const std::exception& e) {
            c.ok = false;
            c.notes.push_back(std::string("exception: ") + e.what());
        }
        std::string detail;
        for (const auto& s : c.notes) detail += (detail.empty() ? "" : "; ") + s;
        std::cout << "Criterion " << k << ": " << (c.ok ? "PASS" : "FAIL") << " [" << fmt(since(t0)) << "] "
                  << detail << std::endl;
        if (!c.ok && k != 9) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
