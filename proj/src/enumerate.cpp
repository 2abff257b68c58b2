#include <algorithm>
#include <functional>
#include <atomic>
#include <cstdlib>
#include <set>
#include <thread>

#include "pq/shadow.hpp"

namespace pq {

namespace {

constexpr int N = kMaxEnumerationN;

struct Partial {
    int k = 0;  // vertices fixed so far
    int a[N][N] = {};
};

struct Ctx {
    int n;
    ShadowMode mode;
};

// Row i restricted to vertices < k still satisfies the monotone sign conditions.
bool row_ok(const Partial& p, int i, const Ctx& c) {
    int pos = 0, neg = 0;
    bool p2 = false, m2 = false;
    for (int j = 0; j < p.k; ++j) {
        int v = p.a[i][j];
        pos += v > 0;
        neg += v < 0;
        p2 |= v == 2;
        m2 |= v == -2;
    }
    if (pos > 4 || neg > 4) return false;
    if (p2 && pos > 1) return false;
    if (m2 && neg > 1) return false;
    // the only exception to PS4 is the 3x3 Markov shadow
    if (c.mode == ShadowMode::Essential && c.n != 3 && p2 && m2) return false;
    return true;
}

bool ps5_new_vertex_ok(const Partial& p) {
    const int k = p.k, v = k - 1;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) {
                if (i != v && j != v && l != v) continue;
                if (i == j || j == l || i == l) continue;
                if (p.a[i][j] == 2 && p.a[j][l] == 1 && !(p.a[l][i] > 0)) return false;
                if (p.a[i][j] == -2 && p.a[j][l] == -1 && !(p.a[l][i] < 0)) return false;
            }
    return true;
}

// Orderly generation: the column-wise upper triangle must be lexicographically
// maximal among all relabelings of the k fixed vertices.
struct MaxCheck {
    const Partial& p;
    int k;
    int perm[N];
    bool used[N] = {};

    explicit MaxCheck(const Partial& p_) : p(p_), k(p_.k) {}

    // returns false as soon as a relabeling beats the identity
    bool rec(int c) {
        if (c >= k || c >= N) return true;
        for (int v = 0; v < k; ++v) {
            if (used[v]) continue;
            perm[c] = v;
            int cmp = 0;
            for (int r = 0; r < c; ++r) {
                int x = p.a[perm[r]][v], y = p.a[r][c];
                if (x != y) {
                    cmp = x > y ? 1 : -1;
                    break;
                }
            }
            if (cmp > 0) return false;
            if (cmp < 0) continue;
            used[v] = true;
            bool ok = rec(c + 1);
            used[v] = false;
            if (!ok) return false;
        }
        return true;
    }
};

bool is_max(const Partial& p) {
    MaxCheck m(p);
    return m.rec(0);
}

Shadow to_shadow(const Partial& p) {
    Shadow s(p.k);
    for (int i = 0; i < p.k; ++i)
        for (int j = i + 1; j < p.k; ++j) s.set(i, j, p.a[i][j]);
    return s;
}

bool leaf_accept(const Shadow& s, const Ctx& c, EnumerationStats& st) {
    ShadowReport rep = sign_conditions(s);
    if (!rep.ps2.pass || !rep.t1.pass || !rep.t2.pass || !rep.t3.pass) return false;
    if (c.mode == ShadowMode::Essential && (!(rep.ps4.pass || rep.markov_exception) || !rep.ps5.pass))
        return false;
    if (!det_is_zero(s)) return false;
    ++st.lp_calls;
    return ps3_feasible(s).has_value();
}

// Extend p by one vertex in every admissible way; calls f on each canonical child.
template <class F>
void children(Partial& p, const Ctx& c, EnumerationStats& st, F&& f) {
    const int k = p.k;
    p.k = k + 1;
    // odometer over column k entries a[0..k-1][k]
    int vals[N];
    std::fill(vals, vals + k, -2);
    auto assign = [&](int r) {
        p.a[r][k] = vals[r];
        p.a[k][r] = -vals[r];
    };
    for (int r = 0; r < k; ++r) assign(r);
    p.a[k][k] = 0;
    for (;;) {
        ++st.nodes;
        bool ok = true;
        for (int r = 0; r <= k && ok; ++r) ok = row_ok(p, r, c);
        if (ok && c.mode == ShadowMode::Essential) ok = ps5_new_vertex_ok(p);
        if (ok && is_max(p)) f(p);
        int r = k - 1;
        while (r >= 0 && vals[r] == 2) {
            vals[r] = -2;
            assign(r);
            --r;
        }
        if (r < 0) break;
        ++vals[r];
        assign(r);
    }
    for (int r = 0; r < k; ++r) p.a[r][k] = p.a[k][r] = 0;
    p.k = k;
}

void grow(Partial& p, const Ctx& c, EnumerationStats& st, std::vector<Shadow>& out) {
    if (p.k == c.n) {
        ++st.leaves;
        Shadow s = to_shadow(p);
        if (leaf_accept(s, c, st)) out.push_back(canonical_shadow(s));
        return;
    }
    children(p, c, st, [&](Partial& q) { grow(q, c, st, out); });
}

}  // namespace

std::vector<Shadow> enumerate_shadows(int n, ShadowMode mode, int threads, EnumerationStats* stats) {
    if (n < 1 || n > kMaxEnumerationN)
        throw Error(ErrorKind::TooLarge, "enumerate_shadows supports 1 <= n <= 6, got " + std::to_string(n));
    Ctx c{n, mode};
    EnumerationStats total;

    // split point: all canonical prefixes on `split` vertices become tasks
    const int split = std::min(n, 3);
    std::vector<Partial> tasks;
    {
        Partial root;
        std::function<void(Partial&)> collect = [&](Partial& p) {
            if (p.k == split) {
                tasks.push_back(p);
                return;
            }
            children(p, c, total, [&](Partial& q) { collect(q); });
        };
        collect(root);
    }

    std::vector<std::vector<Shadow>> results(tasks.size());
    std::vector<EnumerationStats> tstats(std::max(threads, 1));
    std::atomic<size_t> next{0};
    auto worker = [&](int w) {
        for (size_t t; (t = next.fetch_add(1)) < tasks.size();) {
            Partial p = tasks[t];
            grow(p, c, tstats[w], results[t]);
        }
    };
    if (threads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }

    std::set<Shadow> uniq;
    for (auto& r : results) uniq.insert(r.begin(), r.end());
    for (auto& s : tstats) {
        total.nodes += s.nodes;
        total.leaves += s.leaves;
        total.lp_calls += s.lp_calls;
    }
    if (stats) *stats = total;
    return {uniq.begin(), uniq.end()};
}

}  // namespace pq
