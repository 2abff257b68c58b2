#include <algorithm>

#include "pq/reconstruction.hpp"

namespace pq {

Quiver assemble(const Quiver& base, const std::vector<VertexPair>& two_cycles, const std::vector<int>& loops) {
    Quiver q = base;
    for (auto [i, j] : two_cycles) {
        q.at(i, j)++;
        q.at(j, i)++;
    }
    for (int i : loops) q.at(i, i)++;
    return q;
}

bool relation_free_certificate(const Quiver& q, const std::vector<int>& path) {
    if (path.size() != 3 && path.size() != 4)
        throw Error(ErrorKind::NotComposable, "certificate needs a path of 2 or 3 arrows");
    for (int v : path)
        if (v < 0 || v >= q.n()) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v + 1));
    for (size_t k = 0; k + 1 < path.size(); ++k)
        if (q(path[k], path[k + 1]) == 0)
            throw Error(ErrorKind::NotComposable, "no arrow " + std::to_string(path[k] + 1) + " -> " +
                                                      std::to_string(path[k + 1] + 1));
    return q(path.back(), path.front()) == 0;
}

namespace {

struct PairRule {
    bool ok = false;
    std::vector<int> closed;  // vertices no other pair may touch
    VertexPair rival{-1, -1};  // the other diagonal of an alternating square
};

int only(const std::vector<int>& v) { return v.size() == 1 ? v.front() : -1; }

PairRule pair_rule(const Quiver& qx, int i, int j) {
    PairRule r;
    if (qx(i, j) || qx(j, i)) return r;
    for (int v : {i, j}) {
        auto d = degrees(qx, v);
        if (on_double_arrow(qx, v) || d.indeg > 2 || d.outdeg > 2) return r;
        if (d.indeg == 2 && d.outdeg == 2) return r;
    }
    auto di = degrees(qx, i), dj = degrees(qx, j);
    auto is = [](VertexDegree d, int a, int b) { return d.indeg == a && d.outdeg == b; };
    if (is(di, 0, 0) || is(dj, 0, 0)) {
        VertexDegree o = is(di, 0, 0) ? dj : di;
        r.ok = is(o, 0, 0) || is(o, 1, 1) || is(o, 1, 2) || is(o, 2, 1);
        return r;
    }
    if (is(di, 1, 1) && is(dj, 1, 1)) {
        // antipodal on an alternating square x -> i -> y -> j -> x
        int pi = only(predecessors(qx, i)), si = only(successors(qx, i));
        int pj = only(predecessors(qx, j)), sj = only(successors(qx, j));
        r.ok = pi == sj && si == pj && pi != si;
        if (r.ok) r.rival = {std::min(pi, si), std::max(pi, si)};
        return r;
    }
    if ((is(di, 1, 2) && is(dj, 2, 1)) || (is(di, 2, 1) && is(dj, 1, 2))) {
        int a = is(di, 1, 2) ? i : j, b = a == i ? j : i;
        auto sa = successors(qx, a), pb = predecessors(qx, b);
        std::sort(sa.begin(), sa.end());
        std::sort(pb.begin(), pb.end());
        if (sa != pb || sa.size() != 2) return r;
        if (only(predecessors(qx, a)) != only(successors(qx, b))) return r;
        for (int u : sa)
            if (!is_pq(qx, u, 1, 1)) return r;
        r.ok = true;
        r.closed = sa;
        return r;
    }
    return r;
}

}  // namespace

std::vector<std::vector<VertexPair>> two_cycle_placements(const Quiver& qx) {
    const int n = qx.n();
    if (n > 5) throw Error(ErrorKind::UnsupportedSize, "2-cycle placement rules cover n <= 5");
    std::vector<std::vector<VertexPair>> out;
    if (qx.arrow_count() == 0) {
        // zero shadow: a 2-cycle on any pairs, only meaningful for n <= 3
        if (n > 3) return out;
        std::vector<VertexPair> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
        for (unsigned mask = 1; mask < (1u << pairs.size()); ++mask) {
            std::vector<VertexPair> e;
            for (size_t b = 0; b < pairs.size(); ++b)
                if (mask >> b & 1) e.push_back(pairs[b]);
            out.push_back(e);
        }
        return out;
    }
    std::vector<VertexPair> pairs;
    std::vector<PairRule> rules;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            PairRule r = pair_rule(qx, i, j);
            if (!r.ok) continue;
            pairs.push_back({i, j});
            rules.push_back(r);
        }
    std::vector<VertexPair> cur;
    std::vector<int> used(n, 0), closed(n, 0);
    auto rec = [&](auto&& self, size_t from) -> void {
        out.push_back(cur);
        for (size_t k = from; k < pairs.size(); ++k) {
            auto [i, j] = pairs[k];
            if (used[i] || used[j] || closed[i] || closed[j]) continue;
            bool clash = std::find(cur.begin(), cur.end(), rules[k].rival) != cur.end();
            for (int c : rules[k].closed) clash |= used[c] > 0;
            if (clash) continue;
            used[i] = used[j] = 1;
            for (int c : rules[k].closed) closed[c]++;
            cur.push_back(pairs[k]);
            self(self, k + 1);
            cur.pop_back();
            for (int c : rules[k].closed) closed[c]--;
            used[i] = used[j] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

namespace {

bool two_regular_at(const Quiver& q, int v) { return is_pq(q, v, 2, 2); }

bool loop_ok(const Quiver& q, const Quiver& qo, int i) {
    const int n = q.n();
    auto d = degrees(qo, i);
    auto succ = successors(qo, i), pred = predecessors(qo, i);
    if (d.indeg == 2 && d.outdeg == 2) {
        for (int j : succ)
            if (two_regular_at(q, j)) return false;
        for (int j : pred)
            if (two_regular_at(q, j)) return false;
    }
    if (d.outdeg == 2)
        for (int j : succ) {
            if (degrees(q, j).indeg >= 2) return false;
            for (int k = 0; k < n; ++k)
                if (qo(j, k) && q(k, i) == 0) return false;
        }
    if (d.indeg == 2)
        for (int j : pred) {
            if (degrees(q, j).outdeg >= 2) return false;
            for (int k = 0; k < n; ++k)
                if (qo(k, j) && q(i, k) == 0) return false;
        }
    return true;
}

}  // namespace

std::vector<std::vector<int>> loop_placements(const Quiver& qo) {
    const int n = qo.n();
    const bool zero = reduced_quiver(qo).arrow_count() == 0;
    std::vector<int> cand;
    for (int i = 0; i < n; ++i) {
        auto d = degrees(qo, i);
        if (d.indeg > 2 || d.outdeg > 2 || on_double_arrow(qo, i) || is_isolated(qo, i)) continue;
        if (zero && !(d.indeg == 1 && d.outdeg == 1)) continue;
        cand.push_back(i);
    }
    std::vector<std::vector<int>> out;
    // subsets by size, then lexicographically
    for (size_t k = 0; k <= cand.size(); ++k) {
        std::vector<char> pick(cand.size(), 0);
        std::fill(pick.begin(), pick.begin() + k, 1);
        do {
            std::vector<int> s;
            for (size_t b = 0; b < cand.size(); ++b)
                if (pick[b]) s.push_back(cand[b]);
            Quiver q = assemble(qo, {}, s);
            if (std::all_of(s.begin(), s.end(), [&](int i) { return loop_ok(q, qo, i); })) out.push_back(s);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return out;
}

}  // namespace pq
