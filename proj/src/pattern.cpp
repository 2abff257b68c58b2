#include "pq/pattern.hpp"

namespace pq {

namespace {

struct Search {
    const Quiver& q;
    const PatternSpec& p;
    std::vector<int> tm;  // template multiplicity matrix
    std::vector<char> texact;
    std::vector<int> tin, tout;
    Match cur;
    std::vector<char> used;
    std::vector<Match> out;

    Search(const Quiver& q_, const PatternSpec& p_) : q(q_), p(p_) {
        const int k = p.k;
        tm.assign(static_cast<size_t>(k) * k, 0);
        texact.assign(static_cast<size_t>(k) * k, 0);
        tin.assign(k, 0);
        tout.assign(k, 0);
        for (const auto& a : p.arrows) {
            tm[a.s * k + a.t] += a.mult;
            if (a.exact) texact[a.s * k + a.t] = 1;
            tout[a.s] += a.mult;
            tin[a.t] += a.mult;
        }
        used.assign(q.n(), 0);
    }

    bool vertex_ok(int a, int v) const {
        if (p.constraints.empty()) return true;
        const auto& c = p.constraints[a];
        auto d = degrees(q, v);
        switch (c.kind) {
            case VertexConstraint::None: return true;
            case VertexConstraint::ExactDegree: return d.indeg == c.indeg && d.outdeg == c.outdeg;
            case VertexConstraint::MinDegree: return d.indeg >= c.indeg && d.outdeg >= c.outdeg;
            case VertexConstraint::Closed: return d.indeg == tin[a] && d.outdeg == tout[a];
        }
        return true;
    }

    bool arrows_ok(int a) const {
        const int k = p.k;
        for (int b = 0; b <= a; ++b) {
            for (int dir = 0; dir < 2; ++dir) {
                int s = dir ? b : a, t = dir ? a : b;
                int need = tm[s * k + t];
                int have = q(cur[s], cur[t]);
                if (texact[s * k + t] ? have != need : have < need) return false;
                if (a == b) break;
            }
        }
        return true;
    }

    void rec(int a) {
        if (a == p.k) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v < q.n(); ++v) {
            if (used[v]) continue;
            cur[a] = v;
            if (!vertex_ok(a, v) || !arrows_ok(a)) continue;
            used[v] = 1;
            rec(a + 1);
            used[v] = 0;
        }
    }
};

}  // namespace

std::vector<Match> find_pattern(const Quiver& q, const PatternSpec& p) {
    if (p.k == 0 || p.k > q.n()) return {};
    Search s(q, p);
    s.cur.assign(p.k, -1);
    s.rec(0);
    return s.out;
}

PatternSpec k2_plus_spec() {
    return {"K2+", 3, {{1, 0, 1}, {1, 2, 2}}, {}};
}

PatternSpec k2_minus_spec() {
    return {"K2-", 3, {{0, 1, 1}, {2, 1, 2}}, {}};
}

}  // namespace pq
