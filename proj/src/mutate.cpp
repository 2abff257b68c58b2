#include "pq/surface.hpp"

namespace pq {

const char* to_string(RewriteKind k) {
    switch (k) {
        case RewriteKind::IVtoV2: return "IV->V2";
        case RewriteKind::V2toIV: return "V2->IV";
        case RewriteKind::VtoV3: return "V->V3";
        case RewriteKind::V3toV: return "V3->V";
    }
    return "?";
}

// roles:
//   IV->V2 / V2->IV : {c, p, s, d} with p -> c -> s
//   V->V3           : {y1, y2, x1, x2, e}, pivot x1
//   V3->V           : {a, u, v, b, c}, pivot a
std::vector<RewriteMatch> rewrite_matches(const Quiver& q, int v) {
    if (v < 0 || v >= q.n()) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v + 1));
    std::vector<RewriteMatch> out;
    auto d = degrees(q, v);
    if (d.indeg == 1 && d.outdeg == 1 && !q.has_loop(v)) {
        int p = predecessors(q, v).front(), s = successors(q, v).front();
        if (p == s || (q(p, s) && q(s, p))) return out;
        for (int w = 0; w < q.n(); ++w) {
            if (w == v || !is_pq(q, w, 1, 1)) continue;
            if (q(p, w) && q(w, s)) out.push_back({RewriteKind::IVtoV2, {v, p, s, w}});
            if (q(s, w) && q(w, p)) out.push_back({RewriteKind::V2toIV, {v, p, s, w}});
        }
    } else if (d.indeg == 2 && d.outdeg == 1) {
        for (const Match& m : find_pattern(q, block_pattern(BlockType::V)))
            if (m[2] == v) out.push_back({RewriteKind::VtoV3, m});
    } else if (d.indeg == 1 && d.outdeg == 2) {
        for (const Match& m : find_pattern(q, block_pattern(BlockType::V3)))
            if (m[0] == v) out.push_back({RewriteKind::V3toV, m});
    }
    return out;
}

Quiver mutate_block(const Quiver& q, int v) {
    if (v < 0 || v >= q.n()) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v + 1));
    if (q.has_loop(v)) throw Error(ErrorKind::LoopAtPivot, "loop at vertex " + std::to_string(v + 1));
    auto ms = rewrite_matches(q, v);
    if (ms.empty())
        throw Error(ErrorKind::NoMatchingPattern, "no block rewrite applies at vertex " + std::to_string(v + 1));
    const RewriteMatch& m = ms.front();
    Quiver r = q;
    auto del = [&](int a, int b) { r.at(a, b)--; };
    auto add = [&](int a, int b) { r.at(a, b)++; };
    switch (m.kind) {
        case RewriteKind::IVtoV2:
        case RewriteKind::V2toIV: {
            int c = m.roles[0], p = m.roles[1], s = m.roles[2];
            del(p, c);
            del(c, s);
            add(s, c);
            add(c, p);
            if (r(s, p) > 0) del(s, p);
            else add(p, s);
            break;
        }
        case RewriteKind::VtoV3: {
            int y2 = m.roles[1], x1 = m.roles[2], x2 = m.roles[3], e = m.roles[4];
            del(e, x2);
            del(e, y2);
            del(x1, e);
            del(x2, x1);
            del(y2, x1);
            add(x1, x2);
            add(x1, y2);
            add(e, x1);
            break;
        }
        case RewriteKind::V3toV: {
            int x1 = m.roles[0], x2 = m.roles[1], y2 = m.roles[2], e = m.roles[4];
            del(x1, x2);
            del(x1, y2);
            del(e, x1);
            add(e, x2);
            add(e, y2);
            add(x1, e);
            add(x2, x1);
            add(y2, x1);
            break;
        }
    }
    check_tame(r);
    return r;
}

}  // namespace pq
