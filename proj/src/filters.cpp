#include <algorithm>

#include "pq/exact.hpp"
#include "pq/reconstruction.hpp"
#include "pq/surface.hpp"

namespace pq {

namespace {

json vertices_json(std::initializer_list<int> vs) {
    json a = json::array();
    for (int v : vs) a.push_back(v + 1);
    return a;
}

ExclusionReport fired(const char* rule, const char* citation, json witness) {
    return {true, rule, citation, std::move(witness), false};
}

bool deg_is(const Quiver& q, int i, int a, int b) { return is_pq(q, i, a, b); }

std::optional<json> k2_subquiver(const Quiver& q) {
    const int n = q.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || q(i, j) < 2) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (q(i, k)) return json{{"shape", "K2+"}, {"vertices", vertices_json({i, j, k})}};
                if (q(k, j)) return json{{"shape", "K2-"}, {"vertices", vertices_json({i, j, k})}};
            }
        }
    return std::nullopt;
}

std::optional<json> lonely_arrow(const Quiver& q) {
    for (int i = 0; i < q.n(); ++i)
        for (int j = 0; j < q.n(); ++j)
            if (q(i, j) && degrees(q, i).outdeg == 1 && degrees(q, j).indeg == 1)
                return json{{"arrow", vertices_json({i, j})}};
    return std::nullopt;
}

std::optional<json> double_at_nonregular(const Quiver& q) {
    for (int i = 0; i < q.n(); ++i)
        for (int j = 0; j < q.n(); ++j) {
            if (i == j) continue;
            if (deg_is(q, i, 1, 2) && q(i, j) == 2) return json{{"vertex", i + 1}, {"double_to", j + 1}};
            if (deg_is(q, i, 2, 1) && q(j, i) == 2) return json{{"vertex", i + 1}, {"double_from", j + 1}};
        }
    return std::nullopt;
}

std::optional<json> finite_type(const Quiver& q) {
    if (q.n() + q.arrow_count() <= 6) return json{{"n", q.n()}, {"arrows", q.arrow_count()}};
    return std::nullopt;
}

std::optional<json> not_triangulation(const Quiver& q) {
    if (!is_two_regular(q)) return std::nullopt;
    if (decompose_into_blocks(q, triangulation_blocks())) return std::nullopt;
    return json{{"reason", "2-regular but not a glueing of blocks I, II, III"}};
}

std::optional<json> biregular_without_glueing(const Quiver& q) {
    if (!is_biregular(q) || is_two_regular(q)) return std::nullopt;
    std::vector<char> bullet(q.n(), 0);
    for (BlockType t : {BlockType::V1, BlockType::V2}) {
        const auto& bt = block_template(t);
        for (const Match& m : find_pattern(q, block_pattern(t)))
            for (int a = 0; a < bt.k; ++a)
                if (bt.roles[a] == 'b') bullet[m[a]] = 1;
    }
    for (int i = 0; i < q.n(); ++i)
        if (deg_is(q, i, 1, 1) && !bullet[i])
            return json{{"reason", "1-regular vertex is not a bullet of V1 or V2"}, {"vertex", i + 1}};
    if (!decompose_into_blocks(q, wsa_gabriel_blocks()))
        return json{{"reason", "no glueing of blocks I, II, III, V1, V2"}};
    return std::nullopt;
}

std::optional<json> biserial_rules(const Quiver& q) {
    if (!is_biserial(q)) return std::nullopt;
    for (int i = 0; i < q.n(); ++i) {
        if (deg_is(q, i, 1, 2)) {
            auto su = successors(q, i);
            for (int j : su)
                if (deg_is(q, j, 1, 2)) return json{{"vertex", i + 1}, {"successor", j + 1}};
            if (std::none_of(su.begin(), su.end(), [&](int j) { return deg_is(q, j, 1, 1); }))
                return json{{"vertex", i + 1}, {"reason", "no 1-regular successor"}};
        }
        if (deg_is(q, i, 2, 1)) {
            auto pr = predecessors(q, i);
            for (int j : pr)
                if (deg_is(q, j, 2, 1)) return json{{"vertex", i + 1}, {"predecessor", j + 1}};
            if (std::none_of(pr.begin(), pr.end(), [&](int j) { return deg_is(q, j, 1, 1); }))
                return json{{"vertex", i + 1}, {"reason", "no 1-regular predecessor"}};
        }
    }
    return std::nullopt;
}

// L -> T -> R -> L and R -> B -> L
const Quiver& square_block() {
    static const Quiver s = validate_quiver({{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, 0}});
    return s;
}

std::optional<json> forbidden_square(const Quiver& q) {
    const Quiver x = reduced_quiver(q);
    const int n = q.n();
    std::vector<int> comp(n, -1);
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> members{s}, stack{s};
        comp[s] = s;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if ((x(v, w) || x(w, v)) && comp[w] < 0) {
                    comp[w] = s;
                    members.push_back(w);
                    stack.push_back(w);
                }
        }
        if (members.size() != 4) continue;
        std::sort(members.begin(), members.end());
        Quiver sub(4);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) sub.at(a, b) = x(members[a], members[b]);
        if (is_isomorphic(sub, square_block())) {
            json vs = json::array();
            for (int v : members) vs.push_back(v + 1);
            return json{{"component", vs}};
        }
    }
    return std::nullopt;
}

struct Rule {
    const char* id;
    const char* citation;
    std::optional<json> (*test)(const Quiver&);
};

const Rule kRules[] = {
    {"F7", "double arrow continued by a single arrow (K2+/K2- subquiver)", k2_subquiver},
    {"F1", "arrow i->j with i+ and j- both of size one", lonely_arrow},
    {"F2", "nonregular vertex whose double side is a double arrow", double_at_nonregular},
    {"F8", "representation-finite range n + m <= 6", finite_type},
    {"F6", "2-regular quiver that is not a triangulation quiver", not_triangulation},
    {"F3", "biregular quiver that is not a weighted surface Gabriel quiver", biregular_without_glueing},
    {"F5", "successor/predecessor rules for nonregular vertices of biserial quivers", biserial_rules},
    {"F4", "forbidden four-vertex block in the reduced quiver", forbidden_square},
};

}  // namespace

ExclusionReport structural_filters(const Quiver& q, ReconMode) {
    for (const Rule& r : kRules)
        if (auto w = r.test(q)) return fired(r.id, r.citation, std::move(*w));
    return {};
}

std::vector<std::vector<int>> dimension_rows(const Quiver& q) {
    const int n = q.n();
    std::vector<std::vector<int>> r(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i][j] = q(j, i) - q(i, j);
    return r;
}

ExclusionReport dimension_exclusion(const Quiver& q) {
    const int n = q.n();
    auto r = dimension_rows(q);
    RatMatrix rows(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = r[i][j];
    const char* cite = "dimension vectors of projectives (equal tops and socles)";
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> h(n);
        for (int j = 0; j < n; ++j) h[j] = q(j, i);
        h[i] -= 1;
        if (in_row_space(rows, h))
            return fired("dim", cite, json{{"test", "forced equality"}, {"vertex", i + 1}});
    }
    // p = 1 + x with x >= 0
    std::vector<Rational> b(n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i] -= rows[i][j];
    LpResult lp = lp_feasible(rows, b);
    if (!lp.feasible) {
        json y = json::array();
        for (const auto& v : lp.farkas) y.push_back(v.str());
        return fired("dim", cite, json{{"test", "no positive solution"}, {"farkas", y}});
    }
    return {};
}

}  // namespace pq
