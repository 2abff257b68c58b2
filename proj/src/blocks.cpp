#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pq/pattern.hpp"
#include "pq/surface.hpp"

namespace pq {

const char* to_string(BlockType t) {
    switch (t) {
        case BlockType::I: return "I";
        case BlockType::II: return "II";
        case BlockType::III: return "III";
        case BlockType::IV: return "IV";
        case BlockType::V: return "V";
        case BlockType::V1: return "V1";
        case BlockType::V2: return "V2";
        case BlockType::V3: return "V3";
        case BlockType::V4: return "V4";
    }
    return "?";
}

BlockType block_type_from_string(const std::string& s) {
    for (BlockType t : gwsa_gabriel_blocks())
        if (s == to_string(t)) return t;
    throw Error(ErrorKind::UnknownBlock, "unknown block type '" + s + "'");
}

namespace {

// Arrows of I-III are listed along their f-cycle.
const std::vector<BlockTemplate>& templates() {
    static const std::vector<BlockTemplate> t = {
        {BlockType::I, 1, "o", {{0, 0}}, {"v"}},
        {BlockType::II, 2, "bo", {{1, 0}, {0, 0}, {0, 1}}, {"u", "v"}},
        {BlockType::III, 3, "ooo", {{0, 1}, {1, 2}, {2, 0}}, {"u", "v", "w"}},
        {BlockType::IV, 4, "oobb", {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 0}}, {"a", "b", "c", "d"}},
        {BlockType::V, 5, "bbbbo",
         {{1, 0}, {1, 2}, {3, 0}, {3, 2}, {0, 4}, {2, 4}, {4, 3}, {4, 1}},
         {"y1", "y2", "x1", "x2", "e"}},
        {BlockType::V1, 2, "ob", {{0, 1}, {1, 0}}, {"u", "v"}},
        {BlockType::V2, 4, "obob", {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {"l", "t", "r", "b"}},
        {BlockType::V3, 5, "bbbbo",
         {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 0}},
         {"a", "u", "v", "b", "c"}},
        {BlockType::V4, 6, "bbbbbb",
         {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 0}, {5, 0}},
         {"a", "u", "v", "b", "w", "z"}},
    };
    return t;
}

PatternSpec template_pattern(const BlockTemplate& bt) {
    PatternSpec p;
    p.name = to_string(bt.type);
    p.k = bt.k;
    for (auto [s, t] : bt.arrows) p.arrows.push_back({s, t, 1, false});
    p.constraints.resize(bt.k);
    for (int a = 0; a < bt.k; ++a)
        if (bt.roles[a] == 'b') p.constraints[a].kind = VertexConstraint::Closed;
    return p;
}

struct Candidate {
    BlockType type;
    std::vector<int> vertices;
    std::map<std::pair<int, int>, int> need;  // (s,t) -> copies used
};

struct Cover {
    const Quiver& q;
    std::vector<Candidate> cands;
    std::map<std::pair<int, int>, int> remaining;
    std::vector<int> outlet_count;
    std::vector<char> bullet;
    std::vector<int> chosen;
    std::vector<std::vector<int>> solutions;
    size_t limit;

    Cover(const Quiver& q_, size_t lim) : q(q_), limit(lim) {
        for (int i = 0; i < q.n(); ++i)
            for (int j = 0; j < q.n(); ++j)
                if (q(i, j)) remaining[{i, j}] = q(i, j);
        outlet_count.assign(q.n(), 0);
        bullet.assign(q.n(), 0);
    }

    bool fits(const Candidate& c) const {
        for (auto& [e, m] : c.need) {
            auto it = remaining.find(e);
            if (it == remaining.end() || it->second < m) return false;
        }
        const auto& bt = block_template(c.type);
        for (int a = 0; a < bt.k; ++a) {
            int v = c.vertices[a];
            if (bullet[v]) return false;
            if (bt.roles[a] == 'b' ? outlet_count[v] > 0 : outlet_count[v] >= 2) return false;
        }
        return true;
    }

    void apply(const Candidate& c, int sign) {
        for (auto& [e, m] : c.need) remaining[e] -= sign * m;
        const auto& bt = block_template(c.type);
        for (int a = 0; a < bt.k; ++a) {
            int v = c.vertices[a];
            if (bt.roles[a] == 'b') bullet[v] = sign > 0;
            else outlet_count[v] += sign;
        }
    }

    void rec() {
        if (solutions.size() >= limit) return;
        std::pair<int, int> first{-1, -1};
        for (auto& [e, m] : remaining)
            if (m > 0) {
                first = e;
                break;
            }
        if (first.first < 0) {
            for (int v = 0; v < q.n(); ++v)
                if (!bullet[v] && outlet_count[v] != 2) return;
            solutions.push_back(chosen);
            return;
        }
        for (size_t i = 0; i < cands.size(); ++i) {
            const auto& c = cands[i];
            if (!c.need.count(first) || !fits(c)) continue;
            apply(c, +1);
            chosen.push_back(static_cast<int>(i));
            rec();
            chosen.pop_back();
            apply(c, -1);
            if (solutions.size() >= limit) return;
        }
    }
};

BlockDecomposition materialize(const Quiver& q, const std::vector<Candidate>& cands, const std::vector<int>& sol) {
    BlockDecomposition d;
    d.arrows = arrow_list(q);
    d.glueing.assign(q.n(), {});
    std::map<std::pair<int, int>, int> next_copy;
    auto id_of = [&](int s, int t) {
        int c = next_copy[{s, t}]++;
        for (size_t i = 0; i < d.arrows.size(); ++i)
            if (d.arrows[i].s == s && d.arrows[i].t == t && d.arrows[i].copy == c) return static_cast<int>(i);
        return -1;
    };
    for (int ci : sol) {
        const auto& c = cands[ci];
        const auto& bt = block_template(c.type);
        BlockInstance b{c.type, c.vertices, {}};
        for (auto [s, t] : bt.arrows) b.arrows.push_back(id_of(c.vertices[s], c.vertices[t]));
        int bid = static_cast<int>(d.blocks.size());
        for (int v : c.vertices) d.glueing[v].push_back(bid);
        d.blocks.push_back(std::move(b));
    }
    return d;
}

std::vector<Candidate> candidates(const Quiver& q, const std::vector<BlockType>& allowed) {
    std::vector<Candidate> out;
    std::set<std::pair<std::map<std::pair<int, int>, int>, std::vector<std::pair<int, char>>>> seen;
    for (BlockType t : allowed) {
        const auto& bt = block_template(t);
        for (const Match& m : find_pattern(q, template_pattern(bt))) {
            Candidate c{t, m, {}};
            for (auto [s, u] : bt.arrows) c.need[{m[s], m[u]}]++;
            std::vector<std::pair<int, char>> roles;
            for (int a = 0; a < bt.k; ++a) roles.push_back({m[a], bt.roles[a]});
            std::sort(roles.begin(), roles.end());
            // rotations of a triangle and similar template symmetries collapse here
            if (!seen.insert({c.need, roles}).second) continue;
            out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace

const BlockTemplate& block_template(BlockType t) { return templates()[static_cast<int>(t)]; }

PatternSpec block_pattern(BlockType t) { return template_pattern(block_template(t)); }

const std::vector<BlockType>& triangulation_blocks() {
    static const std::vector<BlockType> v = {BlockType::I, BlockType::II, BlockType::III};
    return v;
}

const std::vector<BlockType>& wsa_gabriel_blocks() {
    static const std::vector<BlockType> v = {BlockType::I, BlockType::II, BlockType::III, BlockType::V1,
                                             BlockType::V2};
    return v;
}

const std::vector<BlockType>& gwsa_gabriel_blocks() {
    static const std::vector<BlockType> v = {BlockType::I,  BlockType::II, BlockType::III,
                                             BlockType::IV, BlockType::V,  BlockType::V1,
                                             BlockType::V2, BlockType::V3, BlockType::V4};
    return v;
}

bool BlockInstance::outlet(int a) const { return block_template(type).roles[a] == 'o'; }

std::vector<Arrow> arrow_list(const Quiver& q) {
    std::vector<Arrow> r;
    for (int i = 0; i < q.n(); ++i)
        for (int j = 0; j < q.n(); ++j)
            for (int c = 0; c < q(i, j); ++c) r.push_back({i, j, c});
    return r;
}

std::vector<BlockDecomposition> all_decompositions(const Quiver& q, const std::vector<BlockType>& allowed,
                                                   size_t limit) {
    Cover cov(q, limit);
    cov.cands = candidates(q, allowed);
    cov.rec();
    std::vector<BlockDecomposition> out;
    for (const auto& s : cov.solutions) out.push_back(materialize(q, cov.cands, s));
    return out;
}

std::optional<BlockDecomposition> decompose_into_blocks(const Quiver& q, const std::vector<BlockType>& allowed) {
    auto all = all_decompositions(q, allowed, 1);
    if (all.empty()) return std::nullopt;
    return all.front();
}

bool check_decomposition(const Quiver& q, const BlockDecomposition& d) {
    std::vector<int> owner(d.arrows.size(), -1);
    for (size_t b = 0; b < d.blocks.size(); ++b) {
        const auto& inst = d.blocks[b];
        const auto& bt = block_template(inst.type);
        if (inst.arrows.size() != bt.arrows.size()) return false;
        for (size_t a = 0; a < bt.arrows.size(); ++a) {
            int id = inst.arrows[a];
            if (id < 0 || id >= static_cast<int>(d.arrows.size()) || owner[id] >= 0) return false;
            owner[id] = static_cast<int>(b);
            if (d.arrows[id].s != inst.vertices[bt.arrows[a].first] ||
                d.arrows[id].t != inst.vertices[bt.arrows[a].second])
                return false;
        }
    }
    if (std::count(owner.begin(), owner.end(), -1) != 0) return false;
    if (static_cast<int>(d.arrows.size()) != q.arrow_count()) return false;
    for (int v = 0; v < q.n(); ++v) {
        int outlets = 0, bullets = 0;
        std::set<int> blocks;
        for (size_t b = 0; b < d.blocks.size(); ++b)
            for (int a = 0; a < block_template(d.blocks[b].type).k; ++a)
                if (d.blocks[b].vertices[a] == v) {
                    blocks.insert(static_cast<int>(b));
                    (d.blocks[b].outlet(a) ? outlets : bullets)++;
                }
        bool ok = (bullets == 1 && outlets == 0) || (bullets == 0 && outlets == 2 && blocks.size() == 2);
        if (!ok) return false;
    }
    return true;
}

GluedQuiver glue_blocks(const std::vector<BlockSpecEntry>& spec) {
    std::vector<std::string> labels;
    std::map<std::string, int> index;
    std::map<std::string, int> outlet_uses, bullet_uses;
    std::map<std::string, std::set<int>> outlet_blocks;
    for (size_t b = 0; b < spec.size(); ++b) {
        const auto& bt = block_template(spec[b].type);
        if (static_cast<int>(spec[b].labels.size()) != bt.k)
            throw Error(ErrorKind::ParseError, std::string("block ") + to_string(bt.type) + " needs " +
                                                   std::to_string(bt.k) + " labels");
        for (int a = 0; a < bt.k; ++a) {
            const auto& l = spec[b].labels[a];
            if (!index.count(l)) {
                index[l] = static_cast<int>(labels.size());
                labels.push_back(l);
            }
            if (bt.roles[a] == 'o') {
                outlet_uses[l]++;
                outlet_blocks[l].insert(static_cast<int>(b));
            } else {
                bullet_uses[l]++;
            }
        }
    }
    for (auto& [l, c] : bullet_uses)
        if (c > 1 || outlet_uses.count(l)) throw Error(ErrorKind::DuplicateBullet, "bullet '" + l + "' reused");
    for (auto& [l, c] : outlet_uses) {
        if (c == 1) throw Error(ErrorKind::DanglingOutlet, "outlet '" + l + "' used once");
        if (c > 2) throw Error(ErrorKind::OverGlued, "outlet '" + l + "' used " + std::to_string(c) + " times");
        if (outlet_blocks[l].size() != 2)
            throw Error(ErrorKind::OverGlued, "outlet '" + l + "' glued inside one block");
    }
    const int n = static_cast<int>(labels.size());
    Matrix m(n, std::vector<int>(n, 0));
    for (const auto& e : spec) {
        const auto& bt = block_template(e.type);
        for (auto [s, t] : bt.arrows) m[index[e.labels[s]]][index[e.labels[t]]]++;
    }
    GluedQuiver g;
    g.quiver = validate_quiver(m, true);
    g.vertex_labels = labels;
    g.decomposition.arrows = arrow_list(g.quiver);
    g.decomposition.glueing.assign(n, {});
    std::map<std::pair<int, int>, int> next_copy;
    for (const auto& e : spec) {
        const auto& bt = block_template(e.type);
        BlockInstance b{e.type, {}, {}};
        for (const auto& l : e.labels) b.vertices.push_back(index[l]);
        for (auto [s, t] : bt.arrows) {
            int vs = b.vertices[s], vt = b.vertices[t];
            int c = next_copy[{vs, vt}]++;
            for (size_t i = 0; i < g.decomposition.arrows.size(); ++i) {
                const auto& a = g.decomposition.arrows[i];
                if (a.s == vs && a.t == vt && a.copy == c) b.arrows.push_back(static_cast<int>(i));
            }
        }
        int bid = static_cast<int>(g.decomposition.blocks.size());
        for (int v : b.vertices) g.decomposition.glueing[v].push_back(bid);
        g.decomposition.blocks.push_back(std::move(b));
    }
    return g;
}

std::vector<BlockSpecEntry> block_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array())
        throw Error(ErrorKind::ParseError, "block spec needs a \"blocks\" array");
    std::vector<BlockSpecEntry> spec;
    for (const auto& b : j["blocks"]) {
        if (!b.contains("type") || !b.contains("outlets"))
            throw Error(ErrorKind::ParseError, "block entry needs \"type\" and \"outlets\"");
        spec.push_back({block_type_from_string(b["type"].get<std::string>()),
                        b["outlets"].get<std::vector<std::string>>()});
    }
    return spec;
}

json decomposition_to_json(const BlockDecomposition& d) {
    json blocks = json::array();
    for (const auto& b : d.blocks) {
        const auto& bt = block_template(b.type);
        json verts = json::array();
        for (int a = 0; a < bt.k; ++a)
            verts.push_back({{"role", bt.names[a]}, {"vertex", b.vertices[a] + 1},
                             {"kind", bt.roles[a] == 'o' ? "outlet" : "bullet"}});
        json arrows = json::array();
        for (int id : b.arrows) arrows.push_back({d.arrows[id].s + 1, d.arrows[id].t + 1});
        blocks.push_back({{"type", to_string(b.type)}, {"vertices", verts}, {"arrows", arrows}});
    }
    return {{"blocks", blocks}};
}

}  // namespace pq
