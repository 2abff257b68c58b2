#include <numeric>

#include "pq/surface.hpp"

namespace pq {

std::optional<TriangulationStructure> triangulation_structure(const Quiver& q) {
    if (!is_two_regular(q)) return std::nullopt;
    auto dec = decompose_into_blocks(q, triangulation_blocks());
    if (!dec) return std::nullopt;
    TriangulationStructure ts;
    ts.quiver = q;
    ts.arrows = dec->arrows;
    const int m = static_cast<int>(ts.arrows.size());
    ts.f.assign(m, -1);
    for (const auto& b : dec->blocks) {
        const int len = static_cast<int>(b.arrows.size());
        for (int i = 0; i < len; ++i) ts.f[b.arrows[i]] = b.arrows[(i + 1) % len];
    }
    ts.bar.assign(m, -1);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b && ts.arrows[a].s == ts.arrows[b].s) ts.bar[a] = b;
    ts.decomposition = std::move(*dec);
    g_orbits(ts);
    return ts;
}

std::vector<int> g_orbits(TriangulationStructure& ts) {
    const int m = static_cast<int>(ts.arrows.size());
    ts.g.assign(m, -1);
    for (int a = 0; a < m; ++a) ts.g[a] = ts.bar[ts.f[a]];
    ts.orbits.clear();
    ts.orbit_of.assign(m, -1);
    std::vector<int> lengths;
    for (int a = 0; a < m; ++a) {
        if (ts.orbit_of[a] >= 0) continue;
        std::vector<int> orb;
        for (int x = a; ts.orbit_of[x] < 0; x = ts.g[x]) {
            ts.orbit_of[x] = static_cast<int>(ts.orbits.size());
            orb.push_back(x);
        }
        lengths.push_back(static_cast<int>(orb.size()));
        ts.orbits.push_back(std::move(orb));
    }
    return lengths;
}

std::vector<int> orbit_weights_from_arrows(const TriangulationStructure& ts, const std::vector<int>& arrow_weights) {
    if (arrow_weights.size() != ts.arrows.size())
        throw Error(ErrorKind::WeightNotOrbitConstant, "expected one weight per arrow");
    std::vector<int> w;
    for (const auto& orb : ts.orbits) {
        for (int a : orb)
            if (arrow_weights[a] != arrow_weights[orb.front()])
                throw Error(ErrorKind::WeightNotOrbitConstant,
                            "weights differ along the g-orbit of arrow " + std::to_string(orb.front()));
        w.push_back(arrow_weights[orb.front()]);
    }
    return w;
}

std::vector<int> virtual_arrows(const TriangulationStructure& ts, const std::vector<int>& orbit_weights) {
    if (orbit_weights.size() != ts.orbits.size())
        throw Error(ErrorKind::WeightNotOrbitConstant,
                    "expected one weight per g-orbit (" + std::to_string(ts.orbits.size()) + ")");
    std::vector<int> out;
    for (size_t o = 0; o < ts.orbits.size(); ++o) {
        const int m = orbit_weights[o], len = static_cast<int>(ts.orbits[o].size());
        if (m < 1 || m * len < 2)
            throw Error(ErrorKind::WeightTooSmall, "orbit " + std::to_string(o) + " has m*n = " +
                                                       std::to_string(m * len));
    }
    for (int a = 0; a < static_cast<int>(ts.arrows.size()); ++a) {
        int o = ts.orbit_of[a];
        if (orbit_weights[o] * static_cast<int>(ts.orbits[o].size()) == 2) out.push_back(a);
    }
    return out;
}

Quiver gabriel_quiver_of(const TriangulationStructure& ts, const std::vector<int>& orbit_weights) {
    Quiver g = ts.quiver;
    for (int a : virtual_arrows(ts, orbit_weights)) g.at(ts.arrows[a].s, ts.arrows[a].t)--;
    return g;
}

std::optional<BlockDecomposition> recognize_gwsa_gabriel(const Quiver& q) {
    return decompose_into_blocks(q, gwsa_gabriel_blocks());
}

}  // namespace pq
