#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pq/json_type.hpp"
#include "pq/pattern.hpp"
#include "pq/quiver.hpp"

namespace pq {

enum class BlockType { I, II, III, IV, V, V1, V2, V3, V4 };

const char* to_string(BlockType t);
BlockType block_type_from_string(const std::string& s);

struct BlockTemplate {
    BlockType type;
    int k;
    std::string roles;  // 'o' outlet, 'b' bullet; one per template vertex
    std::vector<std::pair<int, int>> arrows;
    std::vector<std::string> names;
};

const BlockTemplate& block_template(BlockType t);
// bullets become Closed constraints
PatternSpec block_pattern(BlockType t);
const std::vector<BlockType>& triangulation_blocks();  // I, II, III
const std::vector<BlockType>& wsa_gabriel_blocks();    // I, II, III, V1, V2
const std::vector<BlockType>& gwsa_gabriel_blocks();   // all nine

struct Arrow {
    int s;
    int t;
    int copy;  // index among parallel arrows s -> t
    bool operator==(const Arrow& o) const { return s == o.s && t == o.t && copy == o.copy; }
};

// Arrow copies in (s, t, copy) order; arrow ids index into this list.
std::vector<Arrow> arrow_list(const Quiver& q);

struct BlockInstance {
    BlockType type;
    std::vector<int> vertices;  // template vertex -> global vertex
    std::vector<int> arrows;    // template arrow -> global arrow id
    bool outlet(int a) const;
};

struct BlockDecomposition {
    std::vector<Arrow> arrows;
    std::vector<BlockInstance> blocks;
    // per vertex: block ids containing it (one entry for a bullet, two for a glued outlet)
    std::vector<std::vector<int>> glueing;
};

std::optional<BlockDecomposition> decompose_into_blocks(const Quiver& q, const std::vector<BlockType>& allowed);
std::vector<BlockDecomposition> all_decompositions(const Quiver& q, const std::vector<BlockType>& allowed,
                                                   size_t limit = 1000);
bool check_decomposition(const Quiver& q, const BlockDecomposition& d);

struct BlockSpecEntry {
    BlockType type;
    std::vector<std::string> labels;  // one per template vertex
};

struct GluedQuiver {
    Quiver quiver;
    BlockDecomposition decomposition;
    std::vector<std::string> vertex_labels;
};

GluedQuiver glue_blocks(const std::vector<BlockSpecEntry>& spec);
std::vector<BlockSpecEntry> block_spec_from_json(const json& j);
json decomposition_to_json(const BlockDecomposition& d);

struct TriangulationStructure {
    Quiver quiver;
    std::vector<Arrow> arrows;
    std::vector<int> f;
    std::vector<int> bar;
    std::vector<int> g;                    // filled by g_orbits
    std::vector<std::vector<int>> orbits;  // g-orbits, each starting at its least arrow id
    std::vector<int> orbit_of;
    BlockDecomposition decomposition;
};

std::optional<TriangulationStructure> triangulation_structure(const Quiver& q);
// computes g = bar o f and its orbits in place; returns the orbit lengths
std::vector<int> g_orbits(TriangulationStructure& ts);
// per-arrow weights collapsed to one weight per g-orbit
std::vector<int> orbit_weights_from_arrows(const TriangulationStructure& ts, const std::vector<int>& arrow_weights);
std::vector<int> virtual_arrows(const TriangulationStructure& ts, const std::vector<int>& orbit_weights);
Quiver gabriel_quiver_of(const TriangulationStructure& ts, const std::vector<int>& orbit_weights);

std::optional<BlockDecomposition> recognize_gwsa_gabriel(const Quiver& q);

enum class RewriteKind { IVtoV2, V2toIV, VtoV3, V3toV };
const char* to_string(RewriteKind k);

struct RewriteMatch {
    RewriteKind kind;
    std::vector<int> roles;  // pivot-relative vertices, see mutate.cpp
};

std::vector<RewriteMatch> rewrite_matches(const Quiver& q, int v);
Quiver mutate_block(const Quiver& q, int v);

}  // namespace pq
