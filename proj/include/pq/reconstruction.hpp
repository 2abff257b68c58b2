#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pq/json_type.hpp"
#include "pq/quiver.hpp"
#include "pq/shadow.hpp"

namespace pq {

enum class ReconMode { Gqt, Tsp4 };

const char* to_string(ReconMode m);
ReconMode recon_mode_from_string(const std::string& s);

using VertexPair = std::pair<int, int>;  // i < j

struct CandidateQuiver {
    Quiver base;  // the shadow quiver
    std::vector<VertexPair> two_cycles;
    std::vector<int> loops;
    Quiver assembled;
};

Quiver assemble(const Quiver& base, const std::vector<VertexPair>& two_cycles, const std::vector<int>& loops);

struct ExclusionReport {
    bool excluded = false;
    std::string rule;  // empty when the candidate survives
    std::string citation;
    json witness;
    bool undecided = false;  // gqt survivor that tsp4 removes by table
};

// r_i = sum over arrows j->i of e_j minus sum over arrows i->j of e_j
std::vector<std::vector<int>> dimension_rows(const Quiver& q);
ExclusionReport dimension_exclusion(const Quiver& q);

std::vector<std::vector<VertexPair>> two_cycle_placements(const Quiver& qx);

// path as vertex sequence v0 -> v1 -> ... (2 or 3 arrows)
bool relation_free_certificate(const Quiver& q, const std::vector<int>& path);

std::vector<std::vector<int>> loop_placements(const Quiver& qo);

ExclusionReport structural_filters(const Quiver& q, ReconMode mode = ReconMode::Tsp4);

struct UnfoldingTree {
    std::vector<int> label;    // node -> Q vertex
    std::vector<int> parent;   // -1 for the root
    std::vector<bool> outward; // node v > 0: the arrow points from parent[v] to v
    std::vector<int> copy;     // which parallel arrow realizes the tree edge
    std::vector<std::vector<int>> certified;  // composable paths checked, as Q vertices

    int size() const { return static_cast<int>(label.size()); }
    std::vector<std::vector<int>> adjacency() const;
};

inline constexpr int kDefaultWildCap = 9;

// true iff the tree is neither Dynkin nor extended Dynkin
bool tree_is_wild(const std::vector<std::vector<int>>& adj);
std::optional<UnfoldingTree> wild_unfolding_filter(const Quiver& q, int cap = kDefaultWildCap);
json tree_to_json(const UnfoldingTree& t);

struct CaseTableEntry {
    std::string id;
    Quiver pattern;  // matched up to isomorphism or opposite
    std::string citation;
};

const std::vector<CaseTableEntry>& case_table();

struct ReconstructOptions {
    ReconMode mode = ReconMode::Tsp4;
    int wild_cap = kDefaultWildCap;
    int threads = 1;
};

struct CandidateResult {
    CandidateQuiver candidate;
    ExclusionReport report;
};

// every connected candidate with its report, in canonical-form order
std::vector<CandidateResult> reconstruct(const Shadow& a, const ReconstructOptions& opt = {});

struct ShadowOutcome {
    Shadow shadow;
    int candidates = 0;
    std::vector<Quiver> survivors;  // canonical up to opposite, sorted, unique
};

struct ClassifyResult {
    int n = 0;
    ReconMode mode = ReconMode::Tsp4;
    std::vector<ShadowOutcome> shadows;  // enumeration order
    std::vector<Quiver> survivors;       // canonical up to opposite, sorted, unique
    std::vector<Quiver> undecided;       // subset of survivors kept only in gqt mode
    struct Exclusion {
        Shadow shadow;
        Quiver candidate;
        ExclusionReport report;
    };
    std::vector<Exclusion> exclusions;
};

ClassifyResult classify(int n, ReconMode mode, int threads = 1, int wild_cap = kDefaultWildCap);
// survivors of a single candidate pipeline run, without placement
ExclusionReport evaluate_candidate(const Quiver& q, const ReconstructOptions& opt = {});
json classify_to_json(const ClassifyResult& r);

// up to isomorphism or opposite, and loops dropped
Quiver family_key(const Quiver& q);

struct VerifyReport {
    int n = 0;
    bool family_level = false;  // n = 3 compares loop-free shapes
    std::vector<Quiver> missing;
    std::vector<Quiver> extra;
    int generic_exclusions = 0;
    int table_exclusions = 0;
    bool ok() const { return missing.empty() && extra.empty(); }
};

VerifyReport verify_against_paper(const ClassifyResult& r);
VerifyReport verify_against_paper(int n, ReconMode mode = ReconMode::Tsp4, int threads = 1);
json verify_to_json(const VerifyReport& v);

struct MainTheoremReport {
    int n = 0;
    int checked = 0;
    std::vector<Quiver> failures;
    bool ok() const { return checked > 0 && failures.empty(); }
};

MainTheoremReport verify_main_theorem(int n, ReconMode mode = ReconMode::Tsp4, int threads = 1);
MainTheoremReport verify_main_theorem(const ClassifyResult& r);

}  // namespace pq
