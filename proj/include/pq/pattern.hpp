#pragma once

#include <string>
#include <vector>

#include "pq/quiver.hpp"

namespace pq {

struct VertexConstraint {
    enum Kind { None, ExactDegree, MinDegree, Closed };
    Kind kind = None;
    int indeg = 0;
    int outdeg = 0;
};

struct PatternArrow {
    int s;
    int t;
    int mult = 1;
    bool exact = false;  // require mult(Q) == mult instead of >=
};

// Template quiver on k <= 8 vertices. A Closed vertex is a bullet of a block:
// every arrow of Q touching it must come from the template.
struct PatternSpec {
    std::string name;
    int k = 0;
    std::vector<PatternArrow> arrows;
    std::vector<VertexConstraint> constraints;  // empty or size k
};

using Match = std::vector<int>;  // template vertex -> Q vertex

std::vector<Match> find_pattern(const Quiver& q, const PatternSpec& p);

PatternSpec k2_plus_spec();
PatternSpec k2_minus_spec();

}  // namespace pq
