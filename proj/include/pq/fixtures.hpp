#pragma once

#include <string>
#include <vector>

#include "pq/quiver.hpp"
#include "pq/shadow.hpp"

namespace pq {

struct NamedQuiver {
    std::string name;
    Quiver quiver;
    std::string family;  // only set for n = 3
};

struct NamedShadow {
    std::string name;
    Shadow shadow;
};

// Transcribed classification lists, n in {3, 4, 5}.
const std::vector<NamedQuiver>& golden_quivers(int n);

// Transcribed shadow figures. n = 3, 4 have both modes, n = 5 only the essential list.
std::vector<NamedShadow> figure_shadows(int n, ShadowMode mode);

// The ten n = 5 essential shadows that carry a Gabriel quiver.
std::vector<NamedShadow> surviving_shadow_figures();

// "MARKOV3", "TRI3", "Q17", "Q13"
Quiver named_fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace pq
