#include "pq/fixtures.hpp"

#include <map>

#include "pq/io.hpp"
#include "pq_fixture_data.hpp"

namespace pq {

namespace {

std::vector<NamedQuiver> load_golden(const char* text) {
    json j = json::parse(text);
    std::vector<NamedQuiver> out;
    for (const auto& e : j["quivers"])
        out.push_back({e["name"].get<std::string>(), quiver_from_json(e), e.value("family", std::string())});
    return out;
}

const json& shadow_doc(int n) {
    static const json d3 = json::parse(data::kShadowsN3);
    static const json d4 = json::parse(data::kShadowsN4);
    static const json d5 = json::parse(data::kShadowsN5);
    switch (n) {
        case 3: return d3;
        case 4: return d4;
        case 5: return d5;
    }
    throw Error(ErrorKind::UnsupportedSize, "no shadow figures for n = " + std::to_string(n));
}

std::vector<NamedShadow> pick(const json& list, const json& names) {
    std::vector<NamedShadow> out;
    for (const auto& e : list) {
        std::string nm = e["name"].get<std::string>();
        bool keep = names.is_null();
        for (const auto& x : names)
            if (x.get<std::string>() == nm) keep = true;
        if (keep) out.push_back({nm, shadow_of(quiver_from_json(e, false))});
    }
    return out;
}

}  // namespace

const std::vector<NamedQuiver>& golden_quivers(int n) {
    static const std::vector<NamedQuiver> g3 = load_golden(data::kGoldenN3);
    static const std::vector<NamedQuiver> g4 = load_golden(data::kGoldenN4);
    static const std::vector<NamedQuiver> g5 = load_golden(data::kGoldenN5);
    switch (n) {
        case 3: return g3;
        case 4: return g4;
        case 5: return g5;
    }
    throw Error(ErrorKind::UnsupportedSize, "no golden list for n = " + std::to_string(n));
}

std::vector<NamedShadow> figure_shadows(int n, ShadowMode mode) {
    const json& d = shadow_doc(n);
    if (n == 5) {
        if (mode == ShadowMode::BasicTame)
            throw Error(ErrorKind::UnsupportedSize, "only the essential n = 5 figures are transcribed");
        return pick(d["essential"], json());
    }
    return pick(d["basic"], mode == ShadowMode::Essential ? d["essential"] : json());
}

std::vector<NamedShadow> surviving_shadow_figures() {
    const json& d = shadow_doc(5);
    return pick(d["essential"], d["with_survivors"]);
}

Quiver named_fixture(const std::string& name) {
    static const std::map<std::string, const char*> table = {
        {"MARKOV3", data::kMarkov}, {"TRI3", data::kTri3}, {"Q17", data::kQ17}, {"Q13", data::kQ13}};
    auto it = table.find(name);
    if (it == table.end()) throw Error(ErrorKind::ParseError, "unknown fixture '" + name + "'");
    return deserialize_json(it->second);
}

std::vector<std::string> fixture_names() { return {"MARKOV3", "TRI3", "Q17", "Q13"}; }

}  // namespace pq
