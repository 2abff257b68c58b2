#include "pq/io.hpp"

#include <sstream>

namespace pq {

json quiver_to_json(const Quiver& q) {
    json arrows = json::array();
    for (int i = 0; i < q.n(); ++i)
        for (int j = 0; j < q.n(); ++j)
            if (q(i, j) > 0) arrows.push_back({i + 1, j + 1, q(i, j)});
    return {{"n", q.n()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& j, bool tame_mode) {
    if (!j.is_object() || !j.contains("n") || !j.contains("arrows"))
        throw Error(ErrorKind::ParseError, "quiver JSON needs keys \"n\" and \"arrows\"");
    if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
        throw Error(ErrorKind::ParseError, "\"n\" must be a positive integer");
    const int n = j["n"].get<int>();
    Matrix m(n, std::vector<int>(n, 0));
    int idx = 0;
    for (const auto& a : j["arrows"]) {
        if (!a.is_array() || a.size() != 3)
            throw Error(ErrorKind::ParseError, "arrows[" + std::to_string(idx) + "] is not a triple");
        for (const auto& x : a)
            if (!x.is_number_integer())
                throw Error(ErrorKind::ParseError, "arrows[" + std::to_string(idx) + "] has a non-integer");
        int s = a[0].get<int>(), t = a[1].get<int>(), k = a[2].get<int>();
        if (s < 1 || s > n || t < 1 || t > n)
            throw Error(ErrorKind::VertexOutOfRange, "arrows[" + std::to_string(idx) + "] vertex out of range");
        if (k < 1) throw Error(ErrorKind::ParseError, "arrows[" + std::to_string(idx) + "] multiplicity < 1");
        m[s - 1][t - 1] += k;
        ++idx;
    }
    return validate_quiver(m, tame_mode);
}

std::string serialize_json(const Quiver& q) { return quiver_to_json(q).dump(); }

Quiver deserialize_json(const std::string& text, bool tame_mode) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("byte ") + std::to_string(e.byte) + ": " + e.what());
    }
    return quiver_from_json(j, tame_mode);
}

std::string to_dot(const Quiver& q, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (int i = 0; i < q.n(); ++i) os << "  " << i + 1 << " [label=\"" << i + 1 << "\"];\n";
    for (int i = 0; i < q.n(); ++i)
        for (int j = 0; j < q.n(); ++j)
            for (int c = 0; c < q(i, j); ++c) os << "  " << i + 1 << " -> " << j + 1 << ";\n";
    os << "}\n";
    return os.str();
}

json shadow_to_json(const Shadow& a) {
    json rows = json::array();
    for (int i = 0; i < a.n(); ++i) {
        json r = json::array();
        for (int j = 0; j < a.n(); ++j) r.push_back(a(i, j));
        rows.push_back(r);
    }
    return {{"n", a.n()}, {"rows", rows}};
}

Shadow shadow_from_json(const json& j) {
    if (j.is_object() && !j.contains("rows") && j.contains("arrows")) {
        // the shadow quiver: loop-free and 2-acyclic
        Quiver q = quiver_from_json(j);
        if (!(reduced_quiver(q) == q)) throw Error(ErrorKind::ParseError, "arrow-form shadow has loops or 2-cycles");
        return shadow_of(q);
    }
    if (!j.is_object() || !j.contains("rows"))
        throw Error(ErrorKind::ParseError, "shadow JSON needs key \"rows\" or \"arrows\"");
    Matrix m;
    try {
        m = j["rows"].get<Matrix>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (j.contains("n") && j["n"].get<int>() != static_cast<int>(m.size()))
        throw Error(ErrorKind::ParseError, "\"n\" disagrees with row count");
    return Shadow::from_matrix(m);
}

}  // namespace pq
