#include "pq/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pq {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::NegativeEntry: return "NegativeEntry";
        case ErrorKind::TameBoundViolated: return "TameBoundViolated";
        case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NotComposable: return "NotComposable";
        case ErrorKind::NotSkewSymmetric: return "NotSkewSymmetric";
        case ErrorKind::UnsupportedSize: return "UnsupportedSize";
        case ErrorKind::NotEssential: return "NotEssential";
        case ErrorKind::NoMatchingPattern: return "NoMatchingPattern";
        case ErrorKind::LoopAtPivot: return "LoopAtPivot";
        case ErrorKind::DanglingOutlet: return "DanglingOutlet";
        case ErrorKind::OverGlued: return "OverGlued";
        case ErrorKind::DuplicateBullet: return "DuplicateBullet";
        case ErrorKind::UnknownBlock: return "UnknownBlock";
        case ErrorKind::WeightNotOrbitConstant: return "WeightNotOrbitConstant";
        case ErrorKind::WeightTooSmall: return "WeightTooSmall";
    }
    return "?";
}

int Quiver::arrow_count() const {
    return std::accumulate(m_.begin(), m_.end(), 0);
}

Matrix Quiver::matrix() const {
    Matrix r(n_, std::vector<int>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
    return r;
}

void check_tame(const Quiver& q) {
    for (int i = 0; i < q.n(); ++i)
        for (int j = 0; j < q.n(); ++j) {
            int bound = i == j ? 1 : 2;
            if (q(i, j) > bound)
                throw Error(ErrorKind::TameBoundViolated,
                            "tame bound violated at (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + "): " + std::to_string(q(i, j)));
        }
}

Quiver validate_quiver(const Matrix& raw, bool tame_mode) {
    const int n = static_cast<int>(raw.size());
    if (n == 0) throw Error(ErrorKind::NonSquare, "empty matrix");
    Quiver q(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(raw[i].size()) != n)
            throw Error(ErrorKind::NonSquare, "row " + std::to_string(i + 1) + " has wrong length");
        for (int j = 0; j < n; ++j) {
            if (raw[i][j] < 0)
                throw Error(ErrorKind::NegativeEntry,
                            "negative multiplicity at (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")");
            q.at(i, j) = raw[i][j];
        }
    }
    if (tame_mode) check_tame(q);
    return q;
}

VertexDegree degrees(const Quiver& q, int i) {
    if (i < 0 || i >= q.n())
        throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(i + 1));
    VertexDegree d;
    for (int j = 0; j < q.n(); ++j) {
        d.indeg += q(j, i);
        d.outdeg += q(i, j);
    }
    return d;
}

RegularityClass regularity(const VertexDegree& d) {
    if (d.indeg == d.outdeg) return {RegularityClass::Regular, d.indeg, d.outdeg};
    return {RegularityClass::PQVertex, d.indeg, d.outdeg};
}

bool is_pq(const Quiver& q, int i, int p, int r) {
    auto d = degrees(q, i);
    return d.indeg == p && d.outdeg == r;
}

bool is_isolated(const Quiver& q, int i) { return is_pq(q, i, 0, 0); }

bool on_double_arrow(const Quiver& q, int i) {
    for (int j = 0; j < q.n(); ++j)
        if (j != i && (q(i, j) >= 2 || q(j, i) >= 2)) return true;
    return false;
}

bool is_connected(const Quiver& q) {
    const int n = q.n();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w)
            if (!seen[w] && (q(v, w) || q(w, v))) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

bool is_biserial(const Quiver& q) {
    for (int i = 0; i < q.n(); ++i) {
        auto d = degrees(q, i);
        if (d.indeg > 2 || d.outdeg > 2) return false;
    }
    return true;
}

bool is_biregular(const Quiver& q) {
    for (int i = 0; i < q.n(); ++i) {
        auto d = degrees(q, i);
        if (d.indeg != d.outdeg || d.indeg < 1 || d.indeg > 2) return false;
    }
    return true;
}

bool is_two_regular(const Quiver& q) {
    for (int i = 0; i < q.n(); ++i)
        if (!is_pq(q, i, 2, 2)) return false;
    return true;
}

std::vector<int> successors(const Quiver& q, int i) {
    std::vector<int> r;
    for (int j = 0; j < q.n(); ++j)
        if (j != i && q(i, j)) r.push_back(j);
    return r;
}

std::vector<int> predecessors(const Quiver& q, int i) {
    std::vector<int> r;
    for (int j = 0; j < q.n(); ++j)
        if (j != i && q(j, i)) r.push_back(j);
    return r;
}

Quiver reduced_quiver(const Quiver& q) {
    Quiver r(q.n());
    for (int i = 0; i < q.n(); ++i)
        for (int j = 0; j < q.n(); ++j)
            if (i != j) r.at(i, j) = std::max(q(i, j) - q(j, i), 0);
    return r;
}

Quiver loop_free(const Quiver& q) {
    Quiver r = q;
    for (int i = 0; i < q.n(); ++i) r.at(i, i) = 0;
    return r;
}

Quiver opposite(const Quiver& q) {
    Quiver r(q.n());
    for (int i = 0; i < q.n(); ++i)
        for (int j = 0; j < q.n(); ++j) r.at(j, i) = q(i, j);
    return r;
}

Quiver relabel(const Quiver& q, const std::vector<int>& perm) {
    Quiver r(q.n());
    for (int i = 0; i < q.n(); ++i)
        for (int j = 0; j < q.n(); ++j) r.at(perm[i], perm[j]) = q(i, j);
    return r;
}

CanonicalForm canonical_form(const Quiver& q) {
    const int n = q.n();
    if (n > kMaxCanonicalN)
        throw Error(ErrorKind::TooLarge, "canonical_form needs n <= 8, got " + std::to_string(n));
    // p[a] = original vertex placed at position a
    std::vector<int> p(n), best(n);
    std::iota(p.begin(), p.end(), 0);
    best = p;
    std::vector<int> bestm = q.flat();
    do {
        int cmp = 0;
        for (int a = 0; a < n && cmp == 0; ++a)
            for (int b = 0; b < n; ++b) {
                int v = q(p[a], p[b]), w = bestm[static_cast<size_t>(a) * n + b];
                if (v != w) {
                    cmp = v < w ? -1 : 1;
                    break;
                }
            }
        if (cmp < 0) {
            best = p;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) bestm[static_cast<size_t>(a) * n + b] = q(p[a], p[b]);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<int> perm(n);
    for (int a = 0; a < n; ++a) perm[best[a]] = a;
    return {relabel(q, perm), perm};
}

bool is_isomorphic(const Quiver& a, const Quiver& b) {
    if (a.n() != b.n() || a.arrow_count() != b.arrow_count()) return false;
    return canonical_form(a).quiver == canonical_form(b).quiver;
}

Quiver canonical_up_to_opposite(const Quiver& q) {
    Quiver x = canonical_form(q).quiver;
    Quiver y = canonical_form(opposite(q)).quiver;
    return y < x ? y : x;
}

}  // namespace pq
