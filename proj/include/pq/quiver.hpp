#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pq {

enum class ErrorKind {
    NonSquare,
    NegativeEntry,
    TameBoundViolated,
    VertexOutOfRange,
    TooLarge,
    ParseError,
    NotComposable,
    NotSkewSymmetric,
    UnsupportedSize,
    NotEssential,
    NoMatchingPattern,
    LoopAtPivot,
    DanglingOutlet,
    OverGlued,
    DuplicateBullet,
    UnknownBlock,
    WeightNotOrbitConstant,
    WeightTooSmall,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

using Matrix = std::vector<std::vector<int>>;

// Vertices are 0-based in the C++ API. JSON and the CLI use 1-based labels.
class Quiver {
public:
    Quiver() = default;
    explicit Quiver(int n) : n_(n), m_(static_cast<size_t>(n) * n, 0) {}

    int n() const { return n_; }
    int operator()(int i, int j) const { return m_[static_cast<size_t>(i) * n_ + j]; }
    int& at(int i, int j) { return m_[static_cast<size_t>(i) * n_ + j]; }
    int mult(int i, int j) const { return (*this)(i, j); }
    bool has_loop(int i) const { return (*this)(i, i) > 0; }

    int arrow_count() const;
    Matrix matrix() const;
    const std::vector<int>& flat() const { return m_; }

    bool operator==(const Quiver& o) const { return n_ == o.n_ && m_ == o.m_; }
    bool operator!=(const Quiver& o) const { return !(*this == o); }
    bool operator<(const Quiver& o) const {
        return n_ != o.n_ ? n_ < o.n_ : m_ < o.m_;
    }

private:
    int n_ = 0;
    std::vector<int> m_;
};

Quiver validate_quiver(const Matrix& raw, bool tame_mode = true);
void check_tame(const Quiver& q);

struct VertexDegree {
    int indeg = 0;
    int outdeg = 0;
    bool operator==(const VertexDegree& o) const {
        return indeg == o.indeg && outdeg == o.outdeg;
    }
};

VertexDegree degrees(const Quiver& q, int i);

struct RegularityClass {
    enum Tag { PQVertex, Regular };
    Tag tag;
    int p;
    int q;
    bool is_regular() const { return tag == Regular; }
    bool non_regular() const { return p != q; }
};

RegularityClass regularity(const VertexDegree& d);

// convenience predicates used all over the pipeline
bool is_pq(const Quiver& q, int i, int p, int r);
bool is_isolated(const Quiver& q, int i);
bool on_double_arrow(const Quiver& q, int i);
bool is_connected(const Quiver& q);
bool is_biserial(const Quiver& q);
bool is_biregular(const Quiver& q);
bool is_two_regular(const Quiver& q);
std::vector<int> successors(const Quiver& q, int i);    // excludes i itself
std::vector<int> predecessors(const Quiver& q, int i);  // excludes i itself

Quiver reduced_quiver(const Quiver& q);
Quiver loop_free(const Quiver& q);
Quiver opposite(const Quiver& q);
Quiver relabel(const Quiver& q, const std::vector<int>& perm);  // vertex i becomes perm[i]

struct CanonicalForm {
    Quiver quiver;
    std::vector<int> perm;  // quiver == relabel(input, perm)
};

inline constexpr int kMaxCanonicalN = 8;

CanonicalForm canonical_form(const Quiver& q);
bool is_isomorphic(const Quiver& a, const Quiver& b);
// min of the canonical forms of q and opposite(q)
Quiver canonical_up_to_opposite(const Quiver& q);

}  // namespace pq
