#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pq/quiver.hpp"

namespace pq {

class Shadow {
public:
    Shadow() = default;
    explicit Shadow(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {}
    static Shadow from_matrix(const Matrix& m);  // throws NotSkewSymmetric

    int n() const { return n_; }
    int operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    // sets a_ij and a_ji together
    void set(int i, int j, int v) {
        a_[static_cast<size_t>(i) * n_ + j] = v;
        a_[static_cast<size_t>(j) * n_ + i] = -v;
    }
    const std::vector<int>& flat() const { return a_; }
    Matrix matrix() const;
    bool is_zero() const;
    Shadow negated() const;

    bool operator==(const Shadow& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator<(const Shadow& o) const { return n_ != o.n_ ? n_ < o.n_ : a_ < o.a_; }

private:
    int n_ = 0;
    std::vector<int> a_;
};

Shadow shadow_of(const Quiver& q);
Quiver quiver_of_shadow(const Shadow& a);
Shadow markov_shadow();

struct Verdict {
    bool pass = true;
    std::vector<int> witness;  // row index, or (i,j,k) triple, 0-based
    std::string note;
};

struct CartanWitness {
    std::vector<std::vector<long long>> c;  // symmetric, integer scaled
};

struct ShadowReport {
    Verdict ps1, ps2, ps3, t1, t2, t3, ps4, ps5;
    bool markov_exception = false;
    std::optional<CartanWitness> cartan;

    bool is_tame() const {
        return ps1.pass && ps2.pass && ps3.pass && t1.pass && t2.pass && t3.pass;
    }
    bool is_essential() const {
        return is_tame() && (ps4.pass || markov_exception) && ps5.pass;
    }
};

bool det_is_zero(const Shadow& a);
// fills ps2, t1, t2, t3, ps4 (raw), ps5 and markov_exception
ShadowReport sign_conditions(const Shadow& a);
std::optional<CartanWitness> ps3_feasible(const Shadow& a);
ShadowReport is_tame_shadow(const Shadow& a);
ShadowReport is_essential(const Shadow& a);

bool verify_cartan(const Shadow& a, const CartanWitness& w);

Shadow canonical_shadow(const Shadow& a);
Shadow relabel(const Shadow& a, const std::vector<int>& perm);

enum class ShadowMode { BasicTame, Essential };

struct EnumerationStats {
    long long nodes = 0;
    long long leaves = 0;
    long long lp_calls = 0;
};

inline constexpr int kMaxEnumerationN = 6;

std::vector<Shadow> enumerate_shadows(int n, ShadowMode mode, int threads = 1,
                                      EnumerationStats* stats = nullptr);

}  // namespace pq
