#include "pq/shadow.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "pq/exact.hpp"

namespace pq {

Shadow Shadow::from_matrix(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    Shadow a(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n) throw Error(ErrorKind::NonSquare, "shadow is not square");
        for (int j = 0; j < n; ++j) {
            if (m[i][j] != -m[j][i] || (i == j && m[i][i] != 0))
                throw Error(ErrorKind::NotSkewSymmetric,
                            "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            a.a_[static_cast<size_t>(i) * n + j] = m[i][j];
        }
    }
    return a;
}

Matrix Shadow::matrix() const {
    Matrix r(n_, std::vector<int>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
    return r;
}

bool Shadow::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](int x) { return x == 0; });
}

Shadow Shadow::negated() const {
    Shadow r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

Shadow shadow_of(const Quiver& q) {
    Shadow a(q.n());
    for (int i = 0; i < q.n(); ++i)
        for (int j = i + 1; j < q.n(); ++j) a.set(i, j, q(i, j) - q(j, i));
    return a;
}

Quiver quiver_of_shadow(const Shadow& a) {
    Quiver q(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
            if (a(i, j) > 0) q.at(i, j) = a(i, j);
    return q;
}

Shadow markov_shadow() {
    return Shadow::from_matrix({{0, -2, 2}, {2, 0, -2}, {-2, 2, 0}});
}

Shadow relabel(const Shadow& a, const std::vector<int>& perm) {
    Shadow r(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = i + 1; j < a.n(); ++j) r.set(perm[i], perm[j], a(i, j));
    return r;
}

bool det_is_zero(const Shadow& a) {
    const int n = a.n();
    if (n == 0) return false;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = a(i, j);
    return bareiss_determinant(m) == 0;
}

Shadow canonical_shadow(const Shadow& a) {
    const int n = a.n();
    if (n > kMaxCanonicalN)
        throw Error(ErrorKind::TooLarge, "canonical_shadow needs n <= 8, got " + std::to_string(n));
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<int> best = a.flat();
    do {
        for (int s : {1, -1}) {
            int cmp = 0;
            for (int x = 0; x < n && cmp == 0; ++x)
                for (int y = 0; y < n; ++y) {
                    int v = s * a(p[x], p[y]), w = best[static_cast<size_t>(x) * n + y];
                    if (v != w) {
                        cmp = v < w ? -1 : 1;
                        break;
                    }
                }
            if (cmp < 0)
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y) best[static_cast<size_t>(x) * n + y] = s * a(p[x], p[y]);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    Shadow r(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r.set(i, j, best[static_cast<size_t>(i) * n + j]);
    return r;
}

ShadowReport sign_conditions(const Shadow& a) {
    const int n = a.n();
    ShadowReport rep;
    for (int i = 0; i < n && rep.ps2.pass; ++i) {
        int pos = 0, neg = 0;
        for (int j = 0; j < n; ++j) {
            pos += a(i, j) > 0;
            neg += a(i, j) < 0;
        }
        if (pos + neg > 0 && (pos == 0 || neg == 0)) rep.ps2 = {false, {i}, "row has entries of one sign only"};
    }
    for (int i = 0; i < n && rep.t1.pass; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(a(i, j)) > 2) {
                rep.t1 = {false, {i, j}, "entry exceeds 2 in absolute value"};
                break;
            }
    for (int i = 0; i < n && rep.t2.pass; ++i)
        for (int j = 0; j < n && rep.t2.pass; ++j) {
            if (std::abs(a(i, j)) != 2) continue;
            int s = a(i, j) > 0 ? 1 : -1;
            for (int k = 0; k < n; ++k)
                if (k != j && s * a(i, k) > 0) {
                    rep.t2 = {false, {i, j, k}, "double entry shares its sign with another entry"};
                    break;
                }
        }
    for (int i = 0; i < n && rep.t3.pass; ++i) {
        int pos = 0, neg = 0;
        for (int j = 0; j < n; ++j) {
            pos += a(i, j) > 0;
            neg += a(i, j) < 0;
        }
        if (pos > 4 || neg > 4) rep.t3 = {false, {i}, "more than four entries of one sign"};
    }
    for (int i = 0; i < n && rep.ps4.pass; ++i) {
        bool p2 = false, m2 = false;
        for (int j = 0; j < n; ++j) {
            p2 |= a(i, j) == 2;
            m2 |= a(i, j) == -2;
        }
        if (p2 && m2) rep.ps4 = {false, {i}, "row contains both 2 and -2"};
    }
    for (int i = 0; i < n && rep.ps5.pass; ++i)
        for (int j = 0; j < n && rep.ps5.pass; ++j)
            for (int k = 0; k < n; ++k) {
                if (a(i, j) == 2 && a(j, k) == 1 && !(a(k, i) > 0)) {
                    rep.ps5 = {false, {i, j, k}, "a_ij = 2, a_jk = 1 but a_ki <= 0"};
                    break;
                }
                if (a(i, j) == -2 && a(j, k) == -1 && !(a(k, i) < 0)) {
                    rep.ps5 = {false, {i, j, k}, "a_ij = -2, a_jk = -1 but a_ki >= 0"};
                    break;
                }
            }
    rep.markov_exception = n == 3 && canonical_shadow(a) == canonical_shadow(markov_shadow());
    return rep;
}

namespace {

long long to_ll(const BigInt& z) { return z.convert_to<long long>(); }

}  // namespace

std::optional<CartanWitness> ps3_feasible(const Shadow& a) {
    const int n = a.n();
    // variable index of c_ij = c_ji
    std::vector<int> var(static_cast<size_t>(n) * n);
    int nv = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) var[i * n + j] = var[j * n + i] = nv++;
    const int cols = nv + n;  // plus one surplus per column-sum constraint
    RatMatrix m;
    std::vector<Rational> rhs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Rational> row(cols, Rational(0));
            bool any = false;
            for (int k = 0; k < n; ++k)
                if (a(i, k)) {
                    row[var[k * n + j]] += a(i, k);
                    any = true;
                }
            if (!any) continue;
            m.push_back(std::move(row));
            rhs.emplace_back(0);
        }
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> row(cols, Rational(0));
        for (int i = 0; i < n; ++i) row[var[i * n + j]] += 1;
        row[nv + j] = -1;
        m.push_back(std::move(row));
        rhs.emplace_back(1);
    }
    LpResult r = lp_feasible(m, rhs);
    if (!r.feasible) return std::nullopt;
    BigInt l = 1;
    for (int v = 0; v < nv; ++v) l = boost::multiprecision::lcm(l, BigInt(denominator(r.x[v])));
    CartanWitness w;
    w.c.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& x = r.x[var[i * n + j]];
            w.c[i][j] = to_ll(numerator(x) * (l / denominator(x)));
        }
    return w;
}

bool verify_cartan(const Shadow& a, const CartanWitness& w) {
    const int n = a.n();
    if (static_cast<int>(w.c.size()) != n) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (w.c[i][j] < 0 || w.c[i][j] != w.c[j][i]) return false;
    for (int j = 0; j < n; ++j) {
        bool nz = false;
        for (int i = 0; i < n; ++i) nz |= w.c[i][j] != 0;
        if (!nz) return false;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            BigInt s = 0;
            for (int k = 0; k < n; ++k) s += BigInt(a(i, k)) * w.c[k][j];
            if (s != 0) return false;
        }
    return true;
}

ShadowReport is_tame_shadow(const Shadow& a) {
    ShadowReport rep = sign_conditions(a);
    rep.ps1.pass = det_is_zero(a);
    if (!rep.ps1.pass) rep.ps1.note = "determinant is nonzero";
    rep.cartan = ps3_feasible(a);
    rep.ps3.pass = rep.cartan.has_value();
    if (!rep.ps3.pass) rep.ps3.note = "no symmetric nonnegative C with nonzero columns and AC = 0";
    return rep;
}

ShadowReport is_essential(const Shadow& a) { return is_tame_shadow(a); }

}  // namespace pq
