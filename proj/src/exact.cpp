#include "pq/exact.hpp"

#include <utility>

namespace pq {

LpResult lp_feasible(const RatMatrix& a, const std::vector<Rational>& b) {
    const int m = static_cast<int>(a.size());
    const int nv = m ? static_cast<int>(a[0].size()) : 0;
    const int cols = nv + m;  // originals then artificials; rhs kept apart
    LpResult res;
    if (m == 0) {
        res.feasible = true;
        res.x.assign(nv, Rational(0));
        return res;
    }

    std::vector<int> sign(m, 1);
    RatMatrix t(m, std::vector<Rational>(cols + 1, Rational(0)));
    for (int i = 0; i < m; ++i) {
        if (b[i] < 0) sign[i] = -1;
        for (int j = 0; j < nv; ++j) t[i][j] = sign[i] > 0 ? a[i][j] : Rational(-a[i][j]);
        t[i][nv + i] = 1;
        t[i][cols] = sign[i] > 0 ? b[i] : Rational(-b[i]);
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = nv + i;

    // reduced costs for min sum(artificials)
    std::vector<Rational> r(cols + 1, Rational(0));
    for (int j = nv; j < cols; ++j) r[j] = 1;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= cols; ++j) r[j] -= t[i][j];

    for (;;) {
        int enter = -1;
        for (int j = 0; j < cols; ++j)
            if (r[j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][cols] / t[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) break;  // unbounded cannot happen: objective bounded below by 0
        Rational piv = t[leave][enter];
        for (int j = 0; j <= cols; ++j) t[leave][j] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational f = t[i][enter];
            for (int j = 0; j <= cols; ++j)
                if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
        }
        if (r[enter] != 0) {
            Rational f = r[enter];
            for (int j = 0; j <= cols; ++j)
                if (t[leave][j] != 0) r[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    // r[cols] holds -objective
    if (r[cols] < 0) {
        res.feasible = false;
        res.farkas.resize(m);
        for (int i = 0; i < m; ++i) {
            Rational y = Rational(1) - r[nv + i];
            res.farkas[i] = sign[i] > 0 ? y : Rational(-y);
        }
        return res;
    }
    res.feasible = true;
    res.x.assign(nv, Rational(0));
    for (int i = 0; i < m; ++i)
        if (basis[i] < nv) res.x[basis[i]] = t[i][cols];
    return res;
}

int rank(RatMatrix m) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    int rk = 0;
    for (int c = 0; c < cols && rk < rows; ++c) {
        int p = -1;
        for (int i = rk; i < rows; ++i)
            if (m[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[p], m[rk]);
        for (int i = rk + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[rk][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[rk][j];
        }
        ++rk;
    }
    return rk;
}

bool in_row_space(const RatMatrix& rows, const std::vector<Rational>& v) {
    RatMatrix ext = rows;
    int base = rank(rows);
    ext.push_back(v);
    return rank(std::move(ext)) == base;
}

BigInt bareiss_determinant(const std::vector<std::vector<BigInt>>& in) {
    const int n = static_cast<int>(in.size());
    if (n == 0) return 1;
    auto m = in;
    BigInt prev = 1;
    int sgn = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(m[p], m[k]);
            sgn = -sgn;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sgn * m[n - 1][n - 1];
}

}  // namespace pq
