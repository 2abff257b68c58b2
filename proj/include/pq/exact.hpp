#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <vector>

namespace pq {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;
using RatMatrix = std::vector<std::vector<Rational>>;

struct LpResult {
    bool feasible = false;
    std::vector<Rational> x;       // a vertex solution when feasible
    std::vector<Rational> farkas;  // y with y^T A <= 0 and y^T b > 0 when infeasible
};

// Decide {x >= 0 : A x = b} by phase-one simplex with Bland's rule.
LpResult lp_feasible(const RatMatrix& a, const std::vector<Rational>& b);

int rank(RatMatrix m);
bool in_row_space(const RatMatrix& rows, const std::vector<Rational>& v);

BigInt bareiss_determinant(const std::vector<std::vector<BigInt>>& m);

}  // namespace pq
