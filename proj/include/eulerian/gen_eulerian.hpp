#pragma once

#include "graded.hpp"
#include "series.hpp"

#include <mutex>
#include <vector>

namespace eulerian {

/// A_n(a, b) = q_n(a) (ln b)^n from
///   A_n = 1/(a-1) sum_{k<n} C(n,k) A_k (1-a)^{n-k} (ln b)^{n-k},  A_0 = 1.
///
/// The division by (a - 1) must be exact; a remainder throws
/// std::logic_error, since it would mean the family left the polynomials.
inline LGraded gen_eulerian(unsigned n) {
    static std::mutex mu;
    static std::vector<Poly> memo{Poly::one()};
    std::lock_guard lock(mu);
    const Poly one_minus_a{Rat(1), Rat(-1)};
    const Poly a_minus_1{Rat(-1), Rat(1)};
    while (memo.size() <= n) {
        const auto m = static_cast<unsigned>(memo.size());
        Poly acc;
        for (unsigned k = 0; k < m; ++k) acc += Rat(binomial(m, k)) * memo[k] * one_minus_a.pow(m - k);
        memo.push_back(divide_exact(acc, a_minus_1));
    }
    return {n, memo[n]};
}

/// Oracle route: n! [tau^n] of (1-a)/(e^{tau(1-a)} - a) over Q(a), for all
/// n <= n_max. Each coefficient must canonicalize to a polynomial.
inline std::vector<LGraded> gen_eulerian_oracle_table(unsigned n_max) {
    auto coeffs = gf_coefficients({GfKind::generalized}, n_max);
    std::vector<LGraded> out;
    out.reserve(coeffs.size());
    for (unsigned n = 0; n <= n_max; ++n) out.push_back({n, coeffs[n].as_polynomial()});
    return out;
}

inline LGraded gen_eulerian_oracle(unsigned n) { return gen_eulerian_oracle_table(n).back(); }

/// A_n(a0, b) for a rational a0: the coefficient is evaluated, the grade kept.
inline Graded<Rat> specialize(const LGraded& g, const Rat& a0) { return {g.grade, g.coeff.eval(a0)}; }

/// A_n(-1, b)
inline Graded<Rat> gen_eulerian_minus_one(unsigned n) { return specialize(gen_eulerian(n), Rat(-1)); }

/// A_n(a^2, b^2) = 2^n q_n(a^2) (ln b)^n, using ln(b^2) = 2 ln b.
inline LGraded gen_eulerian_squared(unsigned n) {
    LGraded g = gen_eulerian(n);
    return {n, g.coeff.compose_square() * Rat(ipow(BigInt(2), n))};
}

}  // namespace eulerian
