#pragma once

#include "ratfunc.hpp"
#include "series.hpp"

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulerian {

/// A(n, k) by the alternating binomial sum, with A(n, 0) = 1 and zero
/// outside 0 <= k <= n.
inline Rat eulerian_number(unsigned n, long k) {
    if (k < 0 || k > static_cast<long>(n)) return Rat(0);
    if (k == 0) return Rat(1);
    BigInt acc = 0;
    for (long j = 0; j <= k; ++j) {
        BigInt term = binomial(n + 1, static_cast<unsigned long>(j)) * ipow(BigInt(k - j), n);
        acc += (j % 2 == 0) ? term : BigInt(-term);
    }
    return Rat(acc);
}

struct EulerianTriangleRow {
    unsigned n;
    std::vector<Rat> entries;  // A(n, 0..n)
};

inline EulerianTriangleRow eulerian_row(unsigned n) {
    EulerianTriangleRow row{n, {}};
    for (unsigned k = 0; k <= n; ++k) row.entries.push_back(eulerian_number(n, k));
    return row;
}

/// Summation convention: sum_{l>=0} l^n x^l = A_n(x) / (1-x)^{n+1}.
inline Poly eulerian_poly_S(unsigned n) {
    if (n == 0) return Poly::one();
    std::vector<Rat> c(n + 1);
    for (unsigned k = 1; k <= n; ++k) c[k] = eulerian_number(n, k);
    return Poly(std::move(c));
}

/// Generating-function convention, built by the recurrence
/// A_n = 1/(x-1) * sum_{k<n} C(n,k) A_k (1-x)^{n-k}.
inline Poly eulerian_poly_G(unsigned n) {
    static std::mutex mu;
    static std::vector<Poly> memo{Poly::one()};
    std::lock_guard lock(mu);
    const Poly one_minus_x{Rat(1), Rat(-1)};
    const Poly x_minus_1{Rat(-1), Rat(1)};
    while (memo.size() <= n) {
        const auto m = static_cast<unsigned>(memo.size());
        Poly acc;
        for (unsigned k = 0; k < m; ++k) acc += Rat(binomial(m, k)) * memo[k] * one_minus_x.pow(m - k);
        memo.push_back(divide_exact(acc, x_minus_1));
    }
    return memo[n];
}

enum class Convention { S, G };

inline Poly eulerian_poly(unsigned n, Convention c) {
    return c == Convention::S ? eulerian_poly_S(n) : eulerian_poly_G(n);
}

/// alpha_n(x) = A_n(x) / (1-x)^{n+1}
inline RatFunc eulerian_fraction(unsigned n, Convention c) {
    const Poly one_minus_x{Rat(1), Rat(-1)};
    return RatFunc(eulerian_poly(n, c), one_minus_x.pow(n + 1));
}

enum class NamedNumberKind { bernoulli, euler, genocchi, stirling2 };

inline std::string to_string(NamedNumberKind k) {
    switch (k) {
        case NamedNumberKind::bernoulli: return "bernoulli";
        case NamedNumberKind::euler: return "euler";
        case NamedNumberKind::genocchi: return "genocchi";
        case NamedNumberKind::stirling2: return "stirling2";
    }
    return "?";
}

/// S(n, k) from S(n,k) = k S(n-1,k) + S(n-1,k-1), S(0,0) = 1.
inline BigInt stirling2(unsigned n, unsigned k) {
    static std::mutex mu;
    static std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
    std::lock_guard lock(mu);
    while (rows.size() <= n) {
        const auto& prev = rows.back();
        const std::size_t m = rows.size();
        std::vector<BigInt> row(m + 1, BigInt(0));
        for (std::size_t j = 1; j <= m; ++j) {
            BigInt keep = j < prev.size() ? BigInt(prev[j] * BigInt(static_cast<unsigned long>(j))) : BigInt(0);
            row[j] = keep + prev[j - 1];
        }
        rows.push_back(std::move(row));
    }
    return k <= n ? rows[n][k] : BigInt(0);
}

namespace detail {

/// Memoized series-oracle values for B_n, E_n, G_n; regrown in blocks.
inline Rat series_number(NamedNumberKind kind, unsigned n) {
    static std::mutex mu;
    static std::map<NamedNumberKind, std::vector<Rat>> memo;
    std::lock_guard lock(mu);
    auto& table = memo[kind];
    if (table.size() <= n) {
        GfKind gf = kind == NamedNumberKind::bernoulli ? GfKind::bernoulli
                  : kind == NamedNumberKind::euler     ? GfKind::euler
                                                       : GfKind::genocchi;
        const std::size_t order = std::max<std::size_t>(n + 8, 2 * table.size());
        table = gf_coefficients_at({gf}, order, Rat(0));
    }
    return table[n];
}

}  // namespace detail

/// B_n, E_n, G_n from their generating functions; S(n, k) from the
/// triangular recurrence. `k` is required for stirling2 and rejected
/// otherwise.
inline Rat named_number(NamedNumberKind kind, unsigned n, std::optional<unsigned> k = std::nullopt) {
    if (kind == NamedNumberKind::stirling2) {
        if (!k) throw std::invalid_argument("named_number: stirling2 requires k");
        return Rat(stirling2(n, *k));
    }
    if (k) throw std::invalid_argument("named_number: k is only meaningful for stirling2, not " + to_string(kind));
    return detail::series_number(kind, n);
}

inline Rat bernoulli_number(unsigned n) { return named_number(NamedNumberKind::bernoulli, n); }
inline Rat euler_number(unsigned n) { return named_number(NamedNumberKind::euler, n); }
inline Rat genocchi_number(unsigned n) { return named_number(NamedNumberKind::genocchi, n); }

/// C(n,k) x^k (1-x)^{n-k}
inline Poly bernstein_poly(unsigned k, unsigned n) {
    if (k > n) throw std::invalid_argument("bernstein_poly: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    const Poly one_minus_x{Rat(1), Rat(-1)};
    return Poly::monomial(Rat(binomial(n, k)), k) * one_minus_x.pow(n - k);
}

/// Li_{-n}(x) = sum_{k=0}^{n} k! S(n+1,k+1) (x/(1-x))^{k+1}
inline RatFunc polylog_neg(unsigned n) {
    const Poly one_minus_x{Rat(1), Rat(-1)};
    // Common denominator (1-x)^{n+1}: term k contributes x^{k+1} (1-x)^{n-k}.
    Poly num;
    for (unsigned k = 0; k <= n; ++k)
        num += Rat(BigInt(factorial(k) * stirling2(n + 1, k + 1))) * Poly::monomial(Rat(1), k + 1) * one_minus_x.pow(n - k);
    return RatFunc(num, one_minus_x.pow(n + 1));
}

struct PartialSum {
    Rat value;
    Rat tail_bound;
};

/// sum_{k=1}^{terms} z^k / k^s together with a bound on |tail|.
///
/// For s >= 0 the term ratio |z| (k/(k+1))^s stays below |z|, so the tail
/// is at most term/(1 - |z|). For s < 0 the ratio decreases toward |z|;
/// terms are added exactly until it drops below one, then closed with a
/// geometric term/(1 - r).
inline PartialSum polylog_partial(long s, const Rat& z, unsigned terms) {
    if (terms == 0) throw std::invalid_argument("polylog_partial: terms must be positive");
    const Rat az = z.abs();
    if (az >= Rat(1)) throw std::domain_error("polylog_partial: |z| = " + az.to_string() + " is not below 1");
    const auto e = static_cast<unsigned>(s >= 0 ? s : -s);
    auto term = [&](unsigned long k) {
        Rat kp = Rat(k).pow(e);
        return s >= 0 ? z.pow(static_cast<unsigned>(k)) / kp : z.pow(static_cast<unsigned>(k)) * kp;
    };
    PartialSum out{};
    if (z.is_zero()) return out;
    for (unsigned long k = 1; k <= terms; ++k) out.value += term(k);

    unsigned long k = terms + 1;
    if (s >= 0) {
        out.tail_bound = term(k).abs() / (Rat(1) - az);
        return out;
    }
    auto ratio = [&](unsigned long j) { return az * (Rat(j + 1) / Rat(j)).pow(e); };  // |term(j+1)/term(j)|
    Rat bound;
    while (ratio(k) >= Rat(1)) {
        bound += term(k).abs();
        ++k;
    }
    bound += term(k).abs() / (Rat(1) - ratio(k));
    out.tail_bound = bound;
    return out;
}

/// zeta_E(-n) = 2 Li_{-n}(-1), the Abel-summed value of 2 sum (-1)^j j^n.
inline Rat euler_zeta_neg(unsigned n) { return Rat(2) * polylog_neg(n).eval(Rat(-1)); }

}  // namespace eulerian
