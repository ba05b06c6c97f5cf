#pragma once

#include "classical.hpp"
#include "rational.hpp"

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulerian {

/// v_p of a rational; zero has valuation +infinity.
class PadicValuation {
public:
    static PadicValuation infinity() { return PadicValuation(); }
    static PadicValuation finite(long v) { return PadicValuation(v); }

    bool is_infinite() const { return !value_; }
    long value() const {
        if (!value_) throw std::logic_error("valuation of zero is infinite");
        return *value_;
    }

    std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

    friend PadicValuation operator+(const PadicValuation& a, const PadicValuation& b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return finite(*a.value_ + *b.value_);
    }
    friend bool operator==(const PadicValuation&, const PadicValuation&) = default;
    friend std::strong_ordering operator<=>(const PadicValuation& a, const PadicValuation& b) {
        if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
        if (a.is_infinite()) return std::strong_ordering::greater;
        if (b.is_infinite()) return std::strong_ordering::less;
        return *a.value_ <=> *b.value_;
    }

private:
    PadicValuation() = default;
    explicit PadicValuation(long v) : value_(v) {}
    std::optional<long> value_;
};

inline bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline void require_odd_prime(unsigned long p) {
    if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not an odd prime");
}

namespace detail {

inline long remove_factor(const BigInt& x, unsigned long p) {
    BigInt rest;
    BigInt pz(p);
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

}  // namespace detail

inline PadicValuation vp(const Rat& x, unsigned long p) {
    require_odd_prime(p);
    if (x.is_zero()) return PadicValuation::infinity();
    return PadicValuation::finite(detail::remove_factor(x.num(), p) - detail::remove_factor(x.den(), p));
}

/// Largest p^N the alternating sums will enumerate.
inline constexpr unsigned long kDefaultLevelCap = 10'000'000;

class LevelCapExceeded : public std::out_of_range {
public:
    LevelCapExceeded(unsigned long p, unsigned level, unsigned long cap)
        : std::out_of_range("p^N = " + std::to_string(p) + "^" + std::to_string(level) + " exceeds the cap " +
                            std::to_string(cap)),
          p_(p), level_(level) {}
    unsigned long p() const { return p_; }
    unsigned level() const { return level_; }

private:
    unsigned long p_;
    unsigned level_;
};

inline unsigned long checked_modulus(unsigned long p, unsigned level, unsigned long cap) {
    require_odd_prime(p);
    if (level == 0) throw std::invalid_argument("level N must be positive");
    unsigned long m = 1;
    for (unsigned i = 0; i < level; ++i) {
        if (m > cap / p) throw LevelCapExceeded(p, level, cap);
        m *= p;
    }
    return m;
}

namespace detail {

/// sum_{v=from}^{to-1} (-1)^v v^n
inline BigInt alternating_power_sum(unsigned n, unsigned long from, unsigned long to) {
    BigInt acc = 0, term;
    for (unsigned long v = from; v < to; ++v) {
        BigInt base(v);
        mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), n);
        if (v % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace detail

/// S_N = sum_{v=0}^{p^N - 1} (-1)^v v^n, with 0^0 = 1.
inline Rat fermionic_partial(unsigned n, unsigned long p, unsigned level, unsigned long cap = kDefaultLevelCap) {
    const unsigned long m = checked_modulus(p, level, cap);
    return Rat(detail::alternating_power_sum(n, 0, m));
}

struct FunctionalEquationResidual {
    Rat residual;
    PadicValuation valuation;
};

/// sum_{v<p^N} (-1)^v ((v+1)^n + v^n) - 2 * 0^n by direct summation.
inline FunctionalEquationResidual check_functional_equation(unsigned n, unsigned long p, unsigned level,
                                                            unsigned long cap = kDefaultLevelCap) {
    const unsigned long m = checked_modulus(p, level, cap);
    BigInt acc = 0, shifted, plain;
    for (unsigned long v = 0; v < m; ++v) {
        BigInt v0(v), v1(v + 1);
        mpz_pow_ui(shifted.get_mpz_t(), v1.get_mpz_t(), n);
        mpz_pow_ui(plain.get_mpz_t(), v0.get_mpz_t(), n);
        if (v % 2 == 0)
            acc += shifted + plain;
        else
            acc -= shifted + plain;
    }
    if (n == 0) acc -= 2;
    Rat r(acc);
    return {r, vp(r, p)};
}

struct WittRow {
    unsigned long p;
    unsigned n;
    unsigned level;
    Rat partial_sum;
    PadicValuation valuation_of_gap;  // v_p(S_N - E_n)
};

/// Rows N = 1..max_level. Each level extends the previous partial sum.
inline std::vector<WittRow> witt_table(unsigned n, unsigned long p, unsigned max_level,
                                       unsigned long cap = kDefaultLevelCap) {
    require_odd_prime(p);
    const Rat e_n = euler_number(n);
    std::vector<WittRow> rows;
    BigInt acc = 0;
    unsigned long done = 0;
    for (unsigned level = 1; level <= max_level; ++level) {
        const unsigned long m = checked_modulus(p, level, cap);
        acc += detail::alternating_power_sum(n, done, m);
        done = m;
        Rat s(acc);
        rows.push_back({p, n, level, s, vp(s - e_n, p)});
    }
    return rows;
}

}  // namespace eulerian
