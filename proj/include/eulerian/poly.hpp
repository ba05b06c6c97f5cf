#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eulerian {

/// Dense univariate polynomial over Rat; coefficient i multiplies var^i.
///
/// The highest stored coefficient is always nonzero; the zero polynomial
/// stores nothing and reports `zero_degree` as its degree.
class Poly {
public:
    static constexpr long zero_degree = -1;

    Poly() = default;
    Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    explicit Poly(const Rat& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }

    static Poly constant(const Rat& c) { return Poly(c); }
    static Poly one() { return Poly(Rat(1)); }
    static Poly variable() { return Poly{Rat(0), Rat(1)}; }
    /// c * var^k
    static Poly monomial(const Rat& c, std::size_t k) {
        if (c.is_zero()) return {};
        std::vector<Rat> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }

    long degree() const { return coeffs_.empty() ? zero_degree : static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Coefficient of var^i (zero past the degree).
    Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
    Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }
    std::span<const Rat> coeffs() const { return coeffs_; }

    Rat eval(const Rat& x) const {
        Rat acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// p(c * var)
    Poly compose_linear(const Rat& c) const {
        std::vector<Rat> v(coeffs_.size());
        Rat cp(1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            v[i] = coeffs_[i] * cp;
            cp *= c;
        }
        return Poly(std::move(v));
    }

    /// p(var^2)
    Poly compose_square() const {
        if (is_zero()) return {};
        std::vector<Rat> v(2 * coeffs_.size() - 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[2 * i] = coeffs_[i];
        return Poly(std::move(v));
    }

    /// General composition p(q) by Horner's rule.
    Poly compose(const Poly& inner) const;

    Poly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rat> v(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rat(i);
        return Poly(std::move(v));
    }

    /// Coefficients reversed and padded to length width + 1: var^width * p(1/var).
    Poly reversed(std::size_t width) const {
        if (static_cast<long>(width) < degree()) throw std::invalid_argument("Poly::reversed: width below degree");
        std::vector<Rat> v(width + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[width - i] = coeffs_[i];
        return Poly(std::move(v));
    }

    Poly monic() const {
        if (is_zero()) return {};
        return *this * leading().inverse();
    }

    Poly pow(unsigned e) const {
        Poly result = one(), base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return result;
    }

    /// Text form: sparse ascending "c*var^k" terms joined by " + ".
    /// The constant term prints as the bare rational; zero prints as "0".
    std::string to_string(char var = 'x') const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += coeffs_[i].to_string();
            if (i > 0) {
                out += '*';
                out += var;
                out += '^';
                out += std::to_string(i);
            }
        }
        return out;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) { return *this += -o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rat& c) {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(v));
    }
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rat> coeffs_;
};

inline Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Poly(*it);
    return acc;
}

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division over Q.
inline PolyDivision divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("Poly division by zero polynomial");
    Poly q, r = num;
    const Rat lc_inv = den.leading().inverse();
    const long dd = den.degree();
    while (!r.is_zero() && r.degree() >= dd) {
        const auto shift = static_cast<std::size_t>(r.degree() - dd);
        Poly term = Poly::monomial(r.leading() * lc_inv, shift);
        q += term;
        r -= term * den;
    }
    return {std::move(q), std::move(r)};
}

/// Quotient of an exact division; throws when the remainder is nonzero.
inline Poly divide_exact(const Poly& num, const Poly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero())
        throw std::logic_error("inexact polynomial division: remainder " + r.to_string());
    return q;
}

namespace detail {

using IntPoly = std::vector<BigInt>;

inline void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Scale a rational polynomial to integer coefficients.
inline IntPoly to_integer(const Poly& p) {
    BigInt l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
    IntPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.num() * (l / c.den()));
    return out;
}

inline void make_primitive(IntPoly& p) {
    BigInt g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// Pseudo-remainder of f by g (both nonzero, deg f >= deg g).
inline IntPoly pseudo_remainder(IntPoly f, const IntPoly& g) {
    const std::size_t dg = g.size() - 1;
    const BigInt& lg = g.back();
    while (!f.empty() && f.size() - 1 >= dg) {
        const BigInt lf = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (auto& c : f) c *= lg;
        for (std::size_t j = 0; j <= dg; ++j) f[shift + j] -= lf * g[j];
        trim(f);
    }
    return f;
}

}  // namespace detail

/// Monic gcd over Q via the primitive (fraction-free) remainder sequence.
/// gcd(0, 0) is the zero polynomial.
inline Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    auto f = detail::to_integer(a);
    auto g = detail::to_integer(b);
    detail::make_primitive(f);
    detail::make_primitive(g);
    if (f.size() < g.size()) std::swap(f, g);
    while (!g.empty()) {
        auto r = detail::pseudo_remainder(f, g);
        detail::make_primitive(r);
        f = std::move(g);
        g = std::move(r);
    }
    std::vector<Rat> coeffs;
    coeffs.reserve(f.size());
    for (const auto& c : f) coeffs.emplace_back(c);
    return Poly(std::move(coeffs)).monic();
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace eulerian
