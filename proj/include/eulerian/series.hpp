#pragma once

#include "ratfunc.hpp"

#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulerian {

/// Exact commutative coefficient ring usable in a Series: Rat or RatFunc.
template <class R>
concept ExactRing = std::constructible_from<R, Rat> && requires(const R& a, const R& b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { a.inverse() } -> std::convertible_to<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.to_string() } -> std::convertible_to<std::string>;
    { a == b } -> std::convertible_to<bool>;
};

/// Truncated power series sum_{m <= order} c_m t^m.
template <ExactRing R>
class Series {
public:
    explicit Series(std::size_t order) : coeffs_(order + 1, R(Rat(0))) {}
    Series(std::size_t order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1, R(Rat(0)));
    }

    static Series constant(const R& c, std::size_t order) {
        Series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const R& operator[](std::size_t m) const { return coeffs_.at(m); }
    R& operator[](std::size_t m) { return coeffs_.at(m); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    Series& operator+=(const Series& o) {
        check_order(o);
        for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] = coeffs_[m] + o.coeffs_[m];
        return *this;
    }
    Series& operator-=(const Series& o) {
        check_order(o);
        for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] = coeffs_[m] - o.coeffs_[m];
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }

    friend Series operator*(const Series& a, const Series& b) {
        a.check_order(b);
        Series r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= a.order(); ++j) r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }
    friend Series operator*(const R& c, Series s) {
        for (auto& x : s.coeffs_) x = c * x;
        return s;
    }

    /// Multiply by t^k, dropping terms beyond the order.
    Series shift_up(std::size_t k) const {
        Series r(order());
        for (std::size_t m = k; m <= order(); ++m) r.coeffs_[m] = coeffs_[m - k];
        return r;
    }

    friend bool operator==(const Series&, const Series&) = default;

private:
    void check_order(const Series& o) const {
        if (o.order() != order()) throw std::invalid_argument("Series: mismatched truncation orders");
    }

    std::vector<R> coeffs_;
};

/// exp(c t) = sum c^m t^m / m!
template <ExactRing R>
Series<R> series_exp(const R& c, std::size_t order) {
    Series<R> s(order);
    R term(Rat(1));
    for (std::size_t m = 0; m <= order; ++m) {
        s[m] = term;
        term = term * c * R(Rat(1) / Rat(m + 1));
    }
    return s;
}

/// Multiplicative inverse modulo t^(order+1); the constant term must be a unit.
template <ExactRing R>
Series<R> series_reciprocal(const Series<R>& s) {
    if (s[0].is_zero())
        throw std::domain_error("series_reciprocal: constant term " + s[0].to_string() + " is not invertible");
    const R inv0 = s[0].inverse();
    Series<R> r(s.order());
    r[0] = inv0;
    for (std::size_t m = 1; m <= s.order(); ++m) {
        R acc(Rat(0));
        for (std::size_t j = 1; j <= m; ++j)
            if (!s[j].is_zero()) acc = acc + s[j] * r[m - j];
        r[m] = R(Rat(-1)) * acc * inv0;
    }
    return r;
}

/// Generating functions with exponential normalization: GF = sum c_n t^n / n!.
enum class GfKind {
    classical_eulerian,  // (1 - x) / (e^{t(1-x)} - x)
    generalized,         // (1 - a) / (e^{tau(1-a)} - a), tau = t ln b
    bernstein,           // (t x)^k / k! * e^{t(1-x)}
    euler,               // 2 / (e^t + 1)
    bernoulli,           // t / (e^t - 1)
    genocchi,            // 2t / (e^t + 1)
    minus_one,           // 2 / (e^{2 tau} + 1)
};

struct GfSpec {
    GfKind kind;
    unsigned k = 0;  // bernstein index
};

/// Extra series terms kept beyond the requested order.
inline constexpr std::size_t kTruncationGuard = 2;

namespace detail {

template <ExactRing R>
Series<R> build_gf(const GfSpec& gf, const R& var, std::size_t order) {
    const R one(Rat(1));
    switch (gf.kind) {
        case GfKind::classical_eulerian:
        case GfKind::generalized: {
            const R c = one - var;
            Series<R> den = series_exp(c, order);
            den[0] = den[0] - var;
            return c * series_reciprocal(den);
        }
        case GfKind::bernstein: {
            R scale = one;
            for (unsigned i = 0; i < gf.k; ++i) scale = scale * var * R(Rat(1) / Rat(i + 1));
            return scale * series_exp(one - var, order).shift_up(gf.k);
        }
        case GfKind::euler:
        case GfKind::genocchi: {
            Series<R> den = series_exp(one, order);
            den[0] = den[0] + one;
            Series<R> e = R(Rat(2)) * series_reciprocal(den);
            return gf.kind == GfKind::euler ? e : e.shift_up(1);
        }
        case GfKind::bernoulli: {
            // (e^t - 1) / t has coefficients 1/(m+1)! and a unit constant term.
            Series<R> u(order);
            for (std::size_t m = 0; m <= order; ++m) u[m] = R(Rat(BigInt(1), factorial(static_cast<unsigned>(m + 1))));
            return series_reciprocal(u);
        }
        case GfKind::minus_one: {
            Series<R> den = series_exp(R(Rat(2)), order);
            den[0] = den[0] + one;
            return R(Rat(2)) * series_reciprocal(den);
        }
    }
    throw std::logic_error("unknown generating function");
}

template <ExactRing R>
std::vector<R> factorial_normalized(const Series<R>& s, std::size_t order) {
    std::vector<R> out;
    out.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) out.push_back(R(Rat(factorial(static_cast<unsigned>(n)))) * s[n]);
    return out;
}

}  // namespace detail

/// c_0..c_order of the generating function, symbolic in its variable (x or a).
/// Families without a variable come back as constant rational functions.
inline std::vector<RatFunc> gf_coefficients(const GfSpec& gf, std::size_t order) {
    const std::size_t internal = order + kTruncationGuard;
    auto s = detail::build_gf<RatFunc>(gf, RatFunc(Poly::variable()), internal);
    return detail::factorial_normalized(s, order);
}

/// Same coefficients with the variable fixed at a rational point.
inline std::vector<Rat> gf_coefficients_at(const GfSpec& gf, std::size_t order, const Rat& point) {
    const std::size_t internal = order + kTruncationGuard;
    auto s = detail::build_gf<Rat>(gf, point, internal);
    return detail::factorial_normalized(s, order);
}

}  // namespace eulerian
