#pragma once

#include "poly.hpp"

#include <stdexcept>
#include <string>

namespace eulerian {

/// Quotient num/den of polynomials kept in canonical form: gcd(num, den) = 1
/// and den monic. Zero is 0/1. Two values are equal iff their canonical
/// forms are structurally equal.
class RatFunc {
public:
    RatFunc() : den_(Poly::one()) {}
    RatFunc(const Rat& c) : num_(c), den_(Poly::one()) {}  // NOLINT(google-explicit-constructor)
    RatFunc(Poly p) : num_(std::move(p)), den_(Poly::one()) {}  // NOLINT(google-explicit-constructor)
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// The numerator when the denominator is 1; throws otherwise.
    Poly as_polynomial() const {
        if (!is_polynomial()) throw std::logic_error("rational function is not a polynomial: " + to_string());
        return num_;
    }

    RatFunc inverse() const {
        if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }

    Rat eval(const Rat& x) const {
        Rat d = den_.eval(x);
        if (d.is_zero()) throw std::domain_error("RatFunc: evaluation at a pole x = " + x.to_string());
        return num_.eval(x) / d;
    }

    /// f(1/var)
    RatFunc compose_reciprocal() const {
        const auto width = static_cast<std::size_t>(std::max(num_.degree(), den_.degree()));
        return RatFunc(num_.reversed(width), den_.reversed(width));
    }

    /// f(c * var)
    RatFunc compose_linear(const Rat& c) const { return RatFunc(num_.compose_linear(c), den_.compose_linear(c)); }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    RatFunc pow(unsigned e) const { return RatFunc(num_.pow(e), den_.pow(e)); }

    std::string to_string(char var = 'x') const {
        if (is_polynomial()) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

    RatFunc operator-() const { return RatFunc(-num_, den_, Canonical{}); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_, Poly::one(), Canonical{});
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    friend bool operator==(const RatFunc&, const RatFunc&) = default;

private:
    struct Canonical {};
    RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::one();
            return;
        }
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
        Rat lc = den_.leading();
        if (!lc.is_one()) {
            Rat inv = lc.inverse();
            num_ *= inv;
            den_ *= inv;
        }
    }

    Poly num_;
    Poly den_;
};

/// Canonical form of num/den; rejects a zero denominator.
inline RatFunc ratfunc_simplify(const Poly& num, const Poly& den) { return RatFunc(num, den); }

inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

}  // namespace eulerian
