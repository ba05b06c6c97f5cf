#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <ostream>
#include <string_view>

namespace eulerian {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Text form is `[-]digits[/digits]`; `to_string()` always emits the
/// canonical form, so `Rat::parse(r.to_string()) == r` for every value.
class Rat {
public:
    Rat() = default;
    template <std::integral I>
    Rat(I v) {  // NOLINT(google-explicit-constructor)
        if constexpr (std::is_signed_v<I>)
            value_ = static_cast<long>(v);
        else
            value_ = static_cast<unsigned long>(v);
    }
    explicit Rat(const BigInt& v) : value_(v) {}
    Rat(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    explicit Rat(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    static Rat parse(std::string_view text);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rat abs() const { return Rat(mpq_class(::abs(value_))); }
    Rat inverse() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(mpq_class(1) / value_);
    }
    Rat pow(unsigned e) const;

    std::string to_string() const { return value_.get_str(); }

    Rat operator-() const { return Rat(mpq_class(-value_)); }
    Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
    Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
    Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_{0};
};

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace detail

inline Rat Rat::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num_txt = body.substr(0, slash);
    std::string_view den_txt = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!detail::all_digits(num_txt) || !detail::all_digits(den_txt))
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    BigInt num(std::string(num_txt), 10);
    BigInt den(std::string(den_txt), 10);
    if (den == 0)
        throw std::invalid_argument("zero denominator in rational literal '" + std::string(text) + "'");
    if (negative) num = -num;
    return Rat(num, den);
}

inline Rat Rat::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), e);
    return Rat(mpq_class(n, d));
}

inline BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// C(n, k); zero when k > n.
inline BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt ipow(const BigInt& base, unsigned e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// (-1)^e as +1 / -1.
inline int sign_pow(unsigned e) { return (e % 2 == 0) ? 1 : -1; }

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

}  // namespace eulerian
