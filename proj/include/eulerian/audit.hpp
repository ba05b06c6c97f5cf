#pragma once

#include "classical.hpp"
#include "gen_eulerian.hpp"
#include "graded.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulerian {

enum class Form { as_stated, corrected_candidate };
enum class Status { pass, fail };

/// Which n an identity is expected to hold for.
enum class Expectation { all, odd_only, even_only, none };

inline std::string to_string(Form f) { return f == Form::as_stated ? "as_stated" : "corrected_candidate"; }
inline std::string to_string(Status s) { return s == Status::pass ? "PASS" : "FAIL"; }
inline std::string to_string(Expectation e) {
    switch (e) {
        case Expectation::all: return "all n";
        case Expectation::odd_only: return "odd n only";
        case Expectation::even_only: return "even n only";
        case Expectation::none: return "no n";
    }
    return "?";
}

inline Status expected_status(Expectation e, unsigned n) {
    switch (e) {
        case Expectation::all: return Status::pass;
        case Expectation::odd_only: return n % 2 == 1 ? Status::pass : Status::fail;
        case Expectation::even_only: return n % 2 == 0 ? Status::pass : Status::fail;
        case Expectation::none: return Status::fail;
    }
    return Status::fail;
}

struct FormSpec {
    Form form;
    Expectation expected;
    std::string formula;
    std::string note;  // provenance of the expectation or of the candidate
};

/// One registry entry. Audits run n = n_min..n_max.
struct IdentityDescriptor {
    std::string id;
    std::string locus;
    std::vector<FormSpec> forms;
    unsigned n_min = 1;
    unsigned n_default = 10;
};

/// Outcome of comparing two exact sides for one n.
struct Comparison {
    bool equal = false;
    bool coeff_match = false;
    unsigned lhs_grade = 0;
    unsigned rhs_grade = 0;
    std::string lhs;
    std::string rhs;
    std::string diff;
};

struct IdentityVerdict {
    std::string id;
    Form form = Form::as_stated;
    unsigned n = 0;
    Status status = Status::fail;
    Status expected = Status::pass;
    Comparison detail;

    bool as_expected() const { return status == expected; }
};

struct Witness {
    unsigned n;
    std::string lhs;
    std::string rhs;
    std::string diff;
};

/// Verdict over an n-range: PASS iff every n passed; the first failing n
/// is the witness.
struct RangeVerdict {
    std::string id;
    Form form = Form::as_stated;
    unsigned n_lo = 0;
    unsigned n_hi = 0;
    Status status = Status::pass;
    std::optional<Witness> witness;
};

namespace detail {

inline Comparison compare(const Graded<RatFunc>& lhs, const Graded<RatFunc>& rhs, char var) {
    Comparison c;
    c.equal = lhs == rhs;
    c.coeff_match = lhs.coeff == rhs.coeff;
    c.lhs_grade = lhs.grade;
    c.rhs_grade = rhs.grade;
    c.lhs = to_string(lhs, var);
    c.rhs = to_string(rhs, var);
    if (lhs.grade == rhs.grade || lhs.is_zero() || rhs.is_zero()) {
        const unsigned g = lhs.is_zero() ? rhs.grade : lhs.grade;
        c.diff = to_string(Graded<RatFunc>{g, lhs.coeff - rhs.coeff}, var);
    } else {
        c.diff = c.lhs + " - " + c.rhs;
    }
    return c;
}

inline Comparison compare(const RatFunc& lhs, const RatFunc& rhs, char var) {
    return compare(Graded<RatFunc>{0, lhs}, Graded<RatFunc>{0, rhs}, var);
}

inline Graded<RatFunc> graded(unsigned g, RatFunc v) { return {g, std::move(v)}; }

inline Poly linear(long c0, long c1) { return Poly{Rat(c0), Rat(c1)}; }

inline RatFunc pow2(unsigned e) { return RatFunc(Rat(ipow(BigInt(2), e))); }

/// Shared per-run state: the series-oracle table for the generalized family.
struct AuditContext {
    unsigned n_max;
    std::vector<LGraded> oracle;
};

inline const Poly& q_of(unsigned n) {
    static std::mutex mu;
    static std::vector<Poly> cache;
    std::lock_guard lock(mu);
    while (cache.size() <= n) cache.push_back(gen_eulerian(static_cast<unsigned>(cache.size())).coeff);
    return cache[n];
}

inline Comparison check_eq1(unsigned n, Convention conv) {
    // Taylor coefficients of alpha_n(x) against l^n, plus bracketing of
    // exact partial sums at sample points.
    const std::size_t order = 2 * n + 8;
    const RatFunc alpha = eulerian_fraction(n, conv);
    Series<Rat> num(order, std::vector<Rat>(alpha.num().coeffs().begin(), alpha.num().coeffs().end()));
    Series<Rat> den(order, std::vector<Rat>(alpha.den().coeffs().begin(), alpha.den().coeffs().end()));
    Series<Rat> taylor = num * series_reciprocal(den);
    std::vector<Rat> lhs_c, rhs_c;
    for (std::size_t l = 0; l <= order; ++l) {
        lhs_c.push_back(taylor[l]);
        rhs_c.push_back(n == 0 ? Rat(1) : Rat(ipow(BigInt(static_cast<unsigned long>(l)), n)));
    }
    Comparison c = compare(RatFunc(Poly(lhs_c)), RatFunc(Poly(rhs_c)), 'x');
    for (const Rat& z : {Rat(1) / Rat(2), Rat(-1) / Rat(3)}) {
        PartialSum ps = polylog_partial(-static_cast<long>(n), z, 40);
        Rat approx = ps.value + (n == 0 ? Rat(1) : Rat(0));
        Rat gap = (alpha.eval(z) - approx).abs();
        if (gap > ps.tail_bound) {
            c.equal = false;
            c.diff += "; partial sum at x=" + z.to_string() + " misses by " + gap.to_string() +
                      " > tail bound " + ps.tail_bound.to_string();
        }
    }
    return c;
}

inline Comparison check_eq5(unsigned n, Form form) {
    const Poly x = Poly::variable();
    const Poly shift = form == Form::as_stated ? linear(-1, 1) : linear(1, -1);
    Poly lhs = -(x * eulerian_poly_G(n));
    for (unsigned k = 0; k <= n; ++k) lhs += Rat(binomial(n, k)) * eulerian_poly_G(k) * shift.pow(n - k);
    const Poly rhs = n == 0 ? linear(1, -1) : Poly();
    return compare(RatFunc(lhs), RatFunc(rhs), 'x');
}

inline Comparison check_eq7(unsigned n) {
    Comparison all;
    all.equal = true;
    all.coeff_match = true;
    for (unsigned k = 0; k <= n; ++k) {
        RatFunc from_gf = gf_coefficients({GfKind::bernstein, k}, n)[n];
        Comparison c = compare(from_gf, RatFunc(bernstein_poly(k, n)), 'x');
        const std::string tag = (k ? "; k=" : "k=") + std::to_string(k) + ": ";
        all.equal = all.equal && c.equal;
        all.coeff_match = all.coeff_match && c.coeff_match;
        all.lhs += tag + c.lhs;
        all.rhs += tag + c.rhs;
        all.diff += tag + c.diff;
    }
    return all;
}

inline Comparison check_eqaa(unsigned n) {
    RatFunc f(Poly::variable(), linear(1, -1));
    for (unsigned i = 0; i < n; ++i) f = RatFunc(Poly::variable()) * f.derivative();
    return compare(f, polylog_neg(n), 'x');
}

inline Comparison check_eq15(unsigned n) {
    const Poly one_minus_a = linear(1, -1);
    Poly lhs = -(Poly::variable() * q_of(n));
    for (unsigned k = 0; k <= n; ++k) lhs += Rat(binomial(n, k)) * q_of(k) * one_minus_a.pow(n - k);
    const Poly rhs = n == 0 ? one_minus_a : Poly();
    return compare(graded(n, lhs), graded(n, rhs), 'a');
}

inline Comparison check_thm2(unsigned n, Convention conv) {
    RatFunc rhs;
    for (unsigned k = 0; k < n; ++k) {
        Poly x_k = Poly::monomial(Rat(1), k);
        Poly den = Poly::monomial(Rat(1), k + 1) - x_k;
        rhs += RatFunc(eulerian_poly(k, conv) * bernstein_poly(k, n), den);
    }
    return compare(RatFunc(eulerian_poly(n, conv)), rhs, 'x');
}

inline Comparison check_thm3(const AuditContext& ctx, unsigned n) {
    return compare(to_ratfunc(gen_eulerian(n)), to_ratfunc(ctx.oracle.at(n)), 'a');
}

inline Comparison check_product(unsigned n, bool bernstein_form) {
    const Poly one_plus_a = linear(1, 1);
    const Poly one_minus_a = linear(1, -1);
    const RatFunc one_plus_inv_a(one_plus_a, Poly::variable());
    RatFunc rhs;
    for (unsigned k = 0; k <= n; ++k) {
        const Poly pair = q_of(k) * q_of(n - k).compose_linear(Rat(-1));
        if (bernstein_form)
            rhs += one_plus_inv_a.pow(k) * RatFunc(bernstein_poly(k, n) * pair);
        else
            rhs += RatFunc(Rat(binomial(n, k)) * one_plus_a.pow(k) * pair * one_minus_a.pow(n - k));
    }
    return compare(to_ratfunc(gen_eulerian_squared(n)), graded(n, rhs), 'a');
}

inline Comparison check_thm7(unsigned n, Form form) {
    const Poly a = Poly::variable();
    const RatFunc li = polylog_neg(n).compose_reciprocal();  // Li_{-n}(1/a)
    if (form == Form::as_stated) {
        RatFunc lhs(q_of(n), linear(-1, 1).pow(n));
        RatFunc rhs = RatFunc(linear(1, -1), a) * li;  // (1/a - 1) Li
        return compare(graded(n, lhs), graded(n, rhs), 'a');
    }
    RatFunc rhs = RatFunc(linear(-1, 1), a) * RatFunc(linear(1, -1).pow(n)) * li;
    return compare(graded(n, RatFunc(q_of(n))), graded(n, rhs), 'a');
}

inline Comparison check_thm8(unsigned n, Form form) {
    Poly sum;
    for (unsigned k = 0; k <= n; ++k)
        sum += Rat(BigInt(factorial(k) * stirling2(n + 1, k + 1))) * linear(-1, 1).pow(n - k);
    const Rat sign = form == Form::as_stated ? Rat(-1) : Rat(sign_pow(n));
    return compare(graded(n, RatFunc(Poly::variable() * q_of(n))), graded(n, RatFunc(sign * sum)), 'a');
}

inline Graded<RatFunc> minus_one_lhs(unsigned n) { return graded(n, RatFunc(q_of(n).eval(Rat(-1)))); }

inline Comparison check_thm9(unsigned n) {
    return compare(minus_one_lhs(n), graded(n, pow2(n) * RatFunc(euler_number(n))), 'a');
}

inline Comparison check_thm10(unsigned n, Form form) {
    const Rat p = Rat(ipow(BigInt(2), n + 1));
    const Rat coeff = p * (Rat(1) - p) * bernoulli_number(n + 1) / Rat(n + 1);
    const unsigned g = form == Form::as_stated ? n + 1 : n;
    return compare(minus_one_lhs(n), graded(g, RatFunc(coeff)), 'a');
}

inline Comparison check_thm11(unsigned n, Form form) {
    const Rat g_next = genocchi_number(n + 1) / Rat(n + 1);
    if (form == Form::as_stated)
        return compare(minus_one_lhs(n), graded(n + 1, RatFunc(Rat(ipow(BigInt(2), n + 1)) * g_next)), 'a');
    return compare(minus_one_lhs(n), graded(n, RatFunc(Rat(ipow(BigInt(2), n)) * g_next)), 'a');
}

inline Comparison check_eq24(unsigned n) {
    const Rat abel = polylog_neg(n).eval(Rat(-1));  // sum_{j>=1} (-1)^j j^n
    return compare(minus_one_lhs(n), graded(n, pow2(n + 1) * RatFunc(abel)), 'a');
}

inline Comparison check_eq26(unsigned n) {
    return compare(minus_one_lhs(n), graded(n, pow2(n) * RatFunc(euler_zeta_neg(n))), 'a');
}

using CheckFn = std::function<Comparison(const AuditContext&, unsigned, Form)>;

struct RegistryEntry {
    IdentityDescriptor descriptor;
    CheckFn check;
};

inline FormSpec stated(Expectation e, std::string formula, std::string note = "") {
    return {Form::as_stated, e, std::move(formula), std::move(note)};
}
inline FormSpec candidate(std::string formula, std::string note) {
    return {Form::corrected_candidate, Expectation::all, std::move(formula), std::move(note)};
}

inline const std::vector<RegistryEntry>& registry_entries() {
    using C = const AuditContext&;
    static const std::vector<RegistryEntry> entries = {
        {{"cor6", "product identity, Bernstein-weighted form",
          {stated(Expectation::all, "A_n(a^2,b^2) = sum_k (1+1/a)^k B_{k,n}(a) A_k(a,b) A_{n-k}(-a,b)",
                  "1/a^k factors cancel against B_{k,n}(a)")},
          0, 10},
         [](C, unsigned n, Form) { return check_product(n, true); }},
        {{"eq1", "Eulerian fraction as a power sum, summation convention",
          {stated(Expectation::all, "sum_{l>=0} l^n x^l = A_n(x)/(1-x)^{n+1}, A_n from the alternating binomial sum",
                  "Taylor coefficients plus partial sums at x=1/2, -1/3 with exact tail bounds")},
          0, 10},
         [](C, unsigned n, Form) { return check_eq1(n, Convention::S); }},
        {{"eq1-g", "Eulerian fraction as a power sum, generating-function convention",
          {stated(Expectation::none, "sum_{l>=0} l^n x^l = A_n(x)/(1-x)^{n+1}, A_n from (1-x)/(e^{t(1-x)}-x)",
                  "x A^G_n = (-1)^n A^S_n, so the conventions disagree for n >= 1")},
          1, 10},
         [](C, unsigned n, Form) { return check_eq1(n, Convention::G); }},
        {{"eq15", "umbral recurrence of the generalized family",
          {stated(Expectation::all, "[A(a,b) + (1-a) ln b]^n - a A_n(a,b) = (1-a) delta_{n,0}")},
          0, 10},
         [](C, unsigned n, Form) { return check_eq15(n); }},
        {{"eq19", "product identity for A_n(a^2,b^2)",
          {stated(Expectation::all, "A_n(a^2,b^2) = sum_k C(n,k) (1+a)^k A_k(a,b) A_{n-k}(-a,b) (1-a)^{n-k}")},
          0, 10},
         [](C, unsigned n, Form) { return check_product(n, false); }},
        {{"eq24", "alternating power sum at a = -1 (Abel sum)",
          {stated(Expectation::all, "A_n(-1,b) = 2^{n+1} (ln b)^n sum_{j>=1} (-1)^j j^n",
                  "the divergent sum is read as Li_{-n}(-1)")},
          1, 10},
         [](C, unsigned n, Form) { return check_eq24(n); }},
        {{"eq26", "Euler-zeta interpolation at a = -1",
          {stated(Expectation::all, "A_n(-1,b) = 2^n (ln b)^n zeta_E(-n)", "zeta_E(-n) = 2 Li_{-n}(-1)")},
          1, 10},
         [](C, unsigned n, Form) { return check_eq26(n); }},
        {{"eq5", "classical umbral recurrence, generating-function convention",
          {stated(Expectation::none, "(A(x) + (x-1))^n - x A_n(x) = (1-x) delta_{n,0}",
                  "with (x-1) the n = 1 case already leaves 2(x-1)"),
           candidate("(A(x) + (1-x))^n - x A_n(x) = (1-x) delta_{n,0}",
                     "the generalized recurrence at b = e; validated against the series oracle")},
          1, 10},
         [](C, unsigned n, Form f) { return check_eq5(n, f); }},
        {{"eq7", "Bernstein generating function",
          {stated(Expectation::all, "sum_{n>=k} B_{k,n}(x) t^n/n! = (t x)^k/k! e^{t(1-x)}, B_{k,n} = C(n,k) x^k (1-x)^{n-k}")},
          0, 10},
         [](C, unsigned n, Form) { return check_eq7(n); }},
        {{"eqaa", "polylogarithm at negative order via Stirling numbers",
          {stated(Expectation::all, "(x d/dx)^n x/(1-x) = sum_k k! S(n+1,k+1) (x/(1-x))^{k+1}")},
          0, 10},
         [](C, unsigned n, Form) { return check_eqaa(n); }},
        {{"thm10", "a = -1 values through Bernoulli numbers",
          {stated(Expectation::even_only, "A_n(-1,b) = 2^{n+1} (ln b)^{n+1} (1-2^{n+1}) B_{n+1}/(n+1)",
                  "ln b power is one too high; both sides vanish for even n"),
           candidate("A_n(-1,b) = 2^{n+1} (ln b)^n (1-2^{n+1}) B_{n+1}/(n+1)",
                     "coefficient of t^n in (1/t)[2t/(e^{2tL}-1) - 4t/(e^{4tL}-1)]; validated against the series oracle")},
          1, 10},
         [](C, unsigned n, Form f) { return check_thm10(n, f); }},
        {{"thm11", "a = -1 values through Genocchi numbers",
          {stated(Expectation::even_only, "A_n(-1,b) = 2^{n+1} (ln b)^{n+1} G_{n+1}/(n+1)",
                  "ln b power one too high and an extra factor 2; both sides vanish for even n"),
           candidate("A_n(-1,b) = 2^n (ln b)^n G_{n+1}/(n+1)",
                     "coefficient of t^n in (1/t) sum 2^m L^m G_m t^m/m!; validated against the series oracle")},
          1, 10},
         [](C, unsigned n, Form f) { return check_thm11(n, f); }},
        {{"thm2", "Eulerian polynomials through Bernstein polynomials, generating-function convention",
          {stated(Expectation::all, "A_n(x) = sum_{k<n} A_k(x) B_{k,n}(x)/(x^{k+1} - x^k)")},
          1, 10},
         [](C, unsigned n, Form) { return check_thm2(n, Convention::G); }},
        {{"thm2-s", "Eulerian polynomials through Bernstein polynomials, summation convention",
          {stated(Expectation::none, "A_n(x) = sum_{k<n} A_k(x) B_{k,n}(x)/(x^{k+1} - x^k)",
                  "the identity is the generating-function recurrence; it fails for the summation convention")},
          1, 10},
         [](C, unsigned n, Form) { return check_thm2(n, Convention::S); }},
        {{"thm3", "coefficients as derivatives of the generating function at t = 0",
          {stated(Expectation::all, "A_k(a,b) = lim_{t->0} d^k/dt^k (1-a)/(b^{t(1-a)} - a)",
                  "recurrence route against n! [tau^n] series coefficients")},
          0, 10},
         [](C ctx, unsigned n, Form) { return check_thm3(ctx, n); }},
        {{"thm7", "generalized family through Li_{-n}(1/a)",
          {stated(Expectation::odd_only, "(1/(a-1))^n A_n(a,b) = [(ln b)^n/a - (ln b)^n] Li_{-n}(1/a)",
                  "sign parity: (1/(a-1))^n is used where (1/(1-a))^n is needed"),
           candidate("A_n(a,b) = ((a-1)/a) ((1-a) ln b)^n Li_{-n}(1/a)",
                     "geometric-series expansion of (1-1/a) sum a^{-j} e^{j tau (1-a)}; validated against the series oracle")},
          1, 10},
         [](C, unsigned n, Form f) { return check_thm7(n, f); }},
        {{"thm8", "generalized family through Stirling numbers",
          {stated(Expectation::odd_only, "a A_n(a,b) = -(ln b)^n sum_k k! S(n+1,k+1) (1/(a-1))^{k-n}",
                  "the leading sign should be (-1)^n"),
           candidate("a A_n(a,b) = (-1)^n (ln b)^n sum_k k! S(n+1,k+1) (a-1)^{n-k}",
                     "corrected Li_{-n}(1/a) form expanded with x/(1-x) = 1/(a-1); validated against the series oracle")},
          1, 10},
         [](C, unsigned n, Form f) { return check_thm8(n, f); }},
        {{"thm9", "a = -1 values through Euler numbers",
          {stated(Expectation::all, "A_n(-1,b) = 2^n E_n (ln b)^n", "E_n from 2/(e^t+1)")},
          1, 10},
         [](C, unsigned n, Form) { return check_thm9(n); }},
    };
    return entries;
}

}  // namespace detail

inline std::vector<IdentityDescriptor> identity_registry() {
    std::vector<IdentityDescriptor> out;
    for (const auto& e : detail::registry_entries()) out.push_back(e.descriptor);
    return out;
}

inline std::vector<std::string> identity_ids() {
    std::vector<std::string> out;
    for (const auto& e : detail::registry_entries()) out.push_back(e.descriptor.id);
    return out;
}

class UnknownIdentity : public std::invalid_argument {
public:
    explicit UnknownIdentity(const std::string& id) : std::invalid_argument("unknown identity '" + id + "'") {}
};

/// Thrown when the recurrence and the series oracle disagree; no verdict
/// can be trusted after that.
class OracleMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline const RegistryEntry& find_entry(const std::string& id) {
    for (const auto& e : registry_entries())
        if (e.descriptor.id == id) return e;
    throw UnknownIdentity(id);
}

/// Recurrence routes against their series oracles for every n used.
inline AuditContext prepare_context(unsigned n_max) {
    AuditContext ctx{n_max, gen_eulerian_oracle_table(n_max + 1)};
    for (unsigned n = 0; n <= n_max + 1; ++n)
        if (!(gen_eulerian(n) == ctx.oracle[n]))
            throw OracleMismatch("generalized family: recurrence and series oracle differ at n = " + std::to_string(n));
    auto classical = gf_coefficients({GfKind::classical_eulerian}, n_max + 1);
    for (unsigned n = 0; n <= n_max + 1; ++n)
        if (!(RatFunc(eulerian_poly_G(n)) == classical[n]))
            throw OracleMismatch("classical family: recurrence and series oracle differ at n = " + std::to_string(n));
    return ctx;
}

inline std::vector<IdentityVerdict> run_entry(const RegistryEntry& entry, const AuditContext& ctx) {
    std::vector<IdentityVerdict> rows;
    for (const auto& fs : entry.descriptor.forms) {
        for (unsigned n = entry.descriptor.n_min; n <= ctx.n_max; ++n) {
            IdentityVerdict v;
            v.id = entry.descriptor.id;
            v.form = fs.form;
            v.n = n;
            v.detail = entry.check(ctx, n, fs.form);
            v.status = v.detail.equal ? Status::pass : Status::fail;
            v.expected = expected_status(fs.expected, n);
            rows.push_back(std::move(v));
        }
    }
    return rows;
}

}  // namespace detail

/// Audits the selected identities ("all" or one id) for n up to n_max.
/// Identities run concurrently; the result is sorted by (id, form, n).
inline std::vector<IdentityVerdict> run_audit(const std::string& filter, unsigned n_max) {
    std::vector<const detail::RegistryEntry*> selected;
    if (filter == "all") {
        for (const auto& e : detail::registry_entries()) selected.push_back(&e);
    } else {
        selected.push_back(&detail::find_entry(filter));
    }
    const detail::AuditContext ctx = detail::prepare_context(n_max);
    std::vector<std::future<std::vector<IdentityVerdict>>> jobs;
    for (const auto* e : selected)
        jobs.push_back(std::async(std::launch::async, [e, &ctx] { return detail::run_entry(*e, ctx); }));
    std::vector<IdentityVerdict> out;
    for (auto& j : jobs) {
        auto rows = j.get();
        out.insert(out.end(), std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end()));
    }
    std::sort(out.begin(), out.end(), [](const IdentityVerdict& a, const IdentityVerdict& b) {
        if (a.id != b.id) return a.id < b.id;
        if (a.form != b.form) return a.form < b.form;
        return a.n < b.n;
    });
    return out;
}

/// Collapses per-n rows of one (id, form) into a range verdict.
inline RangeVerdict summarize(const std::vector<IdentityVerdict>& rows, const std::string& id, Form form) {
    RangeVerdict r{id, form, 0, 0, Status::pass, std::nullopt};
    bool first = true;
    for (const auto& v : rows) {
        if (v.id != id || v.form != form) continue;
        if (first) r.n_lo = v.n;
        first = false;
        r.n_hi = v.n;
        if (v.status == Status::fail && !r.witness) {
            r.status = Status::fail;
            r.witness = Witness{v.n, v.detail.lhs, v.detail.rhs, v.detail.diff};
        }
    }
    if (first) throw std::invalid_argument("no verdict rows for " + id + " / " + to_string(form));
    return r;
}

inline RangeVerdict audit_range(const std::string& id, Form form, unsigned n_max) {
    return summarize(run_audit(id, n_max), id, form);
}

inline RangeVerdict check_recurrence(unsigned n_max) { return audit_range("eq15", Form::as_stated, n_max); }
inline RangeVerdict check_bernstein_identity(unsigned n_max) { return audit_range("thm2", Form::as_stated, n_max); }
inline std::vector<RangeVerdict> check_product_identity(unsigned n_max) {
    return {audit_range("eq19", Form::as_stated, n_max), audit_range("cor6", Form::as_stated, n_max)};
}
inline std::vector<RangeVerdict> check_polylog_identity(unsigned n_max) {
    auto rows = run_audit("thm7", n_max);
    return {summarize(rows, "thm7", Form::as_stated), summarize(rows, "thm7", Form::corrected_candidate)};
}
inline std::vector<RangeVerdict> check_stirling_identity(unsigned n_max) {
    auto rows = run_audit("thm8", n_max);
    return {summarize(rows, "thm8", Form::as_stated), summarize(rows, "thm8", Form::corrected_candidate)};
}
inline std::vector<RangeVerdict> audit_minus_one_links(unsigned n_max) {
    std::vector<RangeVerdict> out;
    for (const char* id : {"eq24", "eq26", "thm10", "thm11", "thm9"}) {
        auto rows = run_audit(id, n_max);
        for (const auto& fs : detail::find_entry(id).descriptor.forms) out.push_back(summarize(rows, id, fs.form));
    }
    return out;
}

}  // namespace eulerian
