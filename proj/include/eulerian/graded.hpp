#pragma once

#include "ratfunc.hpp"

#include <string>

namespace eulerian {

/// coeff * L^grade, where L stands for ln b.
///
/// ln b never appears except as this power, so the grade is carried
/// structurally instead of as a second polynomial variable. Zero values
/// compare equal regardless of grade.
template <class T>
struct Graded {
    unsigned grade = 0;
    T coeff{};

    bool is_zero() const { return coeff.is_zero(); }

    friend bool operator==(const Graded& a, const Graded& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.grade == b.grade && a.coeff == b.coeff;
    }
};

/// q(a) (ln b)^n
using LGraded = Graded<Poly>;

template <class T>
std::string to_string(const Graded<T>& g, char var = 'a') {
    std::string c;
    if constexpr (std::is_same_v<T, Rat>)
        c = g.coeff.to_string();
    else
        c = g.coeff.to_string(var);
    return "[" + c + "]*L^" + std::to_string(g.grade);
}

template <class T>
Graded<RatFunc> to_ratfunc(const Graded<T>& g) {
    return {g.grade, RatFunc(g.coeff)};
}

}  // namespace eulerian
