// Prints the first generalized Eulerian polynomials, their a = -1 values,
// and the audit outcome for the umbral recurrence.

#include <eulerian/eulerian.hpp>

#include <iostream>

int main() {
    using namespace eulerian;

    for (unsigned n = 0; n <= 5; ++n) {
        const LGraded g = gen_eulerian(n);
        std::cout << "A_" << n << "(a,b) = " << to_string(g, 'a') << "   A_" << n
                  << "(-1,b) = " << to_string(gen_eulerian_minus_one(n)) << '\n';
    }

    const RangeVerdict v = check_recurrence(8);
    std::cout << "recurrence, n = " << v.n_lo << ".." << v.n_hi << ": " << to_string(v.status) << '\n';
    return v.status == Status::pass ? 0 : 1;
}
