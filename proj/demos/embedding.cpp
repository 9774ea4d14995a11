// Walkthrough of the core embedding operations: plain syndrome coding,
// wet-constrained solving, and the randomized solver that trades syndrome
// symbols for guaranteed embeddability.

#include <iostream>

#include <wpsc/wpsc.hpp>

using namespace wpsc;

int main() {
    const Code code = make_hamming(Field::gf2(), 3);  // [7,4] binary
    std::cout << "code: n=" << code.spec.n << " k=" << code.spec.k
              << " rho=" << code.spec.rho << "\n";

    // Plain embedding: 3 message bits into 7 cover bits, at most 1 change.
    CoverObject cover{{1, 0, 1, 1, 0, 0, 1}, {}};
    const Vec msg{1, 0, 1};
    const EmbedSolution plain = solve_plain(code, cover, msg);
    std::cout << "plain: changes=" << plain.changes << " extract=";
    write_vector(std::cout, syndrome(code, plain.y));

    // A wet position: give up min_r syndrome symbols and the solver always
    // succeeds, still with at most 1 change.
    CoverObject damp{{1, 0, 1, 1, 0, 0, 1}, {5}};
    const size_t r = *min_r(code.spec, damp.wet.size());
    const Vec short_msg{1, 0};
    const EmbedSolution rnd = solve_randomized(code, damp, short_msg, r);
    std::cout << "randomized: r=" << r << " changes=" << rnd.changes
              << " tail=";
    write_vector(std::cout, rnd.random_tail);
    std::cout << "stego syndrome=";
    write_vector(std::cout, syndrome(code, rnd.y));

    // How much payload the sacrifice costs, against the covering bound.
    const BoundReport rep = bound_report(code.spec, r);
    std::cout << "alpha=" << rep.alpha << " e_actual=" << rep.e_actual
              << " e_bound=" << rep.e_bound << " loss=" << rep.loss << "\n";
    return 0;
}
