// Polyomino ideal, matrix and initial ideal of a six-cell convex polyomino.

#include "polyo/encoding.hpp"
#include "polyo/ideals.hpp"

#include <iostream>

int main() {
    using namespace polyo;
    auto P = parse_encoding("Q={{{1, 1}, {2, 2}}, {{2, 1}, {3, 2}}, {{3, 1}, {4, 2}}, {{2, 2}, {3, 3}},"
                            " {{3, 2}, {4, 3}}, {{2, 3}, {3, 4}}};");

    std::cout << polyo_matrix(P).render() << "\n";

    auto I = polyo_ideal(P, RationalField{});
    std::cout << I.ring()->describe() << "\n";
    std::cout << I.generators().size() << " inner 2-minors:\n";
    for (const auto& g : I.generators()) std::cout << "  " << render_binomial(g) << "\n";

    std::cout << "initial ideal:\n";
    for (const auto& m : initial_ideal(I)) std::cout << "  " << I.ring()->render(m) << "\n";
}
