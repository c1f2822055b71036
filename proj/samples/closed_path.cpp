// A closed path around a hole: the inner 2-minors do not generate the toric
// ideal, and the missing generator is a quartic.

#include "polyo/encoding.hpp"
#include "polyo/toric.hpp"

#include <iostream>

int main() {
    using namespace polyo;
    auto P = parse_encoding("{{{2,1},{3,2}},{{2,2},{3,3}},{{1,2},{2,3}},{{1,3},{2,4}},{{1,4},{2,5}},{{2,4},{3,5}},"
                            "{{2,5},{3,6}},{{3,5},{4,6}},{{4,5},{5,6}},{{4,4},{5,5}},{{5,4},{6,5}},{{5,3},{6,4}},"
                            "{{5,2},{6,3}},{{4,2},{5,3}},{{4,1},{5,2}},{{3,1},{4,2}}}");

    for (const auto& h : detect_holes(P)) std::cout << "hole with corner " << to_string(h.corner) << "\n";

    auto cmp = toric_compare(P, RationalField{});
    std::cout << "I_P = J_P: " << (cmp.equal ? "yes" : "no") << "\n";
    auto lex = build_ring(P, RationalField{});
    for (const auto& g : cmp.extra_generators) std::cout << "  " << render_binomial(transfer(g, lex).monic()) << "\n";
}
