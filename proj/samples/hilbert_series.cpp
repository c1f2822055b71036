// Hilbert series of K[P] for a polyomino given on the command line, or for a
// twelve-cell polyomino with one hole.

#include "polyo/encoding.hpp"
#include "polyo/hilbert.hpp"
#include "polyo/ideals.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using namespace polyo;
    std::string text = argc > 1 ? argv[1]
                                : "{{{3,1},{4,2}},{{3,2},{4,3}},{{4,2},{5,3}},{{4,3},{5,4}},{{4,4},{5,5}},{{5,3},{6,4}},"
                                  "{{3,4},{4,5}},{{2,4},{3,5}},{{2,3},{3,4}},{{2,2},{3,3}},{{1,3},{2,4}},{{3,5},{4,6}}}";
    try {
        auto P = parse_encoding(text);
        auto I = polyo_ideal(P, PrimeField{}, {RingChoice::ranked, OrderKind::ranked_grevlex});
        auto H = reduced_hilbert_series(I);
        std::cout << H.to_string() << "\n";
        std::cout << "dim K[P] = " << H.denominator_exponent << ", multiplicity = " << H.numerator.at_one() << "\n";
        auto h = H.expand(8);
        std::cout << "HF:";
        for (auto v : h) std::cout << " " << v;
        std::cout << "\n";
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
