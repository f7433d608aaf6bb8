// Classifies a few cubics over Q(w), w a primitive cube root of unity, and
// compares splitting fields of the cyclic ones.

#include <cubicq/eisenstein.hpp>

#include <iostream>
#include <vector>

using namespace cubicq;

int main() {
    std::vector<CubicPoly> polys = {
        CubicPoly::make(FieldElement(1), FieldElement(0), FieldElement(0), FieldElement(1)),
        CubicPoly::make(FieldElement(1), FieldElement(0), FieldElement(0), FieldElement(-2)),
        CubicPoly::make(FieldElement(1), FieldElement(0), FieldElement(-3), FieldElement(1)),
        CubicPoly::make(FieldElement(4), FieldElement(-9), FieldElement(-6), FieldElement(-1)),
    };

    for (const auto& p : polys) {
        std::cout << to_string(p) << "\n  disc " << to_string(cubic_discriminant(p))
                  << ", group " << to_string(cubic_galois_group(p)) << ", roots:";
        auto roots = roots_in_field(p);
        if (roots.empty()) std::cout << " none in the base field";
        for (const auto& r : roots) std::cout << " " << to_string(r);
        std::cout << "\n";
    }

    auto f = CubicPoly::make(FieldElement(1), FieldElement(0), FieldElement(0), FieldElement(-2));
    auto g = CubicPoly::make(FieldElement(4), FieldElement(0), FieldElement(0), FieldElement(-16));
    auto h = CubicPoly::make(FieldElement(1), FieldElement(0), FieldElement(-3), FieldElement(1));
    std::cout << "\nsame splitting field, z^3-2 vs 4z^3-16: "
              << (same_splitting_field(f, g) ? "yes" : "no") << "\n";
    std::cout << "same splitting field, z^3-2 vs x^3-3x+1: "
              << (same_splitting_field(f, h) ? "yes" : "no") << "\n";
}
