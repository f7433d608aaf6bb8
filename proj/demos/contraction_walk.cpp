// Walks the equivariant contraction machinery on two subgroups: the standard
// order-3 action (blow-down to degree 9 in two steps) and a stuck involution
// that cannot get past degree 4.

#include <cubicq/minimality.hpp>
#include <cubicq/subgroup_spec.hpp>
#include <cubicq/weyl.hpp>

#include <iostream>

using namespace cubicq;

namespace {

void report(const std::string& words) {
    auto group = IsometryGroup::generate(parse_generator_words(words));
    std::cout << "<" << words << ">  order " << group.order()
              << ", invariant rank " << invariant_rank(group) << "\n";

    for (const auto& orbit : line_orbits(group)) {
        if (orbit.labels.size() == 1) continue;
        std::cout << "  orbit";
        for (const auto& l : orbit.labels) std::cout << " " << to_string(l);
        std::cout << (orbit.disjoint ? "  (disjoint)" : "") << "\n";
    }

    auto search = max_reachable_degree(group);
    std::cout << "  best degree " << search.max_degree << " via";
    for (const auto& step : search.witness) {
        std::cout << " [";
        for (std::size_t i = 0; i < step.size(); ++i)
            std::cout << (i ? " " : "") << to_string(step[i]);
        std::cout << "]";
    }
    if (search.witness.empty()) std::cout << " (nothing contractible)";
    if (search.conic_bundle_caveat) std::cout << "  -- conic bundle caveat";
    std::cout << "\n\n";
}

} // namespace

int main() {
    report("ab");
    report("cs");
    report("r s");
}
