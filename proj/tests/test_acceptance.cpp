#include <catch2/catch_amalgamated.hpp>

#include "cubicq/checks.hpp"

#include <cstdio>
#include <map>

using namespace cubicq::checks;

namespace {

const std::map<int, const char*>& criterion_labels() {
    static const std::map<int, const char*> labels = {
        {1, "order of the full line-system isometry group"},
        {2, "centralizer order and its two-factor decomposition"},
        {3, "point-permutation centralizer and conjugate count"},
        {4, "fixator of the nine grid lines"},
        {5, "census of order-3 conjugacy classes"},
        {6, "invariant ranks of the reference subgroups"},
        {7, "ten admissible image classes, five keeping the surface rational"},
        {8, "maximal equivariant contraction degrees and witnesses"},
        {9, "contraction survivor counts and degrees"},
        {10, "resolution table rows and stored quotient scenarios"},
        {11, "normal subgroup coverage across the degree-5 point group"},
        {12, "cubic Galois classifier against the independent oracle"},
        {13, "stored surface classifications end to end"},
        {14, "triple-point tangent expansion identity"},
        {15, "pairing rules and conjugation-invariance properties"},
    };
    return labels;
}

} // namespace

TEST_CASE("acceptance gate") {
    CheckContext ctx;
    ctx.data_dir = ACCEPTANCE_DATA_DIR;
    Report rep = run_checks(ctx);
    REQUIRE(!rep.outcomes.empty());

    std::map<int, std::pair<int, int>> tally; // criterion -> (passed, failed)
    for (const auto& o : rep.outcomes) {
        if (o.criterion == 0) continue;
        auto& t = tally[o.criterion];
        ++(o.result.pass ? t.first : t.second);
    }

    std::printf("\n");
    for (int k = 1; k <= 15; ++k) {
        auto it = tally.find(k);
        bool pass = it != tally.end() && it->second.first > 0 && it->second.second == 0;
        std::printf("criterion %2d: %s  %s\n", k, pass ? "pass" : "FAIL",
                    criterion_labels().at(k));
        CHECK(pass);
    }

    for (const auto& o : rep.outcomes)
        if (!o.result.pass)
            std::printf("failed check %s/%s\n    rule: %s\n    expected: %s\n    computed: %s\n",
                        o.module.c_str(), o.name.c_str(), o.rule.c_str(),
                        o.result.expected.c_str(), o.result.computed.c_str());
    std::printf("checks: %d passed, %d failed\n", rep.passed, rep.failed);
    std::fflush(stdout);

    REQUIRE(rep.failed == 0);
}
