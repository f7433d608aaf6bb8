#include <catch2/catch_amalgamated.hpp>

#include "cubicq/minimality.hpp"
#include "cubicq/subgroup_spec.hpp"

#include <algorithm>

using namespace cubicq;

namespace {

IsometryGroup words(const std::string& text) {
    return IsometryGroup::generate(parse_generator_words(text));
}

std::vector<LineLabel> labels(const std::vector<std::string>& names) {
    std::vector<LineLabel> out;
    for (const auto& n : names) out.push_back(*parse_line_label(n));
    return out;
}

} // namespace

TEST_CASE("invariant ranks of familiar groups") {
    CHECK(invariant_rank(IsometryGroup::trivial()) == 7);
    CHECK(invariant_rank(words("a")) == 5);
    CHECK(invariant_rank(words("r")) == 5);
    CHECK(invariant_rank(words("ab")) == 3);
    CHECK(invariant_rank(words("a b")) == 3);
    CHECK(invariant_rank(IsometryGroup::weyl_e6()) == 1);
}

TEST_CASE("join of commuting cyclic groups") {
    IsometryGroup j = join(words("a"), words("b"));
    CHECK(j.order() == 9);
    CHECK(join(words("a"), IsometryGroup::trivial()) == words("a"));
}

TEST_CASE("orbit partitions carry disjointness flags") {
    auto trivial = line_orbits(IsometryGroup::trivial());
    CHECK(trivial.size() == 27);
    for (const auto& o : trivial) {
        CHECK(o.labels.size() == 1);
        CHECK(o.disjoint);
    }

    auto ab = line_orbits(words("ab"));
    CHECK(ab.size() == 9);
    for (const auto& o : ab) CHECK(o.labels.size() == 3);

    auto find_orbit = [](const std::vector<LineOrbit>& os, LineLabel l) {
        for (const auto& o : os)
            if (std::find(o.labels.begin(), o.labels.end(), l) != o.labels.end()) return o;
        FAIL("orbit not found");
        return os.front();
    };
    CHECK(find_orbit(ab, LineLabel::E(1)).disjoint);
    // the diagonal orbit {L14, L25, L36} consists of pairwise meeting lines
    CHECK_FALSE(find_orbit(ab, LineLabel::L(1, 4)).disjoint);

    auto r = line_orbits(words("r"));
    CHECK(r.size() == 15); // six triples plus nine fixed lines
    auto e1 = find_orbit(r, LineLabel::E(1));
    CHECK(e1.labels.size() == 3);
    CHECK(e1.disjoint);
}

TEST_CASE("contractible sets under the twisted involution") {
    IsometryGroup g = words("cs");
    auto sets = contractible_sets(g, initial_state());
    REQUIRE(sets.size() == 3);
    CHECK(sets[0] == labels({"L14"}));
    CHECK(sets[1] == labels({"L25"}));
    CHECK(sets[2] == labels({"L36"}));

    // the three fixed lines meet pairwise, so one contraction exhausts them
    ContractionState next = contract(initial_state(), {line_class(*parse_line_label("L14"))});
    CHECK(contractible_sets(g, next).empty());
}

TEST_CASE("equivariant degree search, free cases") {
    auto trivial = max_reachable_degree(IsometryGroup::trivial());
    CHECK(trivial.max_degree == 9);
    REQUIRE(trivial.witness.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(trivial.witness[i] == labels({"E" + std::to_string(i + 1)}));
    CHECK(trivial.terminal_invariant_rank == 1);
    CHECK_FALSE(trivial.conic_bundle_caveat);

    auto ab = max_reachable_degree(words("ab"));
    CHECK(ab.max_degree == 9);
    REQUIRE(ab.witness.size() == 2);
    CHECK(ab.witness[0] == labels({"E1", "E2", "E3"}));
    CHECK(ab.witness[1] == labels({"E4", "E5", "E6"}));
    CHECK(ab.terminal_invariant_rank == 1);

    auto ab2 = max_reachable_degree(words("a b"));
    CHECK(ab2.max_degree == 9);
    CHECK(ab2.witness == ab.witness);

    auto r = max_reachable_degree(words("r"));
    CHECK(r.max_degree == 9);
    REQUIRE(r.witness.size() == 4);
    CHECK(r.witness[0] == labels({"E1", "L23", "Q1"}));
    CHECK(r.witness[1] == labels({"L24"}));
    CHECK(r.witness[2] == labels({"L25"}));
    CHECK(r.witness[3] == labels({"L26"}));

    auto ars = max_reachable_degree(words("a r s"));
    CHECK(ars.max_degree == 9);
    REQUIRE(ars.witness.size() == 2);
    CHECK(ars.witness[0] == labels({"E4", "L56", "Q4"}));
    CHECK(ars.witness[1] == labels({"L15", "L25", "L35"}));
}

TEST_CASE("equivariant degree search, stuck cases") {
    for (const char* spec : {"cs", "c r"}) {
        auto res = max_reachable_degree(words(spec));
        INFO("generators: " << spec);
        CHECK(res.max_degree == 4);
        REQUIRE(res.witness.size() == 1);
        CHECK(res.witness[0] == labels({"L14"}));
        CHECK(res.terminal_invariant_rank == 2);
        CHECK(res.conic_bundle_caveat);
    }
}

TEST_CASE("the ten admissible image classes and the five that keep the surface rational") {
    const auto& classes = galois_image_classes();
    REQUIRE(classes.size() == 10);

    const IsometryGroup& g3 = standard_geometric_group();
    for (const auto& s : classes) {
        CHECK(s.is_subgroup_of(standard_centralizer()));
        CHECK(invariant_rank(s) >= 2);
        CHECK(invariant_rank(join(s, g3)) == 1);
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            CHECK_FALSE(standard_normalizer().conjugates_onto(classes[i], classes[j]));

    auto filter = rational_x_filter(classes);
    REQUIRE(filter.size() == 5);
    for (const auto& s : filter) CHECK(max_reachable_degree(s).max_degree >= 5);
}

TEST_CASE("scenario verdicts") {
    auto contains = [](const std::vector<std::string>& v, const char* s) {
        return std::find(v.begin(), v.end(), std::string(s)) != v.end();
    };

    SECTION("trivial image: not minimal, everything rational") {
        Verdict v = analyze(GaloisScenario{});
        CHECK_FALSE(v.g_minimal);
        CHECK(v.x_rational == Tri::rational);
        CHECK(v.quotient_rational == Tri::rational);
        CHECK(contains(v.justification, rules::kQuotientDescends));
    }

    SECTION("image <r>: minimal, surface rational, quotient not") {
        GaloisScenario sc;
        sc.galois_image = words("r");
        Verdict v = analyze(sc);
        CHECK(v.g_minimal);
        CHECK(v.x_rational == Tri::rational);
        CHECK(v.quotient_rational == Tri::not_rational);
        CHECK(contains(v.justification, rules::kCandidateList));
    }

    SECTION("image <cs>: minimal, surface not rational, quotient open") {
        GaloisScenario sc;
        sc.galois_image = words("cs");
        Verdict v = analyze(sc);
        CHECK(v.g_minimal);
        CHECK(v.x_rational == Tri::not_rational);
        CHECK(contains(v.justification, rules::kConicCaveat));
        CHECK(v.quotient_rational == Tri::unknown);
    }

    SECTION("no rational point: rationality stays open") {
        GaloisScenario sc;
        sc.point_assumption = false;
        Verdict v = analyze(sc);
        CHECK(v.x_rational == Tri::unknown);
        CHECK(v.quotient_rational == Tri::unknown);
        CHECK(contains(v.justification, rules::kNoPoint));
    }

    SECTION("non-commuting image is rejected") {
        GaloisScenario sc;
        sc.galois_image = IsometryGroup::generate({s6_embed(s6_from_cycles("(12)"))});
        CHECK_THROWS_AS(analyze(sc), CommutationViolation);
    }
}

TEST_CASE("quotient rules need the standard geometric action") {
    // pick an order-3 element whose cyclic group already pins the lattice down
    auto classes = IsometryGroup::weyl_e6().element_classes_of_order(3);
    REQUIRE(classes.size() == 3);

    IsometryGroup rigid = IsometryGroup::trivial();
    bool found = false;
    for (const auto& cl : classes) {
        IsometryGroup g = IsometryGroup::from_perm_generators({cl.front()});
        if (invariant_rank(g) == 1) {
            rigid = g;
            found = true;
            break;
        }
    }
    REQUIRE(found);

    GaloisScenario sc;
    sc.geometric_group = rigid;
    Verdict v = analyze(sc);
    CHECK(v.g_minimal);
    CHECK(v.quotient_rational == Tri::unknown);
    CHECK(std::find(v.justification.begin(), v.justification.end(),
                    std::string(rules::kGeometricUnsupported)) != v.justification.end());
}
