#include <catch2/catch_amalgamated.hpp>

#include "cubicq/subgroup_spec.hpp"
#include "cubicq/weyl.hpp"

#include <set>

using namespace cubicq;

namespace {

LatticeIsometry cyc(const char* text) { return s6_embed(s6_from_cycles(text)); }

int iso_order(const LatticeIsometry& g) { return perm_order(g.perm); }

} // namespace

TEST_CASE("simple reflections have order two and braid where expected") {
    const auto& refl = simple_reflections();
    REQUIRE(refl.size() == 6);
    for (const auto& s : refl) CHECK(iso_order(s) == 2);
    // neighbouring point swaps compose to a 3-cycle
    CHECK(iso_order(compose(refl[0], refl[1])) == 3);
    CHECK_THROWS_AS(reflection(line_class(LineLabel::E(1))), NotIsometry);
}

TEST_CASE("composition applies the right factor first") {
    LatticeIsometry f = cyc("(12)");
    LatticeIsometry g = cyc("(23)");
    // (f o g)(E3): g sends E3 to E2, then f sends E2 to E1
    CHECK(compose(f, g).perm.apply(LineLabel::E(3)) == LineLabel::E(1));
    CHECK(compose(g, f).perm.apply(LineLabel::E(3)) == LineLabel::E(2));

    LatticeIsometry w = compose(f, compose(g, inverse(f)));
    CHECK(w == cyc("(13)"));
}

TEST_CASE("point permutations embed faithfully") {
    LatticeIsometry t = cyc("(12)");
    CHECK(t.perm.apply(LineLabel::E(1)) == LineLabel::E(2));
    CHECK(t.perm.apply(LineLabel::Q(1)) == LineLabel::Q(2));
    CHECK(t.perm.apply(LineLabel::L(1, 3)) == LineLabel::L(2, 3));
    CHECK(t.perm.apply(LineLabel::L(1, 2)) == LineLabel::L(1, 2));
    CHECK(iso_order(t) == 2);
    CHECK(iso_order(cyc("(123456)")) == 6);

    CHECK_THROWS_AS(s6_from_cycles("(17)"), ParseError);
    CHECK_THROWS_AS(s6_from_cycles("(11)"), ParseError);
    CHECK_THROWS_AS(s6_from_cycles("(12)(13)"), ParseError);
    CHECK_THROWS_AS(s6_from_cycles("(12"), ParseError);
}

TEST_CASE("named elements have the advertised orders and images") {
    CHECK(iso_order(named_element('a')) == 3);
    CHECK(iso_order(named_element('b')) == 3);
    CHECK(iso_order(named_element('c')) == 2);
    CHECK(iso_order(named_element('s')) == 2);
    CHECK(iso_order(named_element('r')) == 3);
    CHECK_THROWS_AS(named_element('x'), ParseError);

    const LatticeIsometry& s = named_element('s');
    for (int i = 1; i <= 6; ++i) {
        CHECK(s.perm.apply(LineLabel::E(i)) == LineLabel::Q(i));
        CHECK(s.perm.apply(LineLabel::Q(i)) == LineLabel::E(i));
    }
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            CHECK(s.perm.apply(LineLabel::L(i, j)) == LineLabel::L(i, j));

    const LatticeIsometry& r = named_element('r');
    CHECK(r.perm.apply(LineLabel::E(1)) == LineLabel::Q(1));
    CHECK(r.perm.apply(LineLabel::E(2)) == LineLabel::Q(2));
    CHECK(r.perm.apply(LineLabel::E(3)) == LineLabel::Q(3));
    CHECK(r.perm.apply(LineLabel::E(4)) == LineLabel::L(5, 6));
    CHECK(r.perm.apply(LineLabel::E(5)) == LineLabel::L(4, 6));
    CHECK(r.perm.apply(LineLabel::E(6)) == LineLabel::L(4, 5));

    // column of the matrix holding the image of the hyperplane class
    const Int expect[7] = {4, -1, -1, -1, -2, -2, -2};
    for (int i = 0; i < 7; ++i) CHECK(r.mat[i][0] == expect[i]);

    // r fixes exactly the nine lines joining a low point to a high one
    std::vector<LineLabel> grid;
    for (int i = 1; i <= 3; ++i)
        for (int j = 4; j <= 6; ++j) grid.push_back(LineLabel::L(i, j));
    std::sort(grid.begin(), grid.end());
    auto fixed = fixed_labels(r.perm);
    std::sort(fixed.begin(), fixed.end());
    CHECK(fixed == grid);

    // ab moves every line
    LatticeIsometry ab = compose(named_element('a'), named_element('b'));
    CHECK(iso_order(ab) == 3);
    CHECK(fixed_labels(ab.perm).empty());

    CHECK(iso_order(compose(named_element('c'), named_element('s'))) == 2);
}

TEST_CASE("words over the named elements parse with rightmost-first order") {
    LatticeIsometry a = named_element('a');
    LatticeIsometry b = named_element('b');
    LatticeIsometry r = named_element('r');

    CHECK(parse_word("abr") == compose(a, compose(b, r)));
    CHECK(parse_word("a2") == compose(a, a));
    CHECK(parse_word("a'") == inverse(a));
    CHECK(parse_word("a2b") == compose(compose(a, a), b));
    CHECK(parse_word("aa'").perm.is_identity());

    CHECK_THROWS_AS(parse_word("x"), ParseError);
    CHECK_THROWS_AS(parse_word("a0"), ParseError);
    CHECK_THROWS_AS(parse_word(""), ParseError);

    CHECK(parse_generator_words("a r, s").size() == 3);
    CHECK(parse_generator_words("cs").size() == 1);
}

TEST_CASE("line cycles and matrices reproduce named isometries") {
    LatticeIsometry r = parse_line_cycles(
        "(E1 Q1 L23)(E2 Q2 L13)(E3 Q3 L12)"
        "(E4 L56 Q4)(E5 L46 Q5)(E6 L45 Q6)");
    CHECK(r == named_element('r'));
    CHECK(isometry_from_matrix(named_element('r').mat) == named_element('r'));
    CHECK(parse_line_cycles("").perm.is_identity());

    // swapping two meeting lines alone preserves no pairing
    CHECK_THROWS_AS(parse_line_cycles("(E1 L12)"), NotIsometry);
    CHECK_THROWS_AS(parse_line_cycles("(E1 E2"), ParseError);
    CHECK_THROWS_AS(parse_line_cycles("(E1 E1)"), ParseError);

    Mat7 m{};
    for (int i = 0; i < 7; ++i) m[i][i] = 1;
    m[0][0] = 2;
    CHECK_THROWS_AS(isometry_from_matrix(m), NotIsometry);
}

TEST_CASE("the full isometry group has order 51840") {
    const IsometryGroup& w = IsometryGroup::weyl_e6();
    CHECK(w.order() == kWeylOrder);
    for (const auto& g : simple_reflections()) CHECK(w.contains(g.perm));
    CHECK(w.is_subgroup_of(w));
    CHECK_THROWS_AS(w.all_subgroups(), BudgetExceeded);
}

TEST_CASE("generation respects budgets") {
    CHECK(IsometryGroup::generate({named_element('a')}).order() == 3);
    CHECK_THROWS_AS(IsometryGroup::generate({named_element('a')}, 2), BudgetExceeded);
    CHECK(IsometryGroup::trivial().is_trivial());
}

TEST_CASE("centralizers, normalizers and fixators around the standing order-3 group") {
    const IsometryGroup& w = IsometryGroup::weyl_e6();
    const IsometryGroup& g3 = standard_geometric_group();
    CHECK(g3.order() == 3);

    IsometryGroup cent = w.centralizer_of(g3);
    CHECK(cent.order() == 108);
    IsometryGroup norm = w.normalizer_of(g3);
    CHECK(norm.order() == 216);
    CHECK(cent.is_subgroup_of(norm));

    std::vector<LineLabel> grid;
    for (int i = 1; i <= 3; ++i)
        for (int j = 4; j <= 6; ++j) grid.push_back(LineLabel::L(i, j));
    IsometryGroup fix = w.line_fixator(grid);
    CHECK(fix.order() == 6);
    CHECK(fix == IsometryGroup::generate({named_element('r'), named_element('s')}));
}

TEST_CASE("conjugating elements are found when they exist") {
    const IsometryGroup& w = IsometryGroup::weyl_e6();
    LatticeIsometry a = named_element('a');
    LatticeIsometry b = named_element('b');

    auto x = w.conjugating_element(a, b);
    REQUIRE(x.has_value());
    CHECK(compose(x->perm, compose(a.perm, inverse(x->perm))) == b.perm);

    // elements of different orders are never conjugate
    CHECK_FALSE(w.conjugating_element(a, named_element('c')).has_value());
}

TEST_CASE("subgroup enumeration on a small abelian group") {
    IsometryGroup g = IsometryGroup::generate({named_element('a'), named_element('b')});
    REQUIRE(g.order() == 9);

    auto subs = g.all_subgroups();
    CHECK(subs.size() == 6); // trivial, four of order 3, the whole group
    std::multiset<std::size_t> orders;
    for (const auto& s : subs) {
        orders.insert(s.order());
        CHECK(s.is_subgroup_of(g));
    }
    CHECK(orders == std::multiset<std::size_t>{1, 3, 3, 3, 3, 9});

    // conjugation by an abelian group identifies nothing
    CHECK(g.subgroup_classes(g).size() == 6);

    auto classes = g.element_classes_of_order(3);
    CHECK(classes.size() == 8);
    for (const auto& cl : classes) CHECK(cl.size() == 1);
}

TEST_CASE("normal subgroup witnesses against a fixed candidate list") {
    std::vector<IsometryGroup> candidates;
    candidates.push_back(IsometryGroup::generate({cyc("(12)")}));
    candidates.push_back(IsometryGroup::generate({cyc("(12)(34)")}));
    candidates.push_back(IsometryGroup::generate({cyc("(123)")}));
    candidates.push_back(IsometryGroup::generate({cyc("(12)(34)"), cyc("(13)(24)")}));
    candidates.push_back(IsometryGroup::generate({cyc("(12345)")}));
    candidates.push_back(IsometryGroup::generate({cyc("(123)"), cyc("(12345)")}));

    IsometryGroup ambient = IsometryGroup::generate({cyc("(12)"), cyc("(123456)")});
    REQUIRE(ambient.order() == 720);

    // the alternating subgroup of an embedded S3 is its smallest normal subgroup
    IsometryGroup s3 = IsometryGroup::generate({cyc("(12)"), cyc("(123)")});
    auto w1 = normal_subgroup_witness(s3, ambient, candidates);
    REQUIRE(w1.has_value());
    CHECK(w1->candidate_index == 2);
    CHECK(w1->subgroup.order() == 3);

    // a 5-cycle group is its own witness
    auto w2 = normal_subgroup_witness(IsometryGroup::generate({cyc("(12345)")}), ambient, candidates);
    REQUIRE(w2.has_value());
    CHECK(w2->candidate_index == 4);

    // nothing nontrivial inside the trivial group
    CHECK_FALSE(normal_subgroup_witness(IsometryGroup::trivial(), ambient, candidates).has_value());
}

TEST_CASE("isometry validation rejects pairing-breaking permutations") {
    // transpose two meeting lines, fix the rest
    LinePerm p = LinePerm::identity();
    std::swap(p.img[line_index(LineLabel::E(1))], p.img[line_index(LineLabel::L(1, 2))]);
    CHECK_THROWS_AS(isometry_from_perm(p), NotIsometry);
}
