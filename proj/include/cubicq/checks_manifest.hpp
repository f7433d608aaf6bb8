#pragma once

// The static check manifest. Included by checks.hpp only; kept separate so the
// framework types stay readable. One entry per verified fact; the acceptance
// summary groups entries by criterion number.

#include <algorithm>

namespace cubicq::checks {

namespace detail {

template <class Ex, class Fn>
bool throws_ex(Fn&& fn) {
    try {
        std::forward<Fn>(fn)();
    } catch (const Ex&) {
        return true;
    } catch (...) {
        return false;
    }
    return false;
}

inline const std::vector<IsometryGroup>& s5_candidate_groups() {
    static const std::vector<IsometryGroup> v = [] {
        std::vector<IsometryGroup> out;
        for (const auto& [name, g] : s5_reference_classes()) out.push_back(g);
        return out;
    }();
    return v;
}

inline const IsometryGroup& s6_group() {
    static const IsometryGroup g = IsometryGroup::generate(
        {s6_embed(s6_from_cycles("(12)")), s6_embed(s6_from_cycles("(123456)"))});
    return g;
}

inline std::string rat_str(const Rat& r) { return to_string(r); }

} // namespace detail

inline const std::vector<Check>& check_manifest() {
    static const std::vector<Check> manifest = [] {
        std::vector<Check> m;
        auto add = [&m](const char* name, const char* module, int criterion, const char* rule,
                        std::function<CheckResult(const CheckContext&)> fn) {
            m.push_back({name, module, criterion, rule, std::move(fn)});
        };

        // ------------------------------------------------------------------
        // picard
        // ------------------------------------------------------------------

        add("pairing_rules", "picard", 15,
            "every line has self-pairing -1 and pairs -1 with the canonical class; two "
            "distinct lines pair 0 or 1 exactly according to the index rules",
            [](const CheckContext&) {
                detail::Parts p;
                const auto& labels = all_line_labels();
                const auto& classes = all_line_classes();
                p.require(pairing(canonical_class(), canonical_class()) == 3,
                          "canonical class self-pairing");
                for (int i = 0; i < kLineCount; ++i) {
                    p.require(pairing(classes[i], classes[i]) == -1,
                              "self-pairing of " + to_string(labels[i]));
                    p.require(pairing(classes[i], canonical_class()) == -1,
                              "canonical pairing of " + to_string(labels[i]));
                    for (int j = 0; j < kLineCount; ++j) {
                        if (i == j) continue;
                        Int got = pairing(classes[i], classes[j]);
                        int want = detail::rule_pairing(labels[i], labels[j]);
                        p.require(got == want, "pairing " + to_string(labels[i]) + "." +
                                                   to_string(labels[j]));
                    }
                }
                return p.result();
            });

        add("label_roundtrip", "picard", 0, "plumbing", [](const CheckContext&) {
            detail::Parts p;
            const auto& labels = all_line_labels();
            for (int i = 0; i < kLineCount; ++i) {
                auto back = parse_line_label(to_string(labels[i]));
                p.require(back && *back == labels[i], "parse round-trip " + to_string(labels[i]));
                p.require(line_index(labels[i]) == i, "index of " + to_string(labels[i]));
                auto lbl = label_of_class(all_line_classes()[i]);
                p.require(lbl && *lbl == labels[i], "class lookup " + to_string(labels[i]));
            }
            p.require(!parse_line_label("E7").has_value(), "E7 rejected");
            p.require(!parse_line_label("L11").has_value(), "L11 rejected");
            p.require(!is_line(canonical_class()), "canonical class is not a line");
            return p.result();
        });

        add("contract_first_point", "picard", 9,
            "contracting one line leaves exactly the 16 lines disjoint from it",
            [](const CheckContext&) {
                detail::Parts p;
                auto st = contract(initial_state(), {line_class(LineLabel::E(1))});
                p.require(st.degree() == 4, "degree after one contraction");
                std::vector<LineLabel> oracle;
                for (const auto& l : all_line_labels())
                    if (!(l == LineLabel::E(1)) && detail::rule_pairing(l, LineLabel::E(1)) == 0)
                        oracle.push_back(l);
                p.require(oracle.size() == 16, "rule-based survivor count");
                p.require(st.survivors.size() == 16, "survivor count");
                p.require(st.survivors == oracle, "survivor set");
                return p.result();
            });

        add("contract_all_points", "picard", 9,
            "contracting six pairwise disjoint lines reaches degree 9 with no lines left",
            [](const CheckContext&) {
                detail::Parts p;
                std::vector<DivisorClass> six;
                for (int i = 1; i <= 6; ++i) six.push_back(line_class(LineLabel::E(i)));
                auto st = contract(initial_state(), six);
                p.require(st.degree() == 9, "degree");
                p.require(st.survivors.empty(), "no surviving lines");
                p.require(pairing(canonical_after(st), canonical_after(st)) == 9,
                          "canonical self-pairing at the end");
                return p.result();
            });

        add("contract_guards", "picard", 0, "plumbing", [](const CheckContext&) {
            detail::Parts p;
            p.require(detail::throws_ex<NotDisjoint>([] {
                          contract(initial_state(), {line_class(LineLabel::E(1)),
                                                     line_class(LineLabel::L(1, 2))});
                      }),
                      "meeting pair rejected");
            p.require(detail::throws_ex<NotALine>(
                          [] { contract(initial_state(), {canonical_class()}); }),
                      "non-line class rejected");
            p.require(detail::throws_ex<NotALine>([] {
                          auto st = contract(initial_state(), {line_class(LineLabel::E(1))});
                          contract(st, {line_class(LineLabel::L(1, 2))});
                      }),
                      "dead line rejected");
            return p.result();
        });

        // ------------------------------------------------------------------
        // weyl
        // ------------------------------------------------------------------

        add("group_order", "weyl", 1,
            "the lattice isometries fixing the canonical class form a group of order 51840, "
            "generated by the six simple reflections",
            [](const CheckContext&) {
                return detail::eq(static_cast<long long>(kWeylOrder),
                                  static_cast<long long>(IsometryGroup::weyl_e6().order()));
            });

        add("named_elements", "weyl", 0,
            "the distinguished isometries have orders 3, 3, 2, 2, 3 and their basic products "
            "have orders 3 and 2",
            [](const CheckContext&) {
                detail::Parts p;
                auto ord = [](const char* w) { return perm_order(parse_word(w).perm); };
                p.require(ord("a") == 3, "order of a");
                p.require(ord("b") == 3, "order of b");
                p.require(ord("c") == 2, "order of c");
                p.require(ord("s") == 2, "order of s");
                p.require(ord("r") == 3, "order of r");
                p.require(ord("ab") == 3, "order of ab");
                p.require(ord("cs") == 2, "order of cs");
                p.require(fixed_labels(parse_word("ab").perm).empty(), "ab fixes no line");
                return p.result();
            });

        add("fixator_images", "weyl", 4,
            "s swaps each blown-up point with its partner leaving the grid lines fixed, and r "
            "rotates the three remaining skew triples",
            [](const CheckContext&) {
                detail::Parts p;
                const auto& r = named_element('r');
                const auto& s = named_element('s');
                auto img = [](const LatticeIsometry& g, const LineLabel& l) {
                    return g.perm.apply(l);
                };
                p.require(img(r, LineLabel::E(1)) == LineLabel::Q(1), "r: E1");
                p.require(img(r, LineLabel::E(2)) == LineLabel::Q(2), "r: E2");
                p.require(img(r, LineLabel::E(3)) == LineLabel::Q(3), "r: E3");
                p.require(img(r, LineLabel::E(4)) == LineLabel::L(5, 6), "r: E4");
                p.require(img(r, LineLabel::E(5)) == LineLabel::L(4, 6), "r: E5");
                p.require(img(r, LineLabel::E(6)) == LineLabel::L(4, 5), "r: E6");
                for (int i = 1; i <= 6; ++i) {
                    p.require(img(s, LineLabel::E(i)) == LineLabel::Q(i),
                              "s: E" + std::to_string(i));
                    p.require(img(s, LineLabel::Q(i)) == LineLabel::E(i),
                              "s: Q" + std::to_string(i));
                }
                for (int i = 1; i <= 5; ++i)
                    for (int j = i + 1; j <= 6; ++j)
                        p.require(img(s, LineLabel::L(i, j)) == LineLabel::L(i, j),
                                  "s fixes " + to_string(LineLabel::L(i, j)));
                return p.result();
            });

        add("grid_fixator", "weyl", 4,
            "the pointwise fixator of the nine grid lines L_ij (i <= 3 < j) is exactly the "
            "order-6 group generated by r and s",
            [](const CheckContext&) {
                detail::Parts p;
                std::vector<LineLabel> grid;
                for (int i = 1; i <= 3; ++i)
                    for (int j = 4; j <= 6; ++j) grid.push_back(LineLabel::L(i, j));
                auto fix = IsometryGroup::weyl_e6().line_fixator(grid);
                p.require(fix.order() == 6, "fixator order");
                p.require(fix == detail::group_of_words({"r", "s"}), "fixator equals <r,s>");
                return p.result();
            });

        add("word_parser", "weyl", 0, "plumbing", [](const CheckContext&) {
            detail::Parts p;
            const auto& a = named_element('a');
            const auto& b = named_element('b');
            const auto& r = named_element('r');
            p.require(parse_word("abr") == compose(a, compose(b, r)), "abr composes right-first");
            p.require(parse_word("a2") == compose(a, a), "a2 squares");
            p.require(parse_word("a'") == inverse(a), "a' inverts");
            p.require(parse_word("a2b") == compose(compose(a, a), b), "a2b");
            p.require(detail::throws_ex<ParseError>([] { parse_word("x"); }), "unknown letter");
            p.require(detail::throws_ex<ParseError>([] { parse_word("a0"); }), "zero repeat");
            p.require(detail::throws_ex<ParseError>([] { parse_word(""); }), "empty word");
            p.require(parse_generator_words("a r, s").size() == 3, "word list splitting");
            p.require(detail::throws_ex<ParseError>([] { s6_from_cycles("(17)"); }),
                      "cycle digit out of range");
            p.require(detail::throws_ex<ParseError>([] { s6_from_cycles("(11)"); }),
                      "repeated cycle digit");
            return p.result();
        });

        add("centralizer_order", "weyl", 2,
            "the centralizer of the fixed-line-free order-3 group has order 108",
            [](const CheckContext&) {
                return detail::eq(108, static_cast<long long>(standard_centralizer().order()));
            });

        add("centralizer_product", "weyl", 2,
            "the order-108 centralizer is the product of the order-18 group <a,b,cs> and the "
            "order-6 group <r,s>, which commute elementwise and intersect trivially",
            [](const CheckContext&) {
                detail::Parts p;
                auto f1 = detail::group_of_words({"a", "b", "cs"});
                auto f2 = detail::group_of_words({"r", "s"});
                p.require(f1.order() == 18, "first factor order");
                p.require(f2.order() == 6, "second factor order");
                for (const auto& x : f1.elements())
                    for (const auto& y : f2.elements())
                        p.require(compose(x, y) == compose(y, x), "elementwise commutation");
                int common = 0;
                for (const auto& x : f1.elements())
                    if (f2.contains(x)) ++common;
                p.require(common == 1, "trivial intersection");
                p.require(join(f1, f2) == standard_centralizer(), "product spans the centralizer");
                return p.result();
            });

        add("s6_centralizer", "weyl", 3,
            "inside the point-permutation subgroup, the centralizer of the bicyclic element "
            "is <a,b,c> of order 18",
            [](const CheckContext&) {
                detail::Parts p;
                p.require(detail::s6_group().order() == 720, "point-permutation group order");
                auto cen = detail::s6_group().centralizer_of(standard_geometric_group());
                p.require(cen.order() == 18, "centralizer order");
                p.require(cen == detail::group_of_words({"a", "b", "c"}), "equals <a,b,c>");
                return p.result();
            });

        add("s6_class_size", "weyl", 3,
            "the bicyclic element has exactly 40 = 6!/(3!*3!*2) * 4 conjugates inside the "
            "point-permutation subgroup, by direct enumeration",
            [](const CheckContext&) {
                const LinePerm ab = parse_word("ab").perm;
                std::set<LinePerm> conj;
                for (const auto& w : detail::s6_group().elements())
                    conj.insert(compose(w, compose(ab, inverse(w))));
                long long formula = 720 / (6 * 6 * 2) * 4;
                detail::Parts p;
                p.require(formula == 40, "counting formula");
                p.require(static_cast<long long>(conj.size()) == 40, "enumerated class size");
                return p.result();
            });

        add("order3_classes", "weyl", 5,
            "the full group has exactly three conjugacy classes of order-3 elements; the class "
            "of the bicyclic element fixes no line and has invariant rank 3, and one other "
            "class has invariant rank 1",
            [](const CheckContext&) {
                detail::Parts p;
                auto classes = IsometryGroup::weyl_e6().element_classes_of_order(3);
                p.require(classes.size() == 3, "number of classes");
                const LinePerm ab = parse_word("ab").perm;
                int ab_class = -1;
                for (std::size_t k = 0; k < classes.size(); ++k)
                    if (std::binary_search(classes[k].begin(), classes[k].end(), ab))
                        ab_class = static_cast<int>(k);
                p.require(ab_class >= 0, "bicyclic element located");
                p.require(fixed_labels(ab).empty(), "no fixed line");
                p.require(invariant_rank(standard_geometric_group()) == 3, "invariant rank 3");
                bool rank_one_elsewhere = false;
                for (std::size_t k = 0; k < classes.size(); ++k) {
                    if (static_cast<int>(k) == ab_class) continue;
                    auto g = IsometryGroup::from_perm_generators({classes[k].front()});
                    if (invariant_rank(g) == 1) rank_one_elsewhere = true;
                }
                p.require(rank_one_elsewhere, "another class has invariant rank 1");
                return p.result();
            });

        add("s6_embed_consistency", "weyl", 0, "plumbing", [](const CheckContext&) {
            detail::Parts p;
            auto e12 = s6_embed(s6_from_cycles("(12)"));
            auto e123 = s6_embed(s6_from_cycles("(123)"));
            p.require(compose(e12, compose(e123, inverse(e12))).perm ==
                          s6_embed(s6_from_cycles("(213)")).perm,
                      "embedding respects conjugation");
            p.require(compose(e12, e12).perm.is_identity(), "transposition squares to identity");
            p.require(compose(e123, compose(e12, inverse(e123))).perm ==
                          s6_embed(s6_from_cycles("(23)")).perm,
                      "conjugating a transposition moves its support");
            p.require(named_element('a') == e123, "a is the embedded 3-cycle");
            return p.result();
        });

        add("isometry_invariants", "weyl", 15,
            "random products of the simple reflections preserve the pairing, fix the canonical "
            "class, and act consistently on the 27 lines",
            [](const CheckContext&) {
                detail::Parts p;
                SplitMix64 rng(0x15031525u);
                const auto& gens = simple_reflections();
                LinePerm cur = LinePerm::identity();
                int bad = 0;
                for (int step = 0; step < 1000; ++step) {
                    cur = compose(gens[rng.below(gens.size())].perm, cur);
                    try {
                        (void)isometry_from_perm(cur);
                    } catch (const NotIsometry&) {
                        ++bad;
                    }
                }
                p.require(bad == 0, std::to_string(bad) + " products failed validation");
                return p.result();
            });

        add("normal_witness_examples", "weyl", 0,
            "the witness search returns a nontrivial normal subgroup matched to a reference "
            "class, and nothing for the trivial group",
            [](const CheckContext&) {
                detail::Parts p;
                const auto& cands = detail::s5_candidate_groups();
                auto c5 = IsometryGroup::generate({s6_embed(s6_from_cycles("(12345)"))});
                auto w = normal_subgroup_witness(c5, detail::s5_handle(), cands);
                p.require(w.has_value() && w->candidate_index == 4, "five-cycle matches itself");
                auto a5 = cands[5];
                auto wa = normal_subgroup_witness(a5, detail::s5_handle(), cands);
                p.require(wa.has_value() && wa->candidate_index == 5,
                          "even subgroup matches itself");
                p.require(!normal_subgroup_witness(IsometryGroup::trivial(), detail::s5_handle(),
                                                   cands)
                               .has_value(),
                          "trivial group yields no witness");
                return p.result();
            });

        add("s5_subgroup_count", "weyl", 0,
            "regression: the degree-5 symmetric group has exactly 156 subgroups",
            [](const CheckContext&) {
                return detail::eq(156,
                                  static_cast<long long>(detail::s5_handle().all_subgroups().size()));
            });

        add("s5_normal_coverage", "weyl", 11,
            "every nontrivial subgroup of the degree-5 symmetric group has a normal subgroup "
            "conjugate to one of the six reference classes",
            [](const CheckContext&) {
                const auto& s5 = detail::s5_handle();
                const auto& cands = detail::s5_candidate_groups();
                int total = 0;
                int covered = 0;
                for (const auto& g : s5.all_subgroups()) {
                    if (g.is_trivial()) continue;
                    ++total;
                    if (normal_subgroup_witness(g, s5, cands)) ++covered;
                }
                return detail::eq("155 of 155 covered", std::to_string(covered) + " of " +
                                                            std::to_string(total) + " covered");
            });

        add("centralizer_subgroup_count", "weyl", 0,
            "regression: subgroup count of the order-108 centralizer; budget guard on the "
            "full group",
            [](const CheckContext&) {
                detail::Parts p;
                p.require(detail::throws_ex<BudgetExceeded>(
                              [] { IsometryGroup::weyl_e6().all_subgroups(); }),
                          "full group exceeds the subgroup budget");
                auto subs = standard_centralizer().all_subgroups();
                p.require(subs.size() == 152, "subgroup count " + std::to_string(subs.size()));
                return p.result();
            });

        // ------------------------------------------------------------------
        // minimality
        // ------------------------------------------------------------------

        add("invariant_ranks", "minimality", 6,
            "invariant ranks: trivial group 7; <ab> 3; <abcs>, <a2b,cs>, <abr>, <a2br> all 1",
            [](const CheckContext&) {
                auto rank = [](const std::vector<std::string>& words) {
                    return invariant_rank(detail::group_of_words(words));
                };
                std::string got = std::to_string(invariant_rank(IsometryGroup::trivial())) + " " +
                                  std::to_string(rank({"ab"})) + " " +
                                  std::to_string(rank({"abcs"})) + " " +
                                  std::to_string(rank({"a2b", "cs"})) + " " +
                                  std::to_string(rank({"abr"})) + " " +
                                  std::to_string(rank({"a2br"}));
                return detail::eq("7 3 1 1 1 1", got);
            });

        add("image_classes", "minimality", 7,
            "exactly ten classes of commuting images with invariant rank at least 2 force a "
            "minimal joint action, matching the named list up to normalizer conjugacy",
            [](const CheckContext&) {
                detail::Parts p;
                const auto& classes = galois_image_classes();
                p.require(classes.size() == 10,
                          "class count " + std::to_string(classes.size()));
                const auto& nor = standard_normalizer();
                std::set<std::size_t> used;
                for (const auto& words : detail::expected_image_class_words()) {
                    auto g = detail::group_of_words(words);
                    int hits = 0;
                    std::size_t where = 0;
                    for (std::size_t k = 0; k < classes.size(); ++k)
                        if (nor.conjugates_onto(classes[k], g)) {
                            ++hits;
                            where = k;
                        }
                    std::string label;
                    for (const auto& w : words) label += w + " ";
                    p.require(hits == 1, "named group <" + label + "> matches " +
                                             std::to_string(hits) + " classes");
                    if (hits == 1) used.insert(where);
                }
                p.require(used.size() == classes.size(), "matching is a bijection");
                return p.result();
            });

        add("rational_filter", "minimality", 7,
            "exactly five of the ten classes keep the surface rational (reachable degree at "
            "least 5), matching the named sublist",
            [](const CheckContext&) {
                detail::Parts p;
                auto filtered = rational_x_filter(galois_image_classes());
                p.require(filtered.size() == 5, "filter count " + std::to_string(filtered.size()));
                const auto& nor = standard_normalizer();
                std::set<std::size_t> used;
                for (const auto& words : detail::expected_rational_filter_words()) {
                    auto g = detail::group_of_words(words);
                    int hits = 0;
                    std::size_t where = 0;
                    for (std::size_t k = 0; k < filtered.size(); ++k)
                        if (nor.conjugates_onto(filtered[k], g)) {
                            ++hits;
                            where = k;
                        }
                    std::string label;
                    for (const auto& w : words) label += w + " ";
                    p.require(hits == 1, "named group <" + label + "> matches " +
                                             std::to_string(hits) + " filtered classes");
                    if (hits == 1) used.insert(where);
                }
                p.require(used.size() == filtered.size(), "matching is a bijection");
                return p.result();
            });

        add("degree_trivial", "minimality", 8,
            "with no symmetry constraint the contraction search reaches degree 9 by blowing "
            "down the six points",
            [](const CheckContext&) {
                auto r = max_reachable_degree(IsometryGroup::trivial());
                return detail::eq("degree 9 via [E1][E2][E3][E4][E5][E6]",
                                  "degree " + std::to_string(r.max_degree) + " via " +
                                      detail::witness_string(r.witness));
            });

        add("degree_ars", "minimality", 8,
            "under <a,r,s> the search reaches degree 9 (hence at least 6), and the witness "
            "starts with the skew triple {E4, L56, Q4}",
            [](const CheckContext&) {
                detail::Parts p;
                auto r = max_reachable_degree(detail::group_of_words({"a", "r", "s"}));
                p.require(r.max_degree >= 6, "degree at least 6");
                p.require(r.max_degree == 9, "degree exactly 9");
                bool has_triple = false;
                std::vector<LineLabel> want = {LineLabel::E(4), LineLabel::L(5, 6),
                                               LineLabel::Q(4)};
                std::sort(want.begin(), want.end());
                for (const auto& orbit : r.witness) {
                    auto sorted = orbit;
                    std::sort(sorted.begin(), sorted.end());
                    if (sorted == want) has_triple = true;
                }
                p.require(has_triple, "witness contains the skew triple");
                p.require(detail::witness_string(r.witness) == "[E4 L56 Q4][L15 L25 L35]",
                          "lexicographically least witness");
                return p.result();
            });

        add("degree_cs", "minimality", 8,
            "under <cs> every equivariant contraction stops at degree 4 with terminal invariant "
            "rank 2, so the conic-fibration caveat applies",
            [](const CheckContext&) {
                detail::Parts p;
                auto r = max_reachable_degree(detail::group_of_words({"cs"}));
                p.require(r.max_degree == 4, "degree " + std::to_string(r.max_degree));
                p.require(r.terminal_invariant_rank == 2,
                          "terminal rank " + std::to_string(r.terminal_invariant_rank));
                p.require(r.conic_bundle_caveat, "caveat flagged");
                p.require(detail::witness_string(r.witness) == "[L14]", "witness");
                return p.result();
            });

        add("degree_cr", "minimality", 8,
            "under <c,r> every equivariant contraction stops at degree 4 with terminal "
            "invariant rank 2",
            [](const CheckContext&) {
                detail::Parts p;
                auto r = max_reachable_degree(detail::group_of_words({"c", "r"}));
                p.require(r.max_degree == 4, "degree " + std::to_string(r.max_degree));
                p.require(r.terminal_invariant_rank == 2,
                          "terminal rank " + std::to_string(r.terminal_invariant_rank));
                p.require(r.conic_bundle_caveat, "caveat flagged");
                p.require(detail::witness_string(r.witness) == "[L14]", "witness");
                return p.result();
            });

        add("degree_conjugation_invariance", "minimality", 15,
            "order, invariant rank, and reachable degree are unchanged under 20 random "
            "conjugations of each image class representative",
            [](const CheckContext&) {
                detail::Parts p;
                SplitMix64 rng(0xC0417A7Eu);
                const auto& pool = IsometryGroup::weyl_e6().elements();
                for (std::size_t k = 0; k < galois_image_classes().size(); ++k) {
                    const auto& rep = galois_image_classes()[k];
                    auto base_order = rep.order();
                    int base_rank = invariant_rank(rep);
                    int base_degree = max_reachable_degree(rep).max_degree;
                    for (int t = 0; t < 20; ++t) {
                        const LinePerm& w = pool[rng.below(pool.size())];
                        LinePerm wi = inverse(w);
                        std::vector<LinePerm> conj;
                        for (const auto& g : rep.generators())
                            conj.push_back(compose(w, compose(g, wi)));
                        auto moved = IsometryGroup::from_perm_generators(conj);
                        p.require(moved.order() == base_order,
                                  "order drifted for class " + std::to_string(k));
                        p.require(invariant_rank(moved) == base_rank,
                                  "rank drifted for class " + std::to_string(k));
                        p.require(max_reachable_degree(moved).max_degree == base_degree,
                                  "degree drifted for class " + std::to_string(k));
                    }
                }
                return p.result();
            });

        add("analyze_examples", "minimality", 0,
            "lattice-level verdicts: <r> keeps the surface rational with a non-rational "
            "quotient; <cs> blocks the surface; the trivial image is non-minimal with a "
            "rational quotient; images must commute",
            [](const CheckContext&) {
                detail::Parts p;
                auto verdict = [](const IsometryGroup& img, bool point = true) {
                    GaloisScenario sc;
                    sc.galois_image = img;
                    sc.point_assumption = point;
                    return analyze(sc);
                };
                auto vr = verdict(detail::group_of_words({"r"}));
                p.require(vr.g_minimal, "<r>: minimal");
                p.require(vr.x_rational == Tri::rational, "<r>: surface rational");
                p.require(vr.quotient_rational == Tri::not_rational, "<r>: quotient not rational");
                auto vcs = verdict(detail::group_of_words({"cs"}));
                p.require(vcs.g_minimal, "<cs>: minimal");
                p.require(vcs.x_rational == Tri::not_rational, "<cs>: surface not rational");
                p.require(vcs.quotient_rational == Tri::unknown, "<cs>: quotient undecided");
                auto vt = verdict(IsometryGroup::trivial());
                p.require(!vt.g_minimal, "trivial image: not minimal");
                p.require(vt.x_rational == Tri::rational, "trivial image: surface rational");
                p.require(vt.quotient_rational == Tri::rational, "trivial image: quotient rational");
                auto vars = verdict(detail::group_of_words({"a", "r", "s"}));
                p.require(vars.x_rational == Tri::rational, "<a,r,s>: surface rational");
                p.require(vars.quotient_rational == Tri::not_rational,
                          "<a,r,s>: quotient not rational");
                auto vnp = verdict(detail::group_of_words({"r"}), false);
                p.require(vnp.x_rational == Tri::unknown, "no point: surface undecided");
                p.require(vnp.quotient_rational == Tri::unknown, "no point: quotient undecided");
                p.require(detail::throws_ex<CommutationViolation>([&] {
                              GaloisScenario sc;
                              sc.galois_image = IsometryGroup::generate(
                                  {s6_embed(s6_from_cycles("(12)"))});
                              analyze(sc);
                          }),
                          "non-commuting image rejected");
                return p.result();
            });

        // ------------------------------------------------------------------
        // quotients
        // ------------------------------------------------------------------

        add("table_values", "quotients", 10,
            "resolution data for the four supported cyclic singularities, and rejection of "
            "any other type",
            [](const CheckContext&) {
                detail::Parts p;
                auto row = [&p](int m, int q, const Rat& dk, const Rat& dc, const Rat& dd,
                                const std::vector<int>& chain) {
                    auto d = table1_delta({m, q});
                    std::string tag = to_string(SingularityType{m, q});
                    p.require(d.dK2 == dk, tag + ": canonical shift");
                    p.require(d.dC2 == dc, tag + ": first branch shift");
                    p.require(d.dD2 == dd, tag + ": second branch shift");
                    p.require(d.chain == chain, tag + ": chain");
                };
                row(2, 1, Rat(0), Rat(-1, 2), Rat(-1, 2), {-2});
                row(3, 1, Rat(-1, 3), Rat(-1, 3), Rat(-1, 3), {-3});
                row(3, 2, Rat(0), Rat(-2, 3), Rat(-2, 3), {-2, -2});
                row(5, 2, Rat(-2, 5), Rat(-2, 5), Rat(-3, 5), {-3, -2});
                p.require(detail::throws_ex<UnsupportedSingularity>([] { table1_delta({7, 3}); }),
                          "unsupported type rejected");
                p.require(detail::throws_ex<UnsupportedSingularity>([] { table1_delta({5, 1}); }),
                          "unsupported fifth-order type rejected");
                return p.result();
            });

        add("chain_definiteness", "quotients", 0,
            "each supported exceptional chain has negative definite intersection matrix",
            [](const CheckContext&) {
                detail::Parts p;
                for (auto [m, q] : {std::pair{2, 1}, {3, 1}, {3, 2}, {5, 2}}) {
                    auto d = table1_delta({m, q});
                    p.require(chain_is_negative_definite(d.chain),
                              to_string(SingularityType{m, q}) + " chain");
                }
                p.require(chain_is_negative_definite({-1}), "single (-1) chain");
                p.require(!chain_is_negative_definite({0}), "degenerate chain rejected");
                p.require(!chain_is_negative_definite({2}), "positive chain rejected");
                p.require(!chain_is_negative_definite({-2, 0}), "mixed chain rejected");
                return p.result();
            });

        add("hurwitz_examples", "quotients", 0,
            "canonical degree under quotients: K^2 maps to c^2 K^2 / n, multiplicative in "
            "towers",
            [](const CheckContext&) {
                detail::Parts p;
                p.require(hurwitz_k2(3, 1, Rat(3)) == Rat(1), "order 3, no pullback factor");
                p.require(hurwitz_k2(9, 5, Rat(3)) == Rat(25, 3), "order 9, factor 5");
                p.require(hurwitz_k2(2, 2, Rat(3)) == Rat(6), "order 2, factor 2");
                p.require(hurwitz_k2(60, 6, Rat(3)) == Rat(9, 5), "order 60, factor 6");
                p.require(detail::throws_ex<Error>([] { hurwitz_k2(0, 1, Rat(3)); }),
                          "zero order rejected");
                SplitMix64 rng(0x80111213u);
                for (int t = 0; t < 20; ++t) {
                    int n1 = 1 + static_cast<int>(rng.below(6));
                    int n2 = 1 + static_cast<int>(rng.below(6));
                    int c1 = 1 + static_cast<int>(rng.below(4));
                    int c2 = 1 + static_cast<int>(rng.below(4));
                    Rat base(static_cast<long>(rng.range(9)), 1 + static_cast<long>(rng.below(5)));
                    p.require(hurwitz_k2(n1 * n2, c1 * c2, base) ==
                                  hurwitz_k2(n2, c2, hurwitz_k2(n1, c1, base)),
                              "tower multiplicativity");
                }
                return p.result();
            });

        add("scenario_files", "quotients", 10,
            "each stored quotient scenario reproduces its expected canonical degrees, curve "
            "self-intersections, and post-contraction degree",
            [](const CheckContext& ctx) {
                detail::Parts p;
                const char* files[] = {"order3_three_a2",     "klein_four",
                                       "icosahedral",         "involution_one_a1",
                                       "order3_fixed_curve",  "order3_six_fixed_points",
                                       "bicyclic_order9"};
                for (const char* f : files) {
                    Json j = load_json_file(ctx.data_dir + "/scenarios/" + f + ".json");
                    auto sc = scenario_from_json(j);
                    auto res = evaluate_scenario(sc);
                    const Json& e = j.at("expected");
                    p.require(res.quotient_k2 == rat_from_json(e.at("quotient_k2")),
                              std::string(f) + ": quotient degree");
                    p.require(res.resolved_k2 == rat_from_json(e.at("resolved_k2")),
                              std::string(f) + ": resolved degree");
                    const Json& curves = e.at("curve_self_intersections");
                    p.require(res.curve_self_intersections.size() == curves.size(),
                              std::string(f) + ": curve count");
                    for (std::size_t i = 0; i < curves.size() &&
                                             i < res.curve_self_intersections.size();
                         ++i)
                        p.require(res.curve_self_intersections[i] == rat_from_json(curves[i]),
                                  std::string(f) + ": curve " + std::to_string(i));
                    Rat post = post_contraction_degree(res.resolved_k2,
                                                       e.at("contract_count").get<int>());
                    p.require(post == rat_from_json(e.at("post_contraction_degree")),
                              std::string(f) + ": post-contraction degree");
                }
                return p.result();
            });

        add("scenario_order_independence", "quotients", 0,
            "scenario evaluation does not depend on the order of the singularity or curve lists",
            [](const CheckContext& ctx) {
                detail::Parts p;
                const char* files[] = {"order3_three_a2", "icosahedral",
                                       "order3_six_fixed_points"};
                for (const char* f : files) {
                    Json j = load_json_file(ctx.data_dir + "/scenarios/" + f + ".json");
                    auto sc = scenario_from_json(j);
                    auto base = evaluate_scenario(sc);
                    auto flipped = sc;
                    std::reverse(flipped.singularities.begin(), flipped.singularities.end());
                    std::reverse(flipped.curves.begin(), flipped.curves.end());
                    auto res = evaluate_scenario(flipped);
                    p.require(res.quotient_k2 == base.quotient_k2,
                              std::string(f) + ": quotient degree stable");
                    p.require(res.resolved_k2 == base.resolved_k2,
                              std::string(f) + ": resolved degree stable");
                    auto rev = base.curve_self_intersections;
                    std::reverse(rev.begin(), rev.end());
                    p.require(res.curve_self_intersections == rev,
                              std::string(f) + ": curves track their names");
                }
                return p.result();
            });

        // ------------------------------------------------------------------
        // eisenstein
        // ------------------------------------------------------------------

        add("field_ops", "eisenstein", 0,
            "arithmetic in the cube-root field: unit relations, norm, conjugation, division",
            [](const CheckContext&) {
                detail::Parts p;
                FieldElement w = FieldElement::omega();
                p.require(w * w * w == FieldElement(1), "omega cubes to one");
                p.require((w * w) == w.conj(), "omega squared is the conjugate");
                FieldElement x(Rat(1), Rat(2)); // 1 + 2w
                p.require(x.norm() == Rat(3), "norm of 1+2w");
                p.require(x.conj() == FieldElement(Rat(-1), Rat(-2)), "conjugate of 1+2w");
                p.require(w.inv() == FieldElement(Rat(-1), Rat(-1)), "inverse of omega");
                p.require(detail::throws_ex<DivisionByZero>([] { FieldElement(0).inv(); }),
                          "zero has no inverse");
                SplitMix64 rng(0xF1E1DD1Eu);
                for (int t = 0; t < 50; ++t) {
                    FieldElement u(Rat(rng.range(9)), Rat(rng.range(9)));
                    FieldElement v(Rat(rng.range(9)), Rat(rng.range(9)));
                    if (v.is_zero()) continue;
                    p.require((u * v) / v == u, "division round-trip");
                    p.require((u * v).norm() == u.norm() * v.norm(), "norm multiplicativity");
                }
                return p.result();
            });

        add("sqrt_examples", "eisenstein", 0,
            "square roots in the field: -3 is a square, 2 is not, and squares are recognized",
            [](const CheckContext&) {
                detail::Parts p;
                auto s3 = field_sqrt(FieldElement(-3));
                p.require(s3.has_value(), "-3 has a root");
                if (s3) p.require((*s3) * (*s3) == FieldElement(-3), "-3 root squares back");
                FieldElement w12(Rat(1), Rat(2));
                p.require(w12 * w12 == FieldElement(-3), "1+2w squares to -3");
                auto s1 = field_sqrt(FieldElement(1));
                p.require(s1 && (*s1) * (*s1) == FieldElement(1), "1 has a root");
                p.require(!is_square(FieldElement(2)), "2 is not a square");
                p.require(!is_square(FieldElement(-1)), "-1 is not a square");
                FieldElement w1(Rat(1), Rat(1));
                p.require(w1 * w1 == FieldElement::omega(), "1+w squares to w");
                p.require(is_square(FieldElement::omega()), "omega is a square");
                p.require(is_square(FieldElement(Rat(-27))), "-27 is a square");
                SplitMix64 rng(0x5004A4E5u);
                for (int t = 0; t < 50; ++t) {
                    FieldElement x(Rat(rng.range(9), 1 + rng.below(4)),
                                   Rat(rng.range(9), 1 + rng.below(4)));
                    auto s = field_sqrt(x * x);
                    p.require(s.has_value(), "square recognized");
                    if (s) p.require((*s) * (*s) == x * x, "root squares back");
                }
                return p.result();
            });

        add("roots_examples", "eisenstein", 0,
            "cubic root finding in the field: full split, no roots, rational split, and "
            "multiplicity",
            [](const CheckContext&) {
                detail::Parts p;
                auto roots_str = [](const CubicPoly& q) {
                    std::string s;
                    for (const auto& r : roots_in_field(q)) {
                        if (!s.empty()) s += ", ";
                        s += to_string(r);
                    }
                    return "{" + s + "}";
                };
                auto c = [](int c3, int c2, int c1, int c0) {
                    return CubicPoly::make(FieldElement(c3), FieldElement(c2), FieldElement(c1),
                                           FieldElement(c0));
                };
                p.require(roots_str(c(1, 0, 0, 1)) == "{-1, -w, 1+w}", // z^3 + 1
                          "z^3+1 splits into the three sign-flipped cube roots of unity, got " +
                              roots_str(c(1, 0, 0, 1)));
                p.require(roots_in_field(c(1, 0, 0, -2)).empty(), "z^3-2 has no root");
                p.require(roots_str(c(1, 0, -1, 0)) == "{-1, 0, 1}", "x^3-x splits");
                p.require(roots_str(c(1, 0, -3, 2)) == "{-2, 1, 1}",
                          "double root kept with multiplicity, got " + roots_str(c(1, 0, -3, 2)));
                p.require(detail::throws_ex<Error>([] {
                              CubicPoly::make(FieldElement(0), FieldElement(1), FieldElement(0),
                                              FieldElement(1));
                          }),
                          "zero leading coefficient rejected");
                return p.result();
            });

        add("disc_examples", "eisenstein", 0,
            "cubic discriminants: -27 for z^3-1, 0 for a repeated root, -108 for z^3-2, "
            "-864 for the stored family cubic",
            [](const CheckContext&) {
                detail::Parts p;
                auto c = [](int c3, int c2, int c1, int c0) {
                    return CubicPoly::make(FieldElement(c3), FieldElement(c2), FieldElement(c1),
                                           FieldElement(c0));
                };
                p.require(cubic_discriminant(c(1, 0, 0, -1)) == FieldElement(-27), "z^3-1");
                p.require(cubic_discriminant(c(1, 0, -3, 2)).is_zero(), "(x-1)^2(x+2)");
                p.require(cubic_discriminant(c(1, 0, 0, -2)) == FieldElement(-108), "z^3-2");
                p.require(cubic_discriminant(c(4, -9, -6, -1)) == FieldElement(-864),
                          "family cubic");
                return p.result();
            });

        add("galois_examples", "eisenstein", 12,
            "Galois classes over the cube-root field: z^3+1 splits, x^3-2x keeps a quadratic, "
            "z^3-2 is cyclic cubic, the stored family cubic is full S3",
            [](const CheckContext&) {
                detail::Parts p;
                auto c = [](int c3, int c2, int c1, int c0) {
                    return CubicPoly::make(FieldElement(c3), FieldElement(c2), FieldElement(c1),
                                           FieldElement(c0));
                };
                p.require(cubic_galois_group(c(1, 0, 0, 1)) == GaloisClass::Trivial, "z^3+1");
                p.require(cubic_galois_group(c(1, 0, -2, 0)) == GaloisClass::C2, "x^3-2x");
                p.require(cubic_galois_group(c(1, 0, 0, -2)) == GaloisClass::C3, "z^3-2");
                p.require(cubic_galois_group(c(4, -9, -6, -1)) == GaloisClass::S3, "family cubic");
                p.require(detail::throws_ex<InseparableInput>(
                              [&] { cubic_galois_group(c(1, 0, -3, 2)); }),
                          "repeated root rejected");
                return p.result();
            });

        add("galois_oracle", "eisenstein", 12,
            "the discriminant-and-roots classifier agrees with an independent numeric oracle "
            "on 200 random separable cubics",
            [](const CheckContext&) {
                detail::Parts p;
                auto c = [](int c3, int c2, int c1, int c0) {
                    return CubicPoly::make(FieldElement(c3), FieldElement(c2), FieldElement(c1),
                                           FieldElement(c0));
                };
                for (const auto& q : {c(1, 0, 0, 1), c(1, 0, -2, 0), c(1, 0, 0, -2),
                                      c(4, -9, -6, -1)})
                    p.require(cubic_galois_group(q) == detail::oracle_galois_class(q),
                              "oracle agreement on " + to_string(q));
                SplitMix64 rng(0xE15E57E1u);
                int tested = 0;
                while (tested < 200) {
                    auto coef = [&rng] {
                        return FieldElement(Rat(rng.range(3)), Rat(rng.range(3)));
                    };
                    FieldElement lead = coef();
                    if (lead.is_zero()) continue;
                    CubicPoly q = CubicPoly::make(lead, coef(), coef(), coef());
                    if (cubic_discriminant(q).is_zero()) continue;
                    ++tested;
                    p.require(cubic_galois_group(q) == detail::oracle_galois_class(q),
                              "oracle disagreement on " + to_string(q));
                }
                return p.result();
            });

        add("is_cube_examples", "eisenstein", 0,
            "cube recognition in the field: integer cubes pass, 2 and omega do not",
            [](const CheckContext&) {
                detail::Parts p;
                p.require(is_cube(FieldElement(8)), "8");
                p.require(is_cube(FieldElement(-27)), "-27");
                p.require(is_cube(FieldElement(5832)), "18^3");
                p.require(is_cube(FieldElement(0)), "0");
                p.require(!is_cube(FieldElement(2)), "2 rejected");
                p.require(!is_cube(FieldElement::omega()), "omega rejected");
                p.require(is_cube(FieldElement(Rat(1, 8))), "1/8");
                return p.result();
            });

        add("resolvent_same_field", "eisenstein", 0,
            "cyclic cubics generate the same extension exactly when the resolvent cube test "
            "says so: z^3-2 matches z^3-4 but not z^3-3, and a non-pure cyclic cubic matches "
            "itself only",
            [](const CheckContext&) {
                detail::Parts p;
                auto c = [](int c3, int c2, int c1, int c0) {
                    return CubicPoly::make(FieldElement(c3), FieldElement(c2), FieldElement(c1),
                                           FieldElement(c0));
                };
                CubicPoly f = c(1, 0, 0, -2);
                CubicPoly g = c(4, 0, 0, -16); // same roots as z^3 - 4
                CubicPoly h = c(1, 0, 0, -3);
                CubicPoly k = c(1, 0, -3, 1); // cyclic with square discriminant 81
                p.require(cubic_galois_group(k) == GaloisClass::C3, "x^3-3x+1 is cyclic");
                p.require(same_splitting_field(f, g), "cube root of 2 vs cube root of 4");
                p.require(!same_splitting_field(f, h), "cube root of 2 vs cube root of 3");
                p.require(same_splitting_field(f, f), "self comparison");
                p.require(same_splitting_field(k, k), "non-pure self comparison");
                p.require(!same_splitting_field(f, k), "pure vs non-pure");
                return p.result();
            });

        // ------------------------------------------------------------------
        // surfaces
        // ------------------------------------------------------------------

        add("binary_class_examples", "surfaces", 0,
            "splitting classes of binary cubics, including the degenerate leading-coefficient "
            "cases",
            [](const CheckContext&) {
                detail::Parts p;
                auto b = [](int p3, int p2, int p1, int p0) {
                    return BinaryCubic{FieldElement(p3), FieldElement(p2), FieldElement(p1),
                                       FieldElement(p0)};
                };
                p.require(binary_galois_class(b(0, 1, 0, -1)) == GaloisClass::Trivial,
                          "y(x-y)(x+y)");
                p.require(binary_galois_class(b(0, 1, 0, -2)) == GaloisClass::C2, "y(x^2-2y^2)");
                p.require(binary_galois_class(b(1, 0, -2, 0)) == GaloisClass::C2, "x(x^2-2y^2)");
                p.require(binary_galois_class(b(4, 0, -4, 0)) == GaloisClass::Trivial,
                          "4x(x-y)(x+y)");
                p.require(detail::throws_ex<InseparableInput>(
                              [&] { binary_galois_class(b(0, 0, 1, 0)); }),
                          "linear-only form rejected");
                p.require(detail::throws_ex<InseparableInput>(
                              [&] { binary_galois_class(b(0, 1, 2, 1)); }),
                          "repeated affine root rejected");
                return p.result();
            });

        add("auxiliary_cubics", "surfaces", 0,
            "the four auxiliary cubics of a surface: triple-point splitting, tangent-plane "
            "section, fixed-point section, and one-parameter family",
            [](const CheckContext&) {
                detail::Parts p;
                auto fe = [](int n) { return FieldElement(n); };
                SurfaceSpec s;
                s.P = {fe(1), fe(0), fe(-2), fe(0)};
                s.u = fe(3);
                s.v = fe(0);
                s.alpha = fe(1);
                s.normal_form = NormalForm{fe(1), fe(2)};
                p.require(eckardt_cubic(s) ==
                              CubicPoly::make(fe(1), fe(0), fe(0), fe(1)),
                          "triple-point cubic");
                BinaryCubic t = tangent_cubic(s);
                p.require(t == BinaryCubic{fe(2), fe(0), fe(-2), fe(0)},
                          "tangent section with u=3");
                p.require(fixed_points_cubic(s) == s.P, "fixed-point section");
                p.require(family_cubic(s) == CubicPoly::make(fe(4), fe(-9), fe(-6), fe(-1)),
                          "family cubic");

                SurfaceSpec plain = s;
                plain.u = fe(0);
                plain.normal_form.reset();
                p.require(tangent_cubic(plain) == plain.P, "tangent equals P when u=v=0");
                p.require(detail::throws_ex<MissingNormalForm>([&] { family_cubic(plain); }),
                          "family cubic needs the normal form");

                SurfaceSpec other = s;
                other.P = {fe(1), fe(0), fe(-1), fe(0)};
                other.normal_form = NormalForm{fe(1), fe(1)};
                p.require(tangent_cubic(other) == BinaryCubic{fe(2), fe(0), fe(-1), fe(0)},
                          "tangent section of the second normal form");
                p.require(binary_galois_class(tangent_cubic(other)) == GaloisClass::C2,
                          "second tangent section keeps a quadratic");

                SurfaceSpec degen = s;
                degen.u = fe(0);
                degen.P = {fe(1), fe(0), fe(0), fe(0)};
                degen.normal_form = NormalForm{fe(0), fe(1)};
                p.require(detail::throws_ex<Error>([&] { validate_surface(degen); }),
                          "x^3 with a zero normal form weight is rejected");

                SplitMix64 rng(0x7A46E47Au);
                for (int i = 0; i < 20; ++i) {
                    SurfaceSpec rnd;
                    rnd.P = {fe(1 + static_cast<int>(rng.below(5))),
                             FieldElement(Rat(rng.range(4))), FieldElement(Rat(rng.range(4))),
                             FieldElement(Rat(rng.range(4)))};
                    rnd.u = fe(0);
                    rnd.v = fe(0);
                    rnd.alpha = fe(1 + static_cast<int>(rng.below(5)));
                    p.require(tangent_cubic(rnd) == rnd.P, "tangent equals P when u=v=0");
                }
                return p.result();
            });

        add("eckardt_identity", "surfaces", 14,
            "the tangent-plane factorization holds identically over 50 random nonzero alpha, "
            "and fails as soon as the triple-product coefficient is perturbed",
            [](const CheckContext&) {
                detail::Parts p;
                SplitMix64 rng(0xECA4D700u);
                int tested = 0;
                while (tested < 50) {
                    FieldElement alpha(Rat(rng.range(9), 1 + rng.below(3)),
                                       Rat(rng.range(9), 1 + rng.below(3)));
                    if (alpha.is_zero()) continue;
                    SurfaceSpec s;
                    s.P = {FieldElement(1), FieldElement(Rat(rng.range(3))),
                           FieldElement(Rat(rng.range(3))), FieldElement(Rat(rng.range(3)))};
                    s.u = FieldElement(Rat(rng.range(3)));
                    s.v = FieldElement(Rat(rng.range(3)));
                    s.alpha = alpha;
                    p.require(verify_eckardt_identity(s), "identity at alpha " + to_string(alpha));
                    ++tested;
                }
                SurfaceSpec s;
                s.P = {FieldElement(1), FieldElement(0), FieldElement(0), FieldElement(0)};
                s.u = FieldElement(1);
                s.v = FieldElement(0);
                s.alpha = FieldElement(2);
                p.require(verify_eckardt_identity(s, 3), "exact coefficient passes");
                p.require(!verify_eckardt_identity(s, 4), "perturbed coefficient fails");
                return p.result();
            });

        add("golden_files", "surfaces", 13,
            "the four stored surfaces reproduce their expected profiles, lattice images, "
            "auxiliary cubics, and verdicts, each with a minimal joint action",
            [](const CheckContext& ctx) {
                detail::Parts p;
                const char* files[] = {"both_rational", "rational_nonrational_quotient",
                                       "nonrational_rational_quotient", "neither_rational"};
                for (const char* f : files) {
                    Json j = load_json_file(ctx.data_dir + "/surfaces/" + f + ".json");
                    SurfaceSpec s = surface_from_json(j);
                    const Json& e = j.at("expected");
                    const Json& ep = e.at("profile");
                    auto cls = classify(s);
                    p.require(to_string(cls.profile.g1) == ep.at("g1").get<std::string>(),
                              std::string(f) + ": triple-point class");
                    p.require(to_string(cls.profile.g2) == ep.at("g2").get<std::string>(),
                              std::string(f) + ": tangent class");
                    p.require(to_string(cls.profile.g3) == ep.at("g3").get<std::string>(),
                              std::string(f) + ": fixed-point class");
                    p.require(cls.profile.g4_has_order3.has_value() &&
                                  *cls.profile.g4_has_order3 ==
                                      ep.at("g4_has_order3").get<bool>(),
                              std::string(f) + ": family order-3 flag");
                    p.require(cls.image_name == e.at("image").get<std::string>(),
                              std::string(f) + ": image " + cls.image_name);
                    p.require(cls.verdict.g_minimal == e.at("g_minimal").get<bool>(),
                              std::string(f) + ": minimality");
                    p.require(cls.verdict.x_rational ==
                                  tri_from_string(e.at("x_rational").get<std::string>()),
                              std::string(f) + ": surface verdict");
                    p.require(cls.verdict.quotient_rational ==
                                  tri_from_string(e.at("quotient_rational").get<std::string>()),
                              std::string(f) + ": quotient verdict");
                    p.require(tangent_cubic(s) == binary_from_json(e.at("tangent_cubic")),
                              std::string(f) + ": tangent cubic coefficients");
                    p.require(family_cubic(s) == cubic_from_json(e.at("family_cubic")),
                              std::string(f) + ": family cubic coefficients");
                }
                return p.result();
            });

        add("image_properties", "surfaces", 0,
            "every inferred lattice image commutes with the order-3 action and lands in the "
            "ten-class list up to normalizer conjugacy",
            [](const CheckContext& ctx) {
                detail::Parts p;
                const char* files[] = {"both_rational", "rational_nonrational_quotient",
                                       "nonrational_rational_quotient", "neither_rational"};
                const LinePerm ab = parse_word("ab").perm;
                for (const char* f : files) {
                    Json j = load_json_file(ctx.data_dir + "/surfaces/" + f + ".json");
                    auto cls = classify(surface_from_json(j));
                    p.require(cls.galois_image.has_value(), std::string(f) + ": image claimed");
                    if (!cls.galois_image) continue;
                    for (const auto& g : cls.galois_image->generators())
                        p.require(compose(g, ab) == compose(ab, g),
                                  std::string(f) + ": image commutes");
                    bool listed = false;
                    for (const auto& rep : galois_image_classes())
                        if (standard_normalizer().conjugates_onto(*cls.galois_image, rep))
                            listed = true;
                    p.require(listed, std::string(f) + ": image in the ten-class list");
                }
                return p.result();
            });

        add("profile_dictionary", "surfaces", 0,
            "the profile dictionary claims a lattice image for exactly the four split "
            "triple-point profiles",
            [](const CheckContext&) {
                detail::Parts p;
                auto name_of = [](GaloisClass g2, GaloisClass g3, std::optional<bool> g4) {
                    GaloisProfile pr{GaloisClass::Trivial, g2, g3, g4, std::nullopt};
                    std::string name;
                    auto img = infer_galois_image(pr, &name);
                    return img ? name : std::string("-");
                };
                using G = GaloisClass;
                p.require(name_of(G::Trivial, G::Trivial, true) == "<r>", "split/split row");
                p.require(name_of(G::Trivial, G::C2, true) == "<r,s>", "split/quadratic row");
                p.require(name_of(G::C2, G::Trivial, true) == "<c,r>", "quadratic/split row");
                p.require(name_of(G::C2, G::C2, true) == "<cs>", "quadratic/quadratic row");
                p.require(name_of(G::C2, G::C2, std::nullopt) == "<cs>",
                          "last row needs no family flag");
                p.require(name_of(G::Trivial, G::Trivial, std::nullopt) == "-",
                          "missing family flag claims nothing");
                p.require(name_of(G::Trivial, G::Trivial, false) == "-",
                          "family without order 3 claims nothing");
                GaloisProfile c3{G::C3, G::Trivial, G::Trivial, true, std::nullopt};
                p.require(!infer_galois_image(c3).has_value(),
                          "unsplit triple point claims nothing");
                return p.result();
            });

        add("validation", "surfaces", 0, "plumbing", [](const CheckContext&) {
            detail::Parts p;
            auto fe = [](int n) { return FieldElement(n); };
            SurfaceSpec s;
            s.P = {fe(1), fe(0), fe(-2), fe(0)};
            s.u = fe(0);
            s.v = fe(0);
            s.alpha = fe(0);
            p.require(detail::throws_ex<Error>([&] { validate_surface(s); }),
                      "zero alpha rejected");
            s.alpha = fe(1);
            s.normal_form = NormalForm{fe(1), fe(0)};
            p.require(detail::throws_ex<Error>([&] { validate_surface(s); }),
                      "zero lambda rejected");
            s.normal_form = NormalForm{fe(1), fe(1)};
            p.require(detail::throws_ex<Error>([&] { validate_surface(s); }),
                      "mismatched normal form rejected");
            s.normal_form = NormalForm{fe(1), fe(2)};
            validate_surface(s);
            p.require(true, "matching normal form accepted");
            return p.result();
        });

        return m;
    }();
    return manifest;
}

} // namespace cubicq::checks
