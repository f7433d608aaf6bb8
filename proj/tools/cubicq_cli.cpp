// Command-line front end: verify the stored facts, classify a symmetry image
// given by generator words or a JSON file, classify a surface file, or print
// the reference tables.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubicq/checks.hpp"
#include "cubicq/json_io.hpp"

namespace {

using namespace cubicq;

std::string class_label(const IsometryGroup& g) {
    for (const auto& words : checks::detail::expected_image_class_words()) {
        if (!standard_normalizer().conjugates_onto(g, checks::detail::group_of_words(words)))
            continue;
        std::string label = "<";
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (i) label += ",";
            label += words[i];
        }
        return label + ">";
    }
    return "(unlisted)";
}

void print_verdict_text(const Verdict& v) {
    std::cout << "g-minimal: " << (v.g_minimal ? "yes" : "no") << "\n";
    std::cout << "surface: " << to_string(v.x_rational) << "\n";
    std::cout << "quotient: " << to_string(v.quotient_rational) << "\n";
    for (const auto& j : v.justification) std::cout << "  " << j << "\n";
}

int cmd_verify(const std::string& data_dir, const std::string& only, const std::string& format) {
    checks::CheckContext ctx{data_dir};
    auto report = checks::run_checks(ctx, only);
    if (report.outcomes.empty()) {
        std::cerr << "error: no checks match module '" << only << "'\n";
        return 2;
    }
    if (format == "json") {
        Json j;
        j["checks"] = Json::array();
        for (const auto& o : report.outcomes) {
            Json c;
            c["name"] = o.module + "/" + o.name;
            c["module"] = o.module;
            c["criterion"] = o.criterion;
            c["rule"] = o.rule;
            c["expected"] = o.result.expected;
            c["computed"] = o.result.computed;
            c["pass"] = o.result.pass;
            j["checks"].push_back(std::move(c));
        }
        j["passed"] = report.passed;
        j["failed"] = report.failed;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& o : report.outcomes) {
            std::cout << (o.result.pass ? "PASS " : "FAIL ") << o.module << "/" << o.name << "\n";
            if (!o.result.pass) {
                std::cout << "      rule: " << o.rule << "\n";
                std::cout << "      expected: " << o.result.expected << "\n";
                std::cout << "      computed: " << o.result.computed << "\n";
            }
        }
        std::cout << "summary: " << report.passed << " passed, " << report.failed << " failed\n";
    }
    return report.failed == 0 ? 0 : 1;
}

int cmd_classify_gamma(const std::vector<std::string>& spec, const std::string& format) {
    IsometryGroup image;
    std::string source;
    if (spec.size() == 1 && spec[0].size() > 5 &&
        spec[0].substr(spec[0].size() - 5) == ".json") {
        image = subgroup_from_json(load_json_file(spec[0]));
        source = spec[0];
    } else {
        std::string joined;
        for (const auto& w : spec) {
            if (!joined.empty()) joined += " ";
            joined += w;
        }
        std::vector<LatticeIsometry> gens;
        for (const auto& g : parse_generator_words(joined)) gens.push_back(g);
        image = IsometryGroup::generate(gens);
        source = joined;
    }

    GaloisScenario sc;
    sc.galois_image = image;
    Verdict v = analyze(sc);

    if (format == "json") {
        Json j;
        j["generators"] = source;
        j["order"] = image.order();
        j["invariant_rank"] = invariant_rank(image);
        j["class"] = class_label(image);
        j["degree_search"] = degree_search_to_json(max_reachable_degree(image));
        j["verdict"] = verdict_to_json(v);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "image: " << source << " (order " << image.order() << ", class "
                  << class_label(image) << ")\n";
        auto search = max_reachable_degree(image);
        std::cout << "reachable degree: " << search.max_degree << " via "
                  << checks::detail::witness_string(search.witness) << "\n";
        print_verdict_text(v);
    }
    return 0;
}

int cmd_classify_surface(const std::string& path, const std::string& format) {
    SurfaceSpec s = surface_from_json(load_json_file(path));
    SurfaceClassification cls = classify(s);

    if (format == "json") {
        Json j;
        j["surface"] = surface_to_json(s);
        j["profile"] = profile_to_json(cls.profile);
        j["image"] = cls.image_name.empty() ? Json(nullptr) : Json(cls.image_name);
        j["verdict"] = verdict_to_json(cls.verdict);
        std::cout << j.dump(2) << "\n";
    } else {
        const auto& p = cls.profile;
        std::cout << "profile: triple-point " << to_string(p.g1) << ", tangent "
                  << to_string(p.g2) << ", fixed-point " << to_string(p.g3);
        if (p.g4_has_order3)
            std::cout << ", family order-3 " << (*p.g4_has_order3 ? "yes" : "no");
        if (p.same_splitting_field_g1_g2)
            std::cout << ", same splitting field "
                      << (*p.same_splitting_field_g1_g2 ? "yes" : "no");
        std::cout << "\n";
        std::cout << "image: " << (cls.image_name.empty() ? "(none)" : cls.image_name) << "\n";
        print_verdict_text(cls.verdict);
    }
    return 0;
}

int cmd_tables(const std::string& format) {
    const auto& labels = all_line_labels();
    const auto& classes = all_line_classes();
    const auto& image_classes = galois_image_classes();
    auto filtered = rational_x_filter(image_classes);

    auto class_row = [](const IsometryGroup& g) {
        Json row;
        row["class"] = class_label(g);
        row["order"] = g.order();
        row["invariant_rank"] = invariant_rank(g);
        row["max_degree"] = max_reachable_degree(g).max_degree;
        return row;
    };

    if (format == "json") {
        Json j;
        j["lines"] = Json::array();
        for (const auto& l : labels) j["lines"].push_back(to_string(l));
        j["pairing_table"] = Json::array();
        for (int i = 0; i < kLineCount; ++i) {
            Json row = Json::array();
            for (int k = 0; k < kLineCount; ++k)
                row.push_back(static_cast<long long>(pairing(classes[i], classes[k])));
            j["pairing_table"].push_back(std::move(row));
        }
        j["image_classes"] = Json::array();
        for (const auto& g : image_classes) j["image_classes"].push_back(class_row(g));
        j["rational_surface_classes"] = Json::array();
        for (const auto& g : filtered) j["rational_surface_classes"].push_back(class_row(g));
        j["resolution_data"] = Json::array();
        for (auto [m, q] : {std::pair{2, 1}, {3, 1}, {3, 2}, {5, 2}}) {
            auto d = table1_delta({m, q});
            Json row;
            row["type"] = to_string(SingularityType{m, q});
            row["dK2"] = rat_to_json(d.dK2);
            row["dC2"] = rat_to_json(d.dC2);
            row["dD2"] = rat_to_json(d.dD2);
            row["chain"] = d.chain;
            j["resolution_data"].push_back(std::move(row));
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << "== pairing table of the 27 lines ==\n    ";
    for (const auto& l : labels) std::printf("%4s", to_string(l).c_str());
    std::cout << "\n";
    for (int i = 0; i < kLineCount; ++i) {
        std::printf("%-4s", to_string(labels[i]).c_str());
        for (int k = 0; k < kLineCount; ++k)
            std::printf("%4lld", static_cast<long long>(pairing(classes[i], classes[k])));
        std::cout << "\n";
    }

    std::cout << "\n== symmetry image classes (" << image_classes.size() << ") ==\n";
    for (const auto& g : image_classes)
        std::printf("%-10s order %2zu  invariant rank %d  max degree %d\n",
                    class_label(g).c_str(), g.order(), invariant_rank(g),
                    max_reachable_degree(g).max_degree);

    std::cout << "\n== classes keeping the surface rational (" << filtered.size() << ") ==\n";
    for (const auto& g : filtered)
        std::printf("%-10s order %2zu  invariant rank %d  max degree %d\n",
                    class_label(g).c_str(), g.order(), invariant_rank(g),
                    max_reachable_degree(g).max_degree);

    std::cout << "\n== singularity resolution data ==\n";
    for (auto [m, q] : {std::pair{2, 1}, {3, 1}, {3, 2}, {5, 2}}) {
        auto d = table1_delta({m, q});
        std::cout << to_string(SingularityType{m, q}) << ": dK2=" << to_string(d.dK2)
                  << " dC2=" << to_string(d.dC2) << " dD2=" << to_string(d.dD2) << " chain=[";
        for (std::size_t i = 0; i < d.chain.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << d.chain[i];
        }
        std::cout << "]\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for order-3 quotients of cubic surfaces"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run the stored checks");
    std::string data_dir = "data";
    std::string only;
    verify->add_option("--data-dir", data_dir, "directory with the JSON data files")
        ->capture_default_str();
    verify->add_option("--only", only, "restrict to one module")
        ->check(CLI::IsMember(
            {"picard", "weyl", "minimality", "quotients", "eisenstein", "surfaces"}));

    auto* gamma = app.add_subcommand("classify-gamma", "classify a symmetry image on the lattice");
    std::vector<std::string> gamma_spec;
    gamma->add_option("spec", gamma_spec,
                      "generator words (letters a b c r s, e.g. \"a r s\") or one JSON file")
        ->required();

    auto* surface = app.add_subcommand("classify-surface", "classify a surface JSON file");
    std::string surface_path;
    surface->add_option("file", surface_path, "surface JSON file")->required();

    auto* tables = app.add_subcommand("tables", "print the reference tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(data_dir, only, format);
        if (gamma->parsed()) return cmd_classify_gamma(gamma_spec, format);
        if (surface->parsed()) return cmd_classify_surface(surface_path, format);
        if (tables->parsed()) return cmd_tables(format);
    } catch (const cubicq::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cubicq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
