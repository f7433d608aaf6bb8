#pragma once

#include <array>
#include <cctype>
#include <string>
#include <vector>

#include "cubicq/errors.hpp"
#include "cubicq/weyl.hpp"

namespace cubicq {

// ---------------------------------------------------------------------------
// Textual specifications of isometries and their groups.
// ---------------------------------------------------------------------------

/**
 * Parse a word over the named elements a, b, c, r, s. Each letter may carry a
 * repeat count and a trailing apostrophe for the inverse ("a2b'" is a*a*b^-1).
 * The rightmost factor acts first, so "abr" maps x to a(b(r(x))).
 */
inline LatticeIsometry parse_word(const std::string& word) {
    LatticeIsometry acc = isometry_from_perm(LinePerm::identity());
    std::size_t pos = 0;
    if (word.empty()) throw ParseError("word: empty");
    while (pos < word.size()) {
        char ch = word[pos];
        if (ch != 'a' && ch != 'b' && ch != 'c' && ch != 'r' && ch != 's')
            throw ParseError("word: unexpected character '" + std::string(1, ch) + "' at position " +
                             std::to_string(pos));
        LatticeIsometry factor = named_element(ch);
        ++pos;
        if (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos]))) {
            int count = word[pos] - '0';
            if (count == 0) throw ParseError("word: repeat count 0 at position " + std::to_string(pos));
            LatticeIsometry powered = factor;
            for (int k = 1; k < count; ++k) powered = compose(powered, factor);
            factor = powered;
            ++pos;
        }
        if (pos < word.size() && word[pos] == '\'') {
            factor = inverse(factor);
            ++pos;
        }
        acc = compose(acc, factor);
    }
    return acc;
}

/// Split on whitespace and commas; parse each piece as a word.
inline std::vector<LatticeIsometry> parse_generator_words(const std::string& text) {
    std::vector<LatticeIsometry> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            out.push_back(parse_word(cur));
            cur.clear();
        }
    };
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\n') flush();
        else cur.push_back(ch);
    }
    flush();
    return out;
}

/**
 * Parse disjoint cycles of line labels, e.g. "(E1 Q1)(E2 Q2)"; labels not
 * listed are fixed. The permutation must come from a lattice isometry.
 */
inline LatticeIsometry parse_line_cycles(const std::string& text) {
    LinePerm p = LinePerm::identity();
    std::array<bool, kLineCount> moved{};
    std::size_t pos = 0;
    while (pos < text.size()) {
        char ch = text[pos];
        if (ch == ' ' || ch == ',') { ++pos; continue; }
        if (ch != '(') throw ParseError("line cycles: expected '(' at position " + std::to_string(pos));
        ++pos;
        std::vector<int> cyc;
        std::string tok;
        auto flush = [&] {
            if (tok.empty()) return;
            auto lbl = parse_line_label(tok);
            if (!lbl) throw ParseError("line cycles: bad label '" + tok + "'");
            int idx = line_index(*lbl);
            if (moved[idx]) throw ParseError("line cycles: label " + tok + " appears twice");
            moved[idx] = true;
            cyc.push_back(idx);
            tok.clear();
        };
        while (pos < text.size() && text[pos] != ')') {
            char c2 = text[pos];
            if (c2 == ' ' || c2 == ',') flush();
            else tok.push_back(c2);
            ++pos;
        }
        if (pos == text.size()) throw ParseError("line cycles: unterminated cycle");
        flush();
        ++pos;
        for (std::size_t k = 0; k < cyc.size(); ++k)
            p.img[cyc[k]] = static_cast<std::uint8_t>(cyc[(k + 1) % cyc.size()]);
    }
    return isometry_from_perm(p);
}

/// Interpret a 7x7 integer matrix (columns = basis images) as an isometry.
inline LatticeIsometry isometry_from_matrix(const Mat7& m) {
    auto col = [&m](int j) {
        DivisorClass d;
        for (int i = 0; i < 7; ++i) d.c[i] = m[i][j];
        return d;
    };
    std::array<DivisorClass, 6> imgE;
    for (int j = 1; j <= 6; ++j) imgE[j - 1] = col(j);
    return isometry_from_images(col(0), imgE);
}

} // namespace cubicq
