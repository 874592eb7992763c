#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "regmap/coset_enumerator.hpp"
#include "regmap/patterns.hpp"
#include "regmap/presentation.hpp"

#include <string>
#include <vector>

using regmap::CosetTable;
using regmap::LinkKind;
using regmap::MapType;
using regmap::PatternReport;
using regmap::Word;

namespace {

CosetTable regular_rep(const regmap::Presentation& p) {
    const auto result = regmap::enumerate_cosets(p, {});
    REQUIRE(result.status == regmap::EnumStatus::complete);
    return result.table;
}

std::string link_of(const std::array<regmap::ReflectionLink, 3>& links, char reflection) {
    for (const auto& rl : links) {
        if (rl.reflection == reflection) {
            return regmap::to_string(rl.link);
        }
    }
    return "";
}

}  // namespace

TEST_CASE("link spellings round-trip and canonicalize") {
    const std::vector<std::string> spellings = {"01", "02", "12", "0102", "0212", "010212"};
    for (const std::string& s : spellings) {
        const auto k = regmap::link_from_string(s);
        REQUIRE(k.has_value());
        CHECK(regmap::to_string(*k) == s);
        CHECK(regmap::canonical_cycle(s) == s);  // canonical forms are fixed points
    }
    CHECK(!regmap::link_from_string("0120").has_value());
    CHECK(!regmap::link_from_string("").has_value());
}

TEST_CASE("canonical_cycle minimizes over rotations and reversal") {
    CHECK(regmap::canonical_cycle("2120") == "0212");
    CHECK(regmap::canonical_cycle("10") == "01");
    CHECK(regmap::canonical_cycle("2010") == "0102");
    CHECK(regmap::canonical_cycle("021") == "012");  // needs the reversal
    CHECK(regmap::canonical_cycle("212010") == "010212");
    CHECK(regmap::canonical_cycle("") == "");
}

TEST_CASE("dual_link swaps 0 and 2") {
    CHECK(regmap::dual_link(LinkKind::l01) == LinkKind::l12);
    CHECK(regmap::dual_link(LinkKind::l12) == LinkKind::l01);
    CHECK(regmap::dual_link(LinkKind::l02) == LinkKind::l02);
    CHECK(regmap::dual_link(LinkKind::l0102) == LinkKind::l0212);
    CHECK(regmap::dual_link(LinkKind::l0212) == LinkKind::l0102);
    CHECK(regmap::dual_link(LinkKind::l010212) == LinkKind::l010212);
    for (const LinkKind k : {LinkKind::l01, LinkKind::l02, LinkKind::l12, LinkKind::l0102,
                             LinkKind::l0212, LinkKind::l010212}) {
        CHECK(regmap::dual_link(regmap::dual_link(k)) == k);
    }
}

TEST_CASE("classify_type follows the parity table") {
    const auto even_even = regmap::classify_type({4, 4});
    CHECK(link_of(even_even, 'P') == "01");
    CHECK(link_of(even_even, 'Q') == "12");
    CHECK(link_of(even_even, 'R') == "02");

    const auto odd_odd = regmap::classify_type({3, 7});
    CHECK(link_of(odd_odd, 'P') == "010212");
    CHECK(link_of(odd_odd, 'Q') == "010212");
    CHECK(link_of(odd_odd, 'R') == "010212");

    const auto odd_even = regmap::classify_type({3, 8});
    CHECK(link_of(odd_even, 'P') == "01");
    CHECK(link_of(odd_even, 'Q') == "0212");
    CHECK(link_of(odd_even, 'R') == "0212");

    const auto even_odd = regmap::classify_type({6, 3});
    CHECK(link_of(even_odd, 'P') == "0102");
    CHECK(link_of(even_odd, 'Q') == "12");
    CHECK(link_of(even_odd, 'R') == "0102");

    CHECK_THROWS_AS(regmap::classify_type({1, 5}), std::invalid_argument);
    CHECK_THROWS_AS(regmap::classify_type({3, 0}), std::invalid_argument);
}

TEST_CASE("classifications of dual types are dual classifications") {
    const std::vector<MapType> types = {{3, 4}, {4, 4}, {3, 7}, {5, 8}, {6, 3}, {2, 5}};
    for (const MapType& t : types) {
        const auto direct = regmap::classify_type(t);
        const auto dual = regmap::classify_type({t.n, t.m});
        // P and Q trade places under duality, R stays.
        for (const auto& rl : direct) {
            const char partner = rl.reflection == 'P' ? 'Q' : rl.reflection == 'Q' ? 'P' : 'R';
            CHECK(link_of(dual, partner) == regmap::to_string(regmap::dual_link(rl.link)));
        }
    }
}

TEST_CASE("mirror automorphism words match the catalog") {
    const std::vector<std::string> abc = {"A", "B", "C"};
    auto word_text = [&](LinkKind k, MapType t) {
        return regmap::format_word(regmap::mirror_automorphism_word(k, t), abc);
    };
    CHECK(word_text(LinkKind::l12, {6, 3}) == "B^3A");
    CHECK(word_text(LinkKind::l010212, {3, 7}) == "B^2CB^2C^4BC^4");
    CHECK(word_text(LinkKind::l0212, {3, 8}) == "C^4B^2CB^2");
    CHECK(word_text(LinkKind::l01, {6, 4}) == "C^2A");
    CHECK(word_text(LinkKind::l02, {4, 6}) == "B^2C^3");
    CHECK(word_text(LinkKind::l0102, {4, 3}) == "C^2BC^2B^2");
}

TEST_CASE("inadmissible link and parity pairings are rejected") {
    CHECK_THROWS_AS(regmap::mirror_automorphism_word(LinkKind::l01, {3, 7}),
                    std::invalid_argument);
    CHECK_THROWS_AS(regmap::mirror_automorphism_word(LinkKind::l02, {3, 8}),
                    std::invalid_argument);
    CHECK_THROWS_AS(regmap::mirror_automorphism_word(LinkKind::l12, {3, 4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(regmap::mirror_automorphism_word(LinkKind::l0102, {4, 4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(regmap::mirror_automorphism_word(LinkKind::l0212, {4, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(regmap::mirror_automorphism_word(LinkKind::l010212, {3, 8}),
                    std::invalid_argument);
}

TEST_CASE("link indices on the spherical rotation groups") {
    // Octahedron {3,4}: the vertex-edge mirrors wind four times, the others twice.
    const CosetTable octa = regular_rep(regmap::rotation_triangle(3, 4));
    CHECK(regmap::link_index(octa, LinkKind::l01, {3, 4}) == 4);
    CHECK(regmap::link_index(octa, LinkKind::l0212, {3, 4}) == 2);

    // Icosahedron {3,5}: every mirror repeats its six-point link twice.
    const CosetTable ico = regular_rep(regmap::rotation_triangle(3, 5));
    CHECK(regmap::link_index(ico, LinkKind::l010212, {3, 5}) == 2);

    // Tetrahedron {3,3}: one pass through 010212.
    const CosetTable tet = regular_rep(regmap::rotation_triangle(3, 3));
    CHECK(regmap::link_index(tet, LinkKind::l010212, {3, 3}) == 1);

    // Hosohedron {2,5}: the equator winds n times, the meridians once.
    const CosetTable hoso = regular_rep(regmap::rotation_triangle(2, 5));
    CHECK(regmap::link_index(hoso, LinkKind::l12, {2, 5}) == 5);
    CHECK(regmap::link_index(hoso, LinkKind::l0102, {2, 5}) == 1);

    // Dihedron {5,2}, the dual picture.
    const CosetTable di = regular_rep(regmap::rotation_triangle(5, 2));
    CHECK(regmap::link_index(di, LinkKind::l01, {5, 2}) == 5);
    CHECK(regmap::link_index(di, LinkKind::l0212, {5, 2}) == 1);
}

TEST_CASE("link index of the 168-element quotient of {3,7} is three") {
    const Word s = regmap::mirror_automorphism_word(LinkKind::l010212, {3, 7});
    const CosetTable klein =
        regular_rep(regmap::rotation_triangle(3, 7, {regmap::word_power(s, 3)}));
    REQUIRE(klein.size() == 168);
    CHECK(regmap::link_index(klein, LinkKind::l010212, {3, 7}) == 3);
}

TEST_CASE("link index of the 504-element quotient of {3,7} is two") {
    const Word s = regmap::mirror_automorphism_word(LinkKind::l010212, {3, 7});
    const CosetTable macbeath =
        regular_rep(regmap::rotation_triangle(3, 7, {regmap::word_power(s, 2)}));
    REQUIRE(macbeath.size() == 504);
    CHECK(regmap::link_index(macbeath, LinkKind::l010212, {3, 7}) == 2);
}

TEST_CASE("pattern notation folds and expands") {
    CHECK(regmap::pattern_string(LinkKind::l01, 1) == "01");
    CHECK(regmap::pattern_string(LinkKind::l01, 4) == "(01)^4");
    CHECK(regmap::pattern_string(LinkKind::l010212, 2) == "(010212)^2");
    CHECK_THROWS_AS(regmap::pattern_string(LinkKind::l01, 0), std::invalid_argument);

    CHECK(regmap::expand_pattern("01") == "01");
    CHECK(regmap::expand_pattern("(01)^3") == "010101");
    CHECK(regmap::expand_pattern("(010212)^2") == "010212010212");
    CHECK_THROWS_AS(regmap::expand_pattern("(01)"), std::invalid_argument);
    CHECK_THROWS_AS(regmap::expand_pattern("(01)^"), std::invalid_argument);
    CHECK_THROWS_AS(regmap::expand_pattern("abc"), std::invalid_argument);
    CHECK_THROWS_AS(regmap::expand_pattern(""), std::invalid_argument);
}

TEST_CASE("full report for the tetrahedron uses the bare-link typography") {
    const auto rows = regmap::full_pattern_report(regmap::rotation_triangle(3, 3), {3, 3});
    REQUIRE(rows.size() == 3);
    for (const PatternReport& row : rows) {
        CHECK(regmap::to_string(row.link) == "010212");
        REQUIRE(row.link_index.has_value());
        CHECK(*row.link_index == 1);
        CHECK(row.pattern == "010212");
        CHECK(!row.mirror_count.has_value());
        CHECK(!row.length.has_value());
    }
}

TEST_CASE("full report rows expand to link times index") {
    const std::vector<std::pair<regmap::Presentation, MapType>> maps = {
        {regmap::rotation_triangle(3, 4), {3, 4}},
        {regmap::rotation_triangle(4, 3), {4, 3}},
        {regmap::rotation_triangle(3, 5), {3, 5}},
        {regmap::rotation_triangle(2, 6), {2, 6}},
    };
    for (const auto& [p, t] : maps) {
        const auto rows = regmap::full_pattern_report(p, t);
        REQUIRE(rows.size() == 3);
        CHECK(rows[0].reflection == 'P');
        CHECK(rows[1].reflection == 'Q');
        CHECK(rows[2].reflection == 'R');
        for (const PatternReport& row : rows) {
            REQUIRE(row.link_index.has_value());
            CHECK(*row.link_index >= 1);
            CHECK(regmap::expand_pattern(row.pattern).size() ==
                  regmap::to_string(row.link).size() * static_cast<std::size_t>(*row.link_index));
        }
    }
}

TEST_CASE("dualizing the cube report gives the octahedron report") {
    const auto cube = regmap::full_pattern_report(regmap::rotation_triangle(4, 3), {4, 3});
    const auto octa = regmap::full_pattern_report(regmap::rotation_triangle(3, 4), {3, 4});
    const auto dual = regmap::dualize(cube);
    REQUIRE(dual.size() == octa.size());
    for (std::size_t i = 0; i < dual.size(); ++i) {
        CHECK(dual[i].reflection == octa[i].reflection);
        CHECK(dual[i].link == octa[i].link);
        CHECK(dual[i].link_index == octa[i].link_index);
        CHECK(dual[i].pattern == octa[i].pattern);
    }
    // Cube: the edge-face mirrors wind four times, the mixed mirrors twice.
    CHECK(link_of(regmap::classify_type({4, 3}), 'Q') == "12");
    const CosetTable cube_table = regular_rep(regmap::rotation_triangle(4, 3));
    CHECK(regmap::link_index(cube_table, LinkKind::l12, {4, 3}) == 4);
    CHECK(regmap::link_index(cube_table, LinkKind::l0102, {4, 3}) == 2);
}

TEST_CASE("dualize is an involution that preserves indices") {
    const auto rows = regmap::full_pattern_report(regmap::rotation_triangle(3, 4), {3, 4});
    const auto twice = regmap::dualize(regmap::dualize(rows));
    REQUIRE(twice.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(twice[i].reflection == rows[i].reflection);
        CHECK(twice[i].link == rows[i].link);
        CHECK(twice[i].link_index == rows[i].link_index);
        CHECK(twice[i].pattern == rows[i].pattern);
    }
}

TEST_CASE("universal maps report links without a finite index") {
    const auto rows = regmap::universal_pattern_report({4, 4});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].reflection == 'P');
    CHECK(regmap::to_string(rows[0].link) == "01");
    CHECK(!rows[0].link_index.has_value());
    CHECK(rows[0].pattern == "01");
    CHECK(regmap::to_string(rows[1].link) == "12");
    CHECK(regmap::to_string(rows[2].link) == "02");
}

TEST_CASE("full report propagates an exhausted budget as an error") {
    regmap::EnumOptions tiny;
    tiny.budget = 500;
    CHECK_THROWS_AS(
        regmap::full_pattern_report(regmap::rotation_triangle(3, 7), {3, 7}, tiny),
        regmap::BudgetExceededError);
}
