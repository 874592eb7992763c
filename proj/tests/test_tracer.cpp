#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>

#include "regmap/flag_tracer.hpp"
#include "regmap/lattice_tori.hpp"
#include "regmap/patterns.hpp"
#include "regmap/presentation.hpp"
#include "regmap/surface_families.hpp"

using namespace regmap;

namespace {

FlagComplex complex_for(const Presentation& rotation, const MapType& t) {
    return build_flag_complex(extend_rotation_presentation(rotation, t), t);
}

long long total_labels(const MirrorTrace& trace) {
    long long labels = 0;
    for (const CycleTrace& cycle : trace.cycles) {
        labels += static_cast<long long>(cycle.labels.size());
    }
    return labels;
}

const ReflectionClassSummary& row_for(const TracerComparison& comparison, char reflection) {
    for (const ReflectionClassSummary& summary : comparison.traced) {
        if (summary.reflection == reflection) {
            return summary;
        }
    }
    throw std::logic_error("comparison lacks a row");
}

}  // namespace

TEST_CASE("icosahedral flag complex has the classical corner counts") {
    const FlagComplex complex = complex_for(rotation_triangle(3, 5), {3, 5});
    CHECK(complex.flag_count() == 120);
    CHECK(complex.rotation_order == 60);
    CHECK(complex.genus == 0);
    CHECK(complex.corner_counts[0] == 12);
    CHECK(complex.corner_counts[1] == 30);
    CHECK(complex.corner_counts[2] == 20);
}

TEST_CASE("flag words reproduce their flags") {
    const FlagComplex complex = complex_for(rotation_triangle(4, 3), {4, 3});
    CHECK(complex.flag_count() == 48);
    for (long long flag = 0; flag < complex.flag_count(); ++flag) {
        const Word word = complex.flag_word(flag);
        CHECK(complex.table.act_word(0, word) == flag);
        for (int letter : word) {
            CHECK(letter >= kGenP);
            CHECK(letter <= kGenR);
        }
    }
    CHECK(complex.flag_word(0).empty());
    CHECK_THROWS_AS((void)complex.flag_word(-1), std::invalid_argument);
    CHECK_THROWS_AS((void)complex.flag_word(48), std::invalid_argument);
}

TEST_CASE("dodecahedral mirrors trace one 010212 cycle twice around") {
    const FlagComplex complex = complex_for(rotation_triangle(5, 3), {5, 3});
    const MirrorTrace trace = trace_mirror(complex, Word{kGenP});
    REQUIRE(trace.cycles.size() == 1);
    const CycleTrace& cycle = trace.cycles.front();
    CHECK(cycle.link == LinkKind::l010212);
    CHECK(cycle.link_index == 2);
    CHECK(cycle.labels.size() == 12);
    CHECK(canonical_cycle(cycle.labels) == canonical_cycle("010212010212"));
    CHECK(cycle.segments.size() == 12);
    CHECK(trace.on_mirror_flags == 24);
    CHECK(trace.on_mirror_flags == 2 * total_labels(trace));

    std::set<long long> crossed;
    for (const auto& segment : cycle.segments) {
        CHECK(segment[0] != segment[1]);
        crossed.insert(segment[0]);
        crossed.insert(segment[1]);
    }
    CHECK(static_cast<long long>(crossed.size()) == trace.on_mirror_flags);
}

TEST_CASE("dodecahedron has one class of fifteen mirrors") {
    const TracerComparison comparison =
        verify_against_patterns(rotation_triangle(5, 3), {5, 3});
    CHECK(comparison.consistent);
    CHECK(comparison.harnack_ok);
    CHECK(comparison.detail.empty());
    CHECK(comparison.rotation_order == 60);
    CHECK(comparison.genus == 0);
    const ReflectionClassSummary& p = row_for(comparison, 'P');
    const ReflectionClassSummary& q = row_for(comparison, 'Q');
    const ReflectionClassSummary& r = row_for(comparison, 'R');
    CHECK(p.class_signature == q.class_signature);
    CHECK(p.class_signature == r.class_signature);
    CHECK(p.class_size == 15);
    CHECK(p.mirror_count == 15);
    CHECK(p.link == LinkKind::l010212);
    CHECK(p.link_index == 2);
    CHECK(q.mirror_count == 15);
    CHECK(r.mirror_count == 15);
}

TEST_CASE("octahedron splits into equatorial and diagonal mirror classes") {
    const TracerComparison comparison =
        verify_against_patterns(rotation_triangle(3, 4), {3, 4});
    CHECK(comparison.consistent);
    CHECK(comparison.harnack_ok);
    const ReflectionClassSummary& p = row_for(comparison, 'P');
    const ReflectionClassSummary& q = row_for(comparison, 'Q');
    const ReflectionClassSummary& r = row_for(comparison, 'R');
    CHECK(p.link == LinkKind::l01);
    CHECK(p.link_index == 4);
    CHECK(p.mirror_count == 3);
    CHECK(q.link == LinkKind::l0212);
    CHECK(q.link_index == 2);
    CHECK(q.mirror_count == 6);
    CHECK(r.link == LinkKind::l0212);
    CHECK(r.link_index == 2);
    CHECK(r.mirror_count == 6);
    CHECK(q.class_signature == r.class_signature);
    CHECK(p.class_signature != q.class_signature);
}

TEST_CASE("cube mirrors dualize the octahedral ones") {
    const TracerComparison comparison =
        verify_against_patterns(rotation_triangle(4, 3), {4, 3});
    CHECK(comparison.consistent);
    const ReflectionClassSummary& p = row_for(comparison, 'P');
    const ReflectionClassSummary& q = row_for(comparison, 'Q');
    const ReflectionClassSummary& r = row_for(comparison, 'R');
    CHECK(q.link == LinkKind::l12);
    CHECK(q.link_index == 4);
    CHECK(q.mirror_count == 3);
    CHECK(p.link == LinkKind::l0102);
    CHECK(p.link_index == 2);
    CHECK(p.mirror_count == 6);
    CHECK(r.link == LinkKind::l0102);
    CHECK(r.mirror_count == 6);
    CHECK(p.class_signature == r.class_signature);
}

TEST_CASE("tetrahedron has a single class of six mirrors") {
    const TracerComparison comparison =
        verify_against_patterns(rotation_triangle(3, 3), {3, 3});
    CHECK(comparison.consistent);
    const ReflectionClassSummary& p = row_for(comparison, 'P');
    const ReflectionClassSummary& q = row_for(comparison, 'Q');
    const ReflectionClassSummary& r = row_for(comparison, 'R');
    CHECK(p.class_signature == q.class_signature);
    CHECK(p.class_signature == r.class_signature);
    CHECK(p.link == LinkKind::l010212);
    CHECK(p.link_index == 1);
    CHECK(p.mirror_count == 6);
    CHECK(p.class_size == 6);
}

TEST_CASE("pentagonal hosohedron has an equator and five meridians") {
    const TracerComparison comparison =
        verify_against_patterns(rotation_triangle(2, 5), {2, 5});
    CHECK(comparison.consistent);
    CHECK(comparison.corner_counts[0] == 2);
    CHECK(comparison.corner_counts[1] == 5);
    CHECK(comparison.corner_counts[2] == 5);
    const ReflectionClassSummary& p = row_for(comparison, 'P');
    const ReflectionClassSummary& q = row_for(comparison, 'Q');
    const ReflectionClassSummary& r = row_for(comparison, 'R');
    CHECK(q.link == LinkKind::l12);
    CHECK(q.link_index == 5);
    CHECK(q.mirror_count == 1);
    CHECK(q.class_size == 1);
    CHECK(p.link == LinkKind::l0102);
    CHECK(p.link_index == 1);
    CHECK(p.mirror_count == 5);
    CHECK(p.class_signature == r.class_signature);
    CHECK(q.class_signature != p.class_signature);
}

TEST_CASE("the genus three map with 336 symmetries traces 010212 cubed") {
    const Word hurwitz = mirror_automorphism_word(LinkKind::l010212, {3, 7});
    const Presentation rotation = rotation_triangle(3, 7, {word_power(hurwitz, 3)});
    const TracerComparison comparison = verify_against_patterns(rotation, {3, 7});
    CHECK(comparison.consistent);
    CHECK(comparison.harnack_ok);
    CHECK(comparison.rotation_order == 168);
    CHECK(comparison.genus == 3);
    const ReflectionClassSummary& p = row_for(comparison, 'P');
    const ReflectionClassSummary& q = row_for(comparison, 'Q');
    const ReflectionClassSummary& r = row_for(comparison, 'R');
    CHECK(p.link == LinkKind::l010212);
    CHECK(p.link_index == 3);
    CHECK(p.class_signature == q.class_signature);
    CHECK(p.class_signature == r.class_signature);
    CHECK(p.mirror_count == q.mirror_count);
    CHECK(p.mirror_count == r.mirror_count);
}

TEST_CASE("the genus two map with 96 symmetries checks out flag by flag") {
    const FamilyMap map = bolza();
    const FlagComplex complex = complex_for(map.presentation, map.type);
    CHECK(complex.flag_count() == 96);
    CHECK(complex.genus == 2);
    const TracerComparison comparison = verify_against_patterns(map.presentation, map.type);
    CHECK(comparison.consistent);
    CHECK(comparison.harnack_ok);
    CHECK(comparison.detail.empty());
    CHECK(row_for(comparison, 'P').link == LinkKind::l01);
    CHECK(row_for(comparison, 'P').link_index == 2);
    CHECK(row_for(comparison, 'Q').link == LinkKind::l0212);
    CHECK(row_for(comparison, 'Q').link_index == 2);
}

TEST_CASE("toroidal maps trace the patterns their lattices predict") {
    const std::vector<ToroidalMapId> ids = {
        {TorusFamily::sq44, TorusVariant::b0, 1},  {TorusFamily::sq44, TorusVariant::b0, 2},
        {TorusFamily::sq44, TorusVariant::b0, 3},  {TorusFamily::sq44, TorusVariant::bb, 2},
        {TorusFamily::tri36, TorusVariant::b0, 2}, {TorusFamily::tri36, TorusVariant::bb, 1},
        {TorusFamily::hex63, TorusVariant::b0, 2}, {TorusFamily::hex63, TorusVariant::bb, 1},
    };
    for (const ToroidalMapId& id : ids) {
        CAPTURE(static_cast<int>(id.family));
        CAPTURE(static_cast<int>(id.variant));
        CAPTURE(id.b);
        const TracerComparison comparison =
            verify_against_patterns(toroidal_presentation(id), toroidal_type(id));
        CHECK(comparison.consistent);
        CHECK(comparison.harnack_ok);
        CHECK(comparison.detail.empty());
        CHECK(comparison.genus == 1);
        CHECK(comparison.rotation_order == torus_rotation_order(id));
        const std::vector<PatternReport> predicted = toroidal_patterns(id);
        for (const PatternReport& row : predicted) {
            const ReflectionClassSummary& traced = row_for(comparison, row.reflection);
            CHECK(traced.link == row.link);
            REQUIRE(row.link_index.has_value());
            CHECK(traced.link_index == *row.link_index);
        }
    }
}

TEST_CASE("odd square tori merge the two axis classes and mix their curves") {
    for (long long b : {1, 3}) {
        CAPTURE(b);
        const ToroidalMapId id{TorusFamily::sq44, TorusVariant::b0, b};
        const TracerComparison comparison =
            verify_against_patterns(toroidal_presentation(id), toroidal_type(id));
        CHECK(comparison.consistent);
        const ReflectionClassSummary& p = row_for(comparison, 'P');
        const ReflectionClassSummary& q = row_for(comparison, 'Q');
        const ReflectionClassSummary& r = row_for(comparison, 'R');
        CHECK(p.class_signature == q.class_signature);
        CHECK(p.class_signature != r.class_signature);
        CHECK(p.link == LinkKind::l01);
        CHECK(q.link == LinkKind::l12);
        REQUIRE(p.pattern_counts.size() == 2);
        CHECK(p.pattern_counts == q.pattern_counts);
        CHECK(p.pattern_counts[0].link == LinkKind::l01);
        CHECK(p.pattern_counts[0].link_index == b);
        CHECK(p.pattern_counts[1].link == LinkKind::l12);
        CHECK(p.pattern_counts[1].link_index == b);
        CHECK(p.pattern_counts[0].count == p.pattern_counts[1].count);
        REQUIRE(r.pattern_counts.size() == 1);
        CHECK(r.pattern_counts[0].link == LinkKind::l02);
    }
    const ToroidalMapId even{TorusFamily::sq44, TorusVariant::b0, 2};
    const TracerComparison comparison =
        verify_against_patterns(toroidal_presentation(even), toroidal_type(even));
    const ReflectionClassSummary& p = row_for(comparison, 'P');
    const ReflectionClassSummary& q = row_for(comparison, 'Q');
    CHECK(p.class_signature != q.class_signature);
    REQUIRE(p.pattern_counts.size() == 1);
    CHECK(p.pattern_counts[0].link == LinkKind::l01);
    CHECK(p.pattern_counts[0].link_index == 2);
}

TEST_CASE("family maps agree with their own mirror data") {
    const std::vector<FamilyMap> maps = {
        accola_maclachlan(2), accola_maclachlan(3), wiman_type_one(2),
        wiman_type_two(3),    fermat_map(2),        fermat_map(3),
    };
    for (const FamilyMap& map : maps) {
        CAPTURE(map.name);
        const TracerComparison comparison =
            verify_against_patterns(map.presentation, map.type);
        CHECK(comparison.consistent);
        CHECK(comparison.harnack_ok);
        CHECK(comparison.detail.empty());
        CHECK(comparison.rotation_order == map.rotation_order);
        for (const PatternReport& row : map.expected) {
            const ReflectionClassSummary& traced = row_for(comparison, row.reflection);
            CHECK(traced.link == row.link);
            REQUIRE(row.link_index.has_value());
            CHECK(traced.link_index == *row.link_index);
        }
    }
}

TEST_CASE("every on-mirror flag count doubles the segment total") {
    const FlagComplex complex = complex_for(rotation_triangle(3, 4), {3, 4});
    for (int letter : {kGenP, kGenQ, kGenR}) {
        const MirrorTrace trace = trace_mirror(complex, Word{letter});
        CHECK(trace.on_mirror_flags == 2 * total_labels(trace));
        CHECK(trace.on_mirror_flags > 0);
    }
}

TEST_CASE("tracing rejects words that fix no mirror") {
    const FlagComplex complex = complex_for(rotation_triangle(3, 5), {3, 5});
    CHECK_THROWS_AS((void)trace_mirror(complex, Word{}), std::invalid_argument);
    CHECK_THROWS_AS((void)trace_mirror(complex, Word{kGenP, kGenP}), std::invalid_argument);
    CHECK_THROWS_AS((void)trace_mirror(complex, Word{kGenP, kGenQ}), std::invalid_argument);
    CHECK_THROWS_AS((void)trace_mirror(complex, Word{kGenP, kGenQ, kGenR}),
                    std::invalid_argument);
    const MirrorTrace conjugated =
        trace_mirror(complex, Word{kGenQ, kGenP, kGenQ});
    CHECK(conjugated.cycles.size() >= 1);
}

TEST_CASE("building rejects groups that do not realize the declared type") {
    CHECK_THROWS_AS((void)build_flag_complex(extended_triangle(3, 5), {3, 7}),
                    std::runtime_error);
    Presentation collapsed = extended_triangle(3, 3);
    collapsed.relators.push_back(Word{kGenQ, kGenR});
    CHECK_THROWS_AS((void)build_flag_complex(collapsed, {3, 3}), std::runtime_error);
    const Word hurwitz = mirror_automorphism_word(LinkKind::l010212, {3, 7});
    const Presentation rotation = rotation_triangle(3, 7, {word_power(hurwitz, 2)});
    CHECK_THROWS_AS((void)build_flag_complex(extend_rotation_presentation(rotation, {3, 7}),
                                             {3, 7}, EnumOptions{.budget = 50}),
                    BudgetExceededError);
}

TEST_CASE("trace dumps name the pattern and the flags") {
    const FlagComplex complex = complex_for(rotation_triangle(5, 3), {5, 3});
    const std::string dump = dump_trace(trace_mirror(complex, Word{kGenP}));
    CHECK(dump.find("reflection P:") != std::string::npos);
    CHECK(dump.find("(010212)^2") != std::string::npos);
    CHECK(dump.find("cycle 1") != std::string::npos);
    CHECK(dump.find('{') != std::string::npos);
}
