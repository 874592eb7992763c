#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regmap/coset_enumerator.hpp"
#include "regmap/flag_tracer.hpp"
#include "regmap/patterns.hpp"

namespace regmap {

// Everything known about one map's mirrors, ready for serialization.
// `group_order` counts the rotation group; the full symmetry group is
// twice that. Fields stay disengaged when a computation does not apply
// (universal maps have no order or genus, counts need the flag tracer,
// lengths need a hyperbolic type).
struct MapReport {
    std::string family;
    MapType type;
    std::optional<long long> group_order;
    std::optional<long long> genus;
    std::vector<PatternReport> mirrors;
};

// JSON object { family, type: [m, n], group_order, genus, mirrors:
// [{ class, link, index, pattern, count, length }] } with null for
// disengaged fields. Two-space indentation, keys sorted, trailing
// newline; byte-identical for equal reports.
std::string to_json(const MapReport& report);

// Inverse of to_json; also accepts semantically equal JSON with other
// whitespace or key order. Throws std::invalid_argument on malformed
// documents or schema violations.
MapReport map_report_from_json(const std::string& text);

// CSV with header family,m,n,class,link,index,pattern,count,length and
// one row per mirror class; disengaged fields are left empty.
std::string to_csv(const std::vector<MapReport>& reports);

// Fixed-width text block: a heading line per scalar field, then one
// aligned row per mirror class.
std::string render_text(const MapReport& report);

// Lengths print with ten digits after the point everywhere.
std::string format_length(double length);

// Fills each row's mirror length when the type is hyperbolic and the
// row's index is engaged; sphere and torus rows keep length disengaged.
void fill_mirror_lengths(std::vector<PatternReport>& rows, const MapType& t);

// One frozen row of the published census of reflexible maps of genus 2
// or 3, or of the Hurwitz series. `extended_order` is what the genus
// tables print; the Hurwitz table prints `rotation_order` instead.
// `builder` names the in-repo construction that reproduces the row
// ("bolza", "am:3", "wi:2", "wii:3", "fermat:4", "hurwitz:2"), with
// `dual_of_builder` set when the row is the dual of the built map; an
// empty builder means the row needs a fixture named like the id in
// lower case with dots as underscores ("M.2.3" -> "m2_3", "H3" -> "h3").
struct CensusPattern {
    LinkKind link = LinkKind::l01;
    long long index = 0;
};
struct CensusRow {
    std::string id;
    MapType type;
    std::string surface;
    long long extended_order = 0;
    long long rotation_order = 0;
    std::optional<long long> genus;
    std::vector<CensusPattern> links;
    std::string builder;
    bool dual_of_builder = false;
};

// The six genus-2 rows M.2.1..M.2.6.
const std::vector<CensusRow>& genus2_census();
// The twelve genus-3 rows M.3.1..M.3.12.
const std::vector<CensusRow>& genus3_census();
// The ten Hurwitz rows H1..H10.
const std::vector<CensusRow>& hurwitz_census();

// One concrete sphere map together with the frozen aggregate of its
// mirror curves: count curves showing each (link, index), sorted the
// way aggregate_pattern_counts sorts.
struct SphericalCensusRow {
    std::string name;
    MapType type;
    std::vector<PatternCount> patterns;
};

// The five Platonic maps plus the hosohedra {2,n} and dihedra {n,2}
// for n = 2..max_n, each with its expected mirror aggregate.
std::vector<SphericalCensusRow> spherical_census(int max_n = 8);

// Fixture name a census row looks for in the manifest.
std::string census_fixture_name(const std::string& id);

// How one rendered row was checked: reproduced by an in-repo
// construction or fixture, waiting on an absent fixture, mismatching
// the frozen values, or optional extra work that was not run.
enum class RowStatus { verified, fixture_missing, mismatch, optional_skipped };
std::string to_string(RowStatus s);

// Options shared by the table renderers: enumeration budget, where
// fixture presentations live, and the side parameter for the torus
// tables.
struct TableOptions {
    EnumOptions enum_options;
    std::string fixture_dir = "fixtures";
    long long b = 2;
};

// Checks one census row: rebuilds it from its builder, or loads its
// fixture when the builder is empty, and compares order, genus, and the
// distinct (link, index) set against the frozen values. Budget
// exhaustion propagates as BudgetExceededError.
RowStatus check_census_row(const CensusRow& row, const TableOptions& options);

// Renders one named table: "1" spherical maps, "2" universal maps,
// "4" genus 2, "5" genus 3, "7" Hurwitz link indices, "t41" square
// torus, "t42" triangular and hexagonal tori. Rows keep the published
// order and each carries a status column; output is deterministic.
// Throws std::invalid_argument for an unknown id.
std::string render_named_table(const std::string& id, const TableOptions& options = {});

}  // namespace regmap
