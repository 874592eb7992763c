#pragma once

#include <array>
#include <string>
#include <vector>

#include "regmap/coset_enumerator.hpp"
#include "regmap/patterns.hpp"
#include "regmap/presentation.hpp"
#include "regmap/word.hpp"

namespace regmap {

// A finite map of type {m, n} rebuilt as its barycentric triangulation:
// one flag per element of the extended group ("P, Q, R" regular
// representation), with corner 0 at the vertex, corner 1 at the
// edge-centre, and corner 2 at the face-centre of each flag. Flag ids are
// coset ids, so flag 0 is the identity and flag words multiply on the
// right.
struct FlagComplex {
    MapType type;
    CosetTable table;
    long long rotation_order = 0;
    long long genus = 0;
    // Corner orbit counts: vertices, edge-centres, face-centres.
    std::array<long long, 3> corner_counts{};
    // For each corner label, the orbit id of every flag's corner.
    std::array<std::vector<int>, 3> corner_orbit;
    // Breadth-first spanning tree over the generators P, Q, R.
    std::vector<int> parent;
    std::vector<int> parent_letter;

    long long flag_count() const { return static_cast<long long>(parent.size()); }
    // Word over P, Q, R carrying flag 0 to the given flag.
    Word flag_word(long long flag) const;
};

// The extended presentation of a map given by a rotation presentation
// over A, B, C: the reflection relators plus every rotation relator
// rewritten via A = PQ, B = QR, C = RP.
Presentation extend_rotation_presentation(const Presentation& rotation, const MapType& t);

// Enumerates the extended group and assembles the complex. Verifies that
// the corner orbits have the uniform sizes 2n, 4, and 2m the type demands
// and computes the genus from the Euler characteristic; a violation means
// the group does not realize the type and raises std::runtime_error.
FlagComplex build_flag_complex(const Presentation& extended, const MapType& t,
                               const EnumOptions& options = {});

// One closed curve of a mirror: the corner labels met in walking order,
// the flag pair of each crossed segment, and the link identification.
struct CycleTrace {
    std::string labels;
    std::vector<std::array<long long, 2>> segments;
    LinkKind link = LinkKind::l01;
    long long link_index = 0;
};

// Every fixed curve of one orientation-reversing involution.
struct MirrorTrace {
    Word reflection;
    long long on_mirror_flags = 0;
    std::vector<CycleTrace> cycles;
};

// Finds the flags whose fixed side lies on the reflection's mirror
// (flag f qualifies when f^-1 t f is P, Q, or R), joins the fixed sides
// into closed curves through shared corners, and reads off each curve's
// label sequence. Throws std::invalid_argument unless the word is an
// orientation-reversing involution, and std::runtime_error if the traced
// segments fail to form disjoint closed curves.
MirrorTrace trace_mirror(const FlagComplex& complex, const Word& reflection);

// Text listing of a trace, one line per cycle with flag ids.
std::string dump_trace(const MirrorTrace& trace);

// How many mirror curves of one pattern a conjugacy class contributes.
struct PatternCount {
    LinkKind link = LinkKind::l01;
    long long link_index = 0;
    long long count = 0;

    bool operator==(const PatternCount&) const = default;
};

// What the tracer saw for one reflection's whole conjugacy class. A single
// reflection can fix curves of different links (on the b odd square torus
// the axis reflection fixes one lattice line and one halfway line), so the
// link and index here are those of the curve through the base flag's own
// fixed side, and `pattern_counts` carries the census of every curve fixed
// by any element of the class.
struct ReflectionClassSummary {
    char reflection = '?';
    LinkKind link = LinkKind::l01;
    long long link_index = 0;
    long long class_size = 0;
    // Disjoint mirror curves summed over the class. Each curve is fixed
    // pointwise by exactly one reflection, so no curve is counted twice.
    long long mirror_count = 0;
    // Smallest element id in the class; equal ids mean P, Q, R classes
    // coincide and their mirrors are the same curves.
    long long class_signature = 0;
    // Curves per (link, index) over the whole class, sorted by link then
    // index.
    std::vector<PatternCount> pattern_counts;
};

// Two independent pipelines for the same map: the parity classification
// plus mirror-automorphism orders on one side, the literal flag-by-flag
// trace on the other.
struct TracerComparison {
    MapType type;
    long long rotation_order = 0;
    long long genus = 0;
    std::array<long long, 3> corner_counts{};
    std::vector<PatternReport> pattern_rows;
    std::vector<ReflectionClassSummary> traced;
    bool consistent = false;
    bool harnack_ok = false;
    std::string detail;
};

// Curves per (link, index) over all distinct reflection classes, sorted
// by link then index. Classes sharing a signature are the same class
// seen from two generators and count once, so the totals can be read
// against a census of every mirror on the surface.
std::vector<PatternCount> aggregate_pattern_counts(const TracerComparison& comparison);

// Runs both pipelines from the rotation presentation and compares them
// class by class. `consistent` reports (link, index) agreement between
// each classification row and the traced curve through the base flag's
// matching side, plus the doubling of the rotation group inside the
// extended one; `harnack_ok` reports that no single reflection fixes more
// than genus + 1 curves; `detail` explains any failure.
TracerComparison verify_against_patterns(const Presentation& rotation, const MapType& t,
                                         const EnumOptions& options = {});

}  // namespace regmap
