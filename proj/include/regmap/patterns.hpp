#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "regmap/coset_enumerator.hpp"
#include "regmap/presentation.hpp"
#include "regmap/word.hpp"

namespace regmap {

// The type {m, n} of a map: faces have m sides and vertices have valency n.
struct MapType {
    int m = 0;
    int n = 0;
};

// Throws std::invalid_argument unless m >= 2 and n >= 2.
void validate_map_type(const MapType& t);

// The six ways a mirror can thread the labeled geometric points of a map:
// 0 = vertex, 1 = edge-centre, 2 = face-centre. Each value names the cyclic
// visiting sequence in its canonical spelling.
enum class LinkKind {
    l01,
    l02,
    l12,
    l0102,
    l0212,
    l010212,
};

// Canonical spelling of a link ("01", ..., "010212").
std::string to_string(LinkKind k);

// Inverse of to_string for canonical spellings only.
std::optional<LinkKind> link_from_string(const std::string& s);

// Lexicographically smallest representative of a cyclic label sequence,
// taken over all rotations of the string and of its reversal. The six
// canonical link spellings are exactly the fixed points on link values.
std::string canonical_cycle(const std::string& cycle);

// Swap the labels 0 and 2 and recanonicalize: 01<->12, 02<->02,
// 0102<->0212, 010212<->010212.
LinkKind dual_link(LinkKind k);

// One reflection class of the extended triangle group together with the
// link its mirrors trace. P fixes the vertex-edge side, Q the edge-face
// side, R the vertex-face side of the fundamental triangle.
struct ReflectionLink {
    char reflection;  // 'P', 'Q', or 'R'
    LinkKind link;
};

// The parity classification: which link each reflection class traces on
// the universal map of type {m, n}.
std::array<ReflectionLink, 3> classify_type(const MapType& t);

// Whether a link can occur on maps of type {m, n}: 01 needs n even, 12
// needs m even, 02 needs both even, 0102 needs m even and n odd, 0212 the
// reverse, 010212 needs both odd.
bool link_admissible(LinkKind k, const MapType& t);

// The rotation-group word (over A, B, C) generating the mirror
// automorphism for a link on maps of type {m, n}. Throws
// std::invalid_argument when the link cannot occur for that parity class,
// so every exponent below is guaranteed integral.
//
//   01      C^(n/2) A                              n even
//   02      B^(m/2) C^(n/2)                        m, n even
//   12      B^(m/2) A                              m even
//   0102    C^((n+1)/2) B C^((n+1)/2) B^(m/2)      m even, n odd
//   0212    C^(n/2) B^((m+1)/2) C B^((m+1)/2)      m odd, n even
//   010212  B^((m+1)/2) C B^((m+1)/2) C^((n+1)/2) B C^((n+1)/2)   m, n odd
Word mirror_automorphism_word(LinkKind k, const MapType& t);

// Order of the mirror automorphism in the rotation group, which equals the
// number of link repetitions in the mirror's pattern. `table` must be the
// regular representation of the map's rotation group on generators A, B, C.
long long link_index(const CosetTable& table, LinkKind k, const MapType& t);

// Pattern notation: the bare link for one repetition, "(link)^N" for more.
std::string pattern_string(LinkKind k, long long index);

// Expand pattern notation back into the full label sequence
// ("(01)^3" -> "010101"). Inverse of pattern_string up to cyclic reading.
std::string expand_pattern(const std::string& pattern);

// One report row per reflection class.
struct PatternReport {
    char reflection = '?';  // 'P', 'Q', or 'R'
    LinkKind link = LinkKind::l01;
    // Number of link repetitions; disengaged on a universal (infinite) map.
    std::optional<long long> link_index;
    std::string pattern;
    // Number of disjoint mirrors in this class; filled by the tracer or by
    // a catalog, absent when no count is available.
    std::optional<long long> mirror_count;
    // Mirror length when the map is hyperbolic, absent otherwise.
    std::optional<double> length;
};

// Classify, build each mirror automorphism, and measure its order in the
// group presented by `p` (the rotation group of the map). Rows come back
// in P, Q, R order with pattern strings filled in; counts and lengths stay
// empty here. Throws BudgetExceededError if the enumeration cannot finish.
std::vector<PatternReport> full_pattern_report(const Presentation& p,
                                               const MapType& t,
                                               const EnumOptions& options = {});

// Rows for the universal map of type {m, n}: links per classification,
// infinite link index, pattern showing a single period.
std::vector<PatternReport> universal_pattern_report(const MapType& t);

// Swap 0s and 2s in every link and P and Q in every class label, keeping
// indices, counts, and lengths; rows are re-sorted to P, Q, R order.
// Applying it twice returns the original report.
std::vector<PatternReport> dualize(const std::vector<PatternReport>& rows);

}  // namespace regmap
