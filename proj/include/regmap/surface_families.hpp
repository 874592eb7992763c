#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "regmap/coset_enumerator.hpp"
#include "regmap/patterns.hpp"
#include "regmap/presentation.hpp"

namespace regmap {

// Genus of the closed orientable surface carrying a regular map of type
// {m, n} whose rotation group has the given order: the map has
// V = order/n vertices, E = order/2 edges, and F = order/m faces, and
// V - E + F = 2 - 2g. Throws std::invalid_argument when any count fails
// to be an integer or the resulting genus is negative.
long long genus_from_order(const MapType& t, long long order);

// 2x2 matrix over the integers modulo a prime, entries stored row-major
// in [0, p). Only invertible matrices can be constructed.
struct MatrixModP {
    int p = 0;
    std::array<int, 4> entry{};
    friend bool operator==(const MatrixModP&, const MatrixModP&) = default;
};

// Reduces the entries modulo p and rejects singular matrices.
MatrixModP matrix_mod_p(int p, int a, int b, int c, int d);
MatrixModP matrix_identity(int p);
MatrixModP operator*(const MatrixModP& x, const MatrixModP& y);
MatrixModP matrix_inverse(const MatrixModP& x);
long long matrix_order(const MatrixModP& x);

// Size of the group generated by `gens`, all over the same modulus.
long long matrix_closure_order(const std::vector<MatrixModP>& gens);

// Verification record for the genus-2 map with 48 conformal automorphisms,
// realized by explicit matrices over the integers mod 3: the generators,
// the two mirror automorphisms S1 = C^4 B^2 C B^2 and S2 = C^4 A, their
// orders, and the size of the matrix group the generators produce.
struct BolzaMatrixCheck {
    MatrixModP a, b, c;
    MatrixModP s1, s2;
    long long s1_order = 0;
    long long s2_order = 0;
    long long group_order = 0;
};
BolzaMatrixCheck bolza_matrix_check();

// A 3x3 monomial matrix over n-th roots of unity: column j holds its only
// nonzero entry lambda^{exps[j]} in row perm[j], lambda = exp(2*pi*i/n).
// Values are kept in projective canonical form, with the exponents shifted
// so that exps[0] == 0; equality is therefore equality up to a global
// scalar, and every product is renormalized.
struct MonomialMatrix {
    std::array<int, 3> perm{0, 1, 2};
    std::array<int, 3> exps{0, 0, 0};
    int n = 1;
    friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
    friend auto operator<=>(const MonomialMatrix&, const MonomialMatrix&) = default;
};

// Normalizes the exponents and validates that perm is a permutation of
// {0, 1, 2} and n >= 1.
MonomialMatrix monomial_matrix(const std::array<int, 3>& perm, const std::array<int, 3>& exps,
                               int n);
MonomialMatrix monomial_identity(int n);
MonomialMatrix operator*(const MonomialMatrix& x, const MonomialMatrix& y);
long long projective_order(const MonomialMatrix& x);

// The three monomial automorphisms of the degree-n Fermat curve, satisfying
// A^2 = B^3 = C^(2n) = ABC = 1 projectively.
struct FermatGenerators {
    MonomialMatrix a, b, c;
};
FermatGenerators fermat_generators(int n);

// Number of distinct projective monomial matrices generated by A, B, C;
// equals 6n^2. Closure enumeration is capped at n <= 12.
long long fermat_closure_order(int n);

// Projective orders of the mirror automorphisms S1 = C^n B^2 C B^2 and
// S2 = C^n A in the matrix model: (n, 3) for odd n and (2, 4) for even n.
struct FermatMirrorOrders {
    long long s1 = 0;
    long long s2 = 0;
};
FermatMirrorOrders fermat_mirror_orders(int n);

// A named map given by a presentation of its rotation group together with
// the patterns its mirrors are expected to show. Counts and lengths in
// `expected` stay empty; independent computations fill or check them.
struct FamilyMap {
    std::string name;
    Presentation presentation;
    MapType type;
    long long rotation_order = 0;
    std::vector<PatternReport> expected;
};

// Genus g >= 2 surface with 8(g+1) conformal automorphisms; the map has
// type {2g+2, 4} and mirrors (01)^2, (02)^2, and (12)^2 for odd g or
// (12)^4 for even g.
FamilyMap accola_maclachlan(long long g);

// Genus g >= 2 surface with an automorphism of order 4g+2; the rotation
// group is cyclic of that order, the map has type {4g+2, 2g+1}, one face
// and two vertices, and every mirror has link index 1.
FamilyMap wiman_type_one(long long g);

// Genus g >= 3 surface with an automorphism of order 4g; the rotation
// group has order 8g, the map has type {4g, 4}, and the mirrors are
// (01)^2, (12)^2, and (02)^1. The g = 2 member coincides with bolza().
FamilyMap wiman_type_two(long long g);

// The genus-2 map of type {3, 8} with 48 conformal automorphisms.
FamilyMap bolza();

// The regular map of type {3, 2n} on the degree-n Fermat curve, rotation
// group of order 6n^2, mirrors (01)^3, (0212)^n for odd n and (01)^4,
// (0212)^2 for even n.
FamilyMap fermat_map(long long n);

// The regular map of type {m, n} on the sphere, (m-2)(n-2) < 4: the five
// Platonic maps plus the hosohedra {2, n} and dihedra {n, 2}.
FamilyMap spherical_map(const MapType& t);

// Quotient of the {3, 7} rotation group by the k-th power of the mirror
// automorphism word S = B^2 C B^2 C^4 B C^4. The quotient is a genuine
// map only when A, B, C keep orders 2, 3, 7; otherwise it degenerates
// (k = 1 collapses to the trivial group), genus is disengaged, and the
// report list is empty.
struct HurwitzQuotient {
    long long k = 0;
    long long group_order = 0;
    long long s_order = 0;
    std::optional<long long> genus;
    std::vector<PatternReport> reports;
};
HurwitzQuotient hurwitz_quotient(long long k, const EnumOptions& options = {});

// One row of a fixture manifest: the presentation file `<name>.pres`
// realizes a map of the given type whose rotation group has the given
// order, optionally with expected link indices.
struct FixtureExpectation {
    LinkKind link = LinkKind::l01;
    long long index = 0;
};
struct FixtureEntry {
    std::string name;
    MapType type;
    long long rotation_order = 0;
    std::vector<FixtureExpectation> links;
};

// Parses manifest text: one entry per line as
//   name m n rotation_order [link=index,link=index,...]
// with '#' comments and blank lines ignored.
std::vector<FixtureEntry> parse_fixture_manifest(const std::string& text);

// A presentation ingested from a fixture file, enumerated and reported.
struct FixtureMap {
    Presentation presentation;
    MapType type;
    long long rotation_order = 0;
    std::vector<PatternReport> reports;
};

// Reads and parses a presentation over exactly three generators, checks
// that the group realizes the declared type (A, B, C have orders 2, m, n),
// and computes its pattern report. Propagates ParseError with location for
// malformed files and BudgetExceededError when enumeration is cut off.
FixtureMap fixture_map(const std::string& path, const MapType& declared,
                       const EnumOptions& options = {});

}  // namespace regmap
