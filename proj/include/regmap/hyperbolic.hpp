#pragma once

#include <string>

#include "regmap/patterns.hpp"

namespace regmap {

// Inverse hyperbolic cosine, formulated via log1p so that arguments just
// above 1 keep full relative accuracy. Throws std::domain_error for x < 1.
double arcosh(double x);

// A map of type {m, n} lives on a hyperbolic surface exactly when the
// (2, m, n) triangle has angle sum below pi, i.e. (m-2)(n-2) > 4.
bool is_hyperbolic_type(const MapType& t);

// Side lengths of the (2, m, n) fundamental triangle with the right angle
// at the edge-centre corner 1, angle pi/n at the vertex corner 0, and
// angle pi/m at the face-centre corner 2. Side ab joins corners a and b.
struct TriangleSides {
    double len01 = 0.0;
    double len02 = 0.0;
    double len12 = 0.0;
    MapType type;
};

// Right-triangle relations:
//   len01 = arcosh(cos(pi/m) / sin(pi/n))
//   len12 = arcosh(cos(pi/n) / sin(pi/m))
//   len02 = arcosh(cot(pi/m) * cot(pi/n))
// Throws std::domain_error unless the type is hyperbolic.
TriangleSides triangle_sides(const MapType& t);

// Total side length along one period of a cyclic label sequence: each
// cyclically adjacent pair ab contributes len_ab. Labels must be drawn
// from 012 with no two equal neighbours.
double cycle_length(const std::string& cycle, const TriangleSides& sides);

// Length of a mirror with pattern (link)^index on a hyperbolic map of
// type {m, n}: index times the length of one link period. Requires an
// admissible (link, type) pair and a hyperbolic type.
double mirror_length(LinkKind k, long long index, const MapType& t);

}  // namespace regmap
