#pragma once

#include <vector>

#include "regmap/patterns.hpp"
#include "regmap/presentation.hpp"

namespace regmap {

// Exact elements of the Gaussian ring: value a + b*i with i^2 = -1.
// Arithmetic throws std::overflow_error instead of wrapping.
struct GaussianInt {
    long long a = 0;
    long long b = 0;
    friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

GaussianInt operator+(const GaussianInt& x, const GaussianInt& y);
GaussianInt operator-(const GaussianInt& x, const GaussianInt& y);
GaussianInt operator-(const GaussianInt& x);
GaussianInt operator*(const GaussianInt& x, const GaussianInt& y);
GaussianInt conj(const GaussianInt& x);
long long norm(const GaussianInt& x);  // a^2 + b^2
bool is_zero(const GaussianInt& x);
GaussianInt scale(long long k, const GaussianInt& x);

// Exact elements of the triangular ring: value a + b*w where w = exp(2*pi*i/3),
// so w^2 = -1 - w.
struct EisensteinInt {
    long long a = 0;
    long long b = 0;
    friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;
};

EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt operator-(const EisensteinInt& x);
EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt conj(const EisensteinInt& x);
long long norm(const EisensteinInt& x);  // a^2 - a*b + b^2
bool is_zero(const EisensteinInt& x);
EisensteinInt scale(long long k, const EisensteinInt& x);

// True iff x lies in the principal ideal (d): x * conj(d) has both
// components divisible by norm(d). Throws std::invalid_argument when d = 0.
bool ring_divides(const GaussianInt& d, const GaussianInt& x);
bool ring_divides(const EisensteinInt& d, const EisensteinInt& x);

// Smallest k >= 1 with k*v in the ideal (ideal_gen). This is the order of
// the translation by v on the torus obtained as the plane modulo the ideal.
// Always at most norm(ideal_gen), since norm(g)*v = g * (conj(g)*v).
// Throws std::invalid_argument when v = 0 or ideal_gen = 0.
long long translation_order(const GaussianInt& v, const GaussianInt& ideal_gen);
long long translation_order(const EisensteinInt& v, const EisensteinInt& ideal_gen);

// The reflexible regular maps on tori: {4,4}_{b,0} and {4,4}_{b,b} on the
// square lattice, {3,6} and its dual {6,3} on the triangular lattice. The
// two variants are the only reflexible parameter choices.
enum class TorusFamily { sq44, tri36, hex63 };
enum class TorusVariant { b0, bb };

struct ToroidalMapId {
    TorusFamily family = TorusFamily::sq44;
    TorusVariant variant = TorusVariant::b0;
    long long b = 1;
};

// Throws std::invalid_argument unless b >= 1.
void validate_toroidal_id(const ToroidalMapId& id);

MapType toroidal_type(const ToroidalMapId& id);

// Order of the rotation group: faces * m, that is 4*norm(gen) for the
// square family and 6*norm(gen) for the triangular ones.
long long torus_rotation_order(const ToroidalMapId& id);

// Pattern rows computed from the lattice: each mirror automorphism is a
// translation, and its link index is the translation's order modulo the
// ideal that defines the torus. The {6,3} family is the dual of {3,6}.
std::vector<PatternReport> toroidal_patterns(const ToroidalMapId& id);

// Finite presentation of the rotation group: the triangle presentation of
// the right type plus one power of the defining translation word.
Presentation toroidal_presentation(const ToroidalMapId& id);

}  // namespace regmap
