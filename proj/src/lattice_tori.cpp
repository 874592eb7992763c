#include "regmap/lattice_tori.hpp"

#include <stdexcept>
#include <string>

namespace regmap {

namespace {

long long checked_add(long long x, long long y) {
    long long r;
    if (__builtin_add_overflow(x, y, &r)) {
        throw std::overflow_error("lattice arithmetic overflow");
    }
    return r;
}

long long checked_sub(long long x, long long y) {
    long long r;
    if (__builtin_sub_overflow(x, y, &r)) {
        throw std::overflow_error("lattice arithmetic overflow");
    }
    return r;
}

long long checked_mul(long long x, long long y) {
    long long r;
    if (__builtin_mul_overflow(x, y, &r)) {
        throw std::overflow_error("lattice arithmetic overflow");
    }
    return r;
}

}  // namespace

GaussianInt operator+(const GaussianInt& x, const GaussianInt& y) {
    return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

GaussianInt operator-(const GaussianInt& x, const GaussianInt& y) {
    return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
}

GaussianInt operator-(const GaussianInt& x) {
    return {checked_sub(0, x.a), checked_sub(0, x.b)};
}

GaussianInt operator*(const GaussianInt& x, const GaussianInt& y) {
    // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
    return {checked_sub(checked_mul(x.a, y.a), checked_mul(x.b, y.b)),
            checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a))};
}

GaussianInt conj(const GaussianInt& x) { return {x.a, checked_sub(0, x.b)}; }

long long norm(const GaussianInt& x) {
    return checked_add(checked_mul(x.a, x.a), checked_mul(x.b, x.b));
}

bool is_zero(const GaussianInt& x) { return x.a == 0 && x.b == 0; }

GaussianInt scale(long long k, const GaussianInt& x) {
    return {checked_mul(k, x.a), checked_mul(k, x.b)};
}

EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
    return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
    return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
}

EisensteinInt operator-(const EisensteinInt& x) {
    return {checked_sub(0, x.a), checked_sub(0, x.b)};
}

EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
    // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w, using w^2 = -1 - w.
    const long long ac = checked_mul(x.a, y.a);
    const long long bd = checked_mul(x.b, y.b);
    const long long ad = checked_mul(x.a, y.b);
    const long long bc = checked_mul(x.b, y.a);
    return {checked_sub(ac, bd), checked_sub(checked_add(ad, bc), bd)};
}

EisensteinInt conj(const EisensteinInt& x) {
    // conj(a + bw) = a + b*w^2 = (a - b) - bw.
    return {checked_sub(x.a, x.b), checked_sub(0, x.b)};
}

long long norm(const EisensteinInt& x) {
    return checked_add(checked_sub(checked_mul(x.a, x.a), checked_mul(x.a, x.b)),
                       checked_mul(x.b, x.b));
}

bool is_zero(const EisensteinInt& x) { return x.a == 0 && x.b == 0; }

EisensteinInt scale(long long k, const EisensteinInt& x) {
    return {checked_mul(k, x.a), checked_mul(k, x.b)};
}

namespace {

template <typename Ring>
bool divides_impl(const Ring& d, const Ring& x) {
    if (is_zero(d)) {
        throw std::invalid_argument("ideal generator must be nonzero");
    }
    const Ring y = x * conj(d);
    const long long n = norm(d);
    return y.a % n == 0 && y.b % n == 0;
}

template <typename Ring>
long long order_impl(const Ring& v, const Ring& ideal_gen) {
    if (is_zero(v)) {
        throw std::invalid_argument("translation vector must be nonzero");
    }
    if (is_zero(ideal_gen)) {
        throw std::invalid_argument("ideal generator must be nonzero");
    }
    const long long bound = norm(ideal_gen);
    for (long long k = 1; k <= bound; ++k) {
        if (divides_impl(ideal_gen, scale(k, v))) {
            return k;
        }
    }
    throw std::logic_error("translation order not found below the norm bound");
}

}  // namespace

bool ring_divides(const GaussianInt& d, const GaussianInt& x) { return divides_impl(d, x); }
bool ring_divides(const EisensteinInt& d, const EisensteinInt& x) { return divides_impl(d, x); }

long long translation_order(const GaussianInt& v, const GaussianInt& ideal_gen) {
    return order_impl(v, ideal_gen);
}
long long translation_order(const EisensteinInt& v, const EisensteinInt& ideal_gen) {
    return order_impl(v, ideal_gen);
}

void validate_toroidal_id(const ToroidalMapId& id) {
    if (id.b < 1) {
        throw std::invalid_argument("toroidal parameter b must be positive");
    }
}

MapType toroidal_type(const ToroidalMapId& id) {
    validate_toroidal_id(id);
    switch (id.family) {
        case TorusFamily::sq44: return {4, 4};
        case TorusFamily::tri36: return {3, 6};
        case TorusFamily::hex63: return {6, 3};
    }
    throw std::logic_error("unhandled torus family");
}

namespace {

GaussianInt square_ideal_gen(const ToroidalMapId& id) {
    return id.variant == TorusVariant::b0 ? GaussianInt{id.b, 0} : GaussianInt{id.b, id.b};
}

EisensteinInt triangular_ideal_gen(const ToroidalMapId& id) {
    return id.variant == TorusVariant::b0 ? EisensteinInt{id.b, 0} : EisensteinInt{-id.b, id.b};
}

// The translations of the square-lattice map, per mirror link: the
// vertex-edge mirror automorphism translates by 1, the edge-face one by i,
// the vertex-face one by 1+i.
GaussianInt square_translation(LinkKind k) {
    switch (k) {
        case LinkKind::l01: return {1, 0};
        case LinkKind::l12: return {0, 1};
        case LinkKind::l02: return {1, 1};
        default: throw std::logic_error("link does not occur on the square torus");
    }
}

// The translations of the {3,6} map: the vertex-edge mirror automorphism
// translates by -1, the 0212 mirrors by -2 - w.
EisensteinInt triangular_translation(LinkKind k) {
    switch (k) {
        case LinkKind::l01: return {-1, 0};
        case LinkKind::l0212: return {-2, -1};
        default: throw std::logic_error("link does not occur on the {3,6} torus");
    }
}

std::vector<PatternReport> patterns_from_lattice(const ToroidalMapId& id) {
    std::vector<PatternReport> rows;
    for (const ReflectionLink& rl : classify_type(toroidal_type(id))) {
        PatternReport row;
        row.reflection = rl.reflection;
        row.link = rl.link;
        if (id.family == TorusFamily::sq44) {
            row.link_index = translation_order(square_translation(rl.link), square_ideal_gen(id));
        } else {
            row.link_index =
                translation_order(triangular_translation(rl.link), triangular_ideal_gen(id));
        }
        row.pattern = pattern_string(rl.link, *row.link_index);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

long long torus_rotation_order(const ToroidalMapId& id) {
    validate_toroidal_id(id);
    if (id.family == TorusFamily::sq44) {
        return checked_mul(4, norm(square_ideal_gen(id)));
    }
    return checked_mul(6, norm(triangular_ideal_gen(id)));
}

std::vector<PatternReport> toroidal_patterns(const ToroidalMapId& id) {
    validate_toroidal_id(id);
    if (id.family == TorusFamily::hex63) {
        return dualize(patterns_from_lattice({TorusFamily::tri36, id.variant, id.b}));
    }
    return patterns_from_lattice(id);
}

Presentation toroidal_presentation(const ToroidalMapId& id) {
    validate_toroidal_id(id);
    const MapType t = toroidal_type(id);
    Word translation;
    switch (id.family) {
        case TorusFamily::sq44:
            // B C^-1 translates by 1; B A C translates by 1+i.
            translation = id.variant == TorusVariant::b0 ? Word{kGenB, -kGenC}
                                                         : Word{kGenB, kGenA, kGenC};
            break;
        case TorusFamily::tri36:
            // C^3 A translates by -1; C^3 B^2 C B^2 translates by -2 - w.
            translation = id.variant == TorusVariant::b0
                              ? Word{kGenC, kGenC, kGenC, kGenA}
                              : Word{kGenC, kGenC, kGenC, kGenB, kGenB, kGenC, kGenB, kGenB};
            break;
        case TorusFamily::hex63:
            // Dual words: the roles of B and C swap with the 0 and 2 labels.
            translation = id.variant == TorusVariant::b0
                              ? Word{kGenB, kGenB, kGenB, kGenA}
                              : Word{kGenB, kGenB, kGenB, kGenC, kGenC, kGenB, kGenC, kGenC};
            break;
    }
    if (id.b > 1'000'000) {
        throw std::invalid_argument("toroidal parameter too large for a relator power");
    }
    return rotation_triangle(t.m, t.n, {word_power(translation, id.b)});
}

}  // namespace regmap
