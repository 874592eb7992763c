#include "regmap/hyperbolic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace regmap {

double arcosh(double x) {
    if (std::isnan(x) || x < 1.0) {
        throw std::domain_error("arcosh requires an argument >= 1");
    }
    const double t = x - 1.0;
    return std::log1p(t + std::sqrt(t * (t + 2.0)));
}

bool is_hyperbolic_type(const MapType& t) {
    validate_map_type(t);
    return static_cast<long long>(t.m - 2) * (t.n - 2) > 4;
}

TriangleSides triangle_sides(const MapType& t) {
    if (!is_hyperbolic_type(t)) {
        throw std::domain_error("type {" + std::to_string(t.m) + "," + std::to_string(t.n) +
                                "} is not hyperbolic");
    }
    const double am = std::numbers::pi / t.m;
    const double an = std::numbers::pi / t.n;
    TriangleSides sides;
    sides.len01 = arcosh(std::cos(am) / std::sin(an));
    sides.len12 = arcosh(std::cos(an) / std::sin(am));
    sides.len02 = arcosh((std::cos(am) / std::sin(am)) * (std::cos(an) / std::sin(an)));
    sides.type = t;
    return sides;
}

double cycle_length(const std::string& cycle, const TriangleSides& sides) {
    if (cycle.size() < 2) {
        throw std::invalid_argument("cyclic label sequence needs at least two labels");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const char a = cycle[i];
        const char b = cycle[(i + 1) % cycle.size()];
        const char lo = std::min(a, b);
        const char hi = std::max(a, b);
        if (lo == '0' && hi == '1') {
            total += sides.len01;
        } else if (lo == '0' && hi == '2') {
            total += sides.len02;
        } else if (lo == '1' && hi == '2') {
            total += sides.len12;
        } else {
            throw std::invalid_argument("cyclic label sequence must alternate labels 0, 1, 2");
        }
    }
    return total;
}

double mirror_length(LinkKind k, long long index, const MapType& t) {
    if (index < 1) {
        throw std::invalid_argument("link index must be positive");
    }
    if (!link_admissible(k, t)) {
        throw std::invalid_argument("link " + to_string(k) + " cannot occur on maps of type {" +
                                    std::to_string(t.m) + "," + std::to_string(t.n) + "}");
    }
    return static_cast<double>(index) * cycle_length(to_string(k), triangle_sides(t));
}

}  // namespace regmap
