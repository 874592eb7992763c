#include "regmap/surface_families.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "regmap/word.hpp"

namespace regmap {

long long genus_from_order(const MapType& t, long long order) {
    validate_map_type(t);
    if (order < 1) {
        throw std::invalid_argument("group order must be positive");
    }
    const auto require_divisor = [order](long long d, const char* what) {
        if (order % d != 0) {
            throw std::invalid_argument("group order " + std::to_string(order) +
                                        " is not divisible by " + std::to_string(d) + " (" + what +
                                        ")");
        }
        return order / d;
    };
    const long long vertices = require_divisor(t.n, "vertex count");
    const long long edges = require_divisor(2, "edge count");
    const long long faces = require_divisor(t.m, "face count");
    const long long chi = vertices - edges + faces;
    if ((2 - chi) % 2 != 0) {
        throw std::invalid_argument("Euler characteristic " + std::to_string(chi) +
                                    " is odd, so no closed orientable surface fits");
    }
    const long long genus = (2 - chi) / 2;
    if (genus < 0) {
        throw std::invalid_argument("order " + std::to_string(order) +
                                    " exceeds what a map of this type can carry");
    }
    return genus;
}

namespace {

int mod_reduce(long long value, int p) {
    const long long r = value % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

int mod_inverse(int value, int p) {
    // Extended Euclid; p need not be prime, the value just has to be a unit.
    int old_r = p, r = value;
    int old_s = 0, s = 1;
    while (r != 0) {
        const int q = old_r / r;
        const int next_r = old_r - q * r;
        old_r = r;
        r = next_r;
        const int next_s = old_s - q * s;
        old_s = s;
        s = next_s;
    }
    if (old_r != 1) {
        throw std::invalid_argument("matrix determinant is not invertible modulo " +
                                    std::to_string(p));
    }
    return mod_reduce(old_s, p);
}

int matrix_det(const MatrixModP& x) {
    return mod_reduce(static_cast<long long>(x.entry[0]) * x.entry[3] -
                          static_cast<long long>(x.entry[1]) * x.entry[2],
                      x.p);
}

}  // namespace

MatrixModP matrix_mod_p(int p, int a, int b, int c, int d) {
    if (p < 2) {
        throw std::invalid_argument("matrix modulus must be at least 2");
    }
    MatrixModP x;
    x.p = p;
    x.entry = {mod_reduce(a, p), mod_reduce(b, p), mod_reduce(c, p), mod_reduce(d, p)};
    if (matrix_det(x) == 0) {
        throw std::invalid_argument("matrix is singular modulo " + std::to_string(p));
    }
    return x;
}

MatrixModP matrix_identity(int p) {
    return matrix_mod_p(p, 1, 0, 0, 1);
}

MatrixModP operator*(const MatrixModP& x, const MatrixModP& y) {
    if (x.p != y.p) {
        throw std::invalid_argument("matrix moduli differ");
    }
    const int p = x.p;
    MatrixModP out;
    out.p = p;
    out.entry = {
        mod_reduce(static_cast<long long>(x.entry[0]) * y.entry[0] +
                       static_cast<long long>(x.entry[1]) * y.entry[2],
                   p),
        mod_reduce(static_cast<long long>(x.entry[0]) * y.entry[1] +
                       static_cast<long long>(x.entry[1]) * y.entry[3],
                   p),
        mod_reduce(static_cast<long long>(x.entry[2]) * y.entry[0] +
                       static_cast<long long>(x.entry[3]) * y.entry[2],
                   p),
        mod_reduce(static_cast<long long>(x.entry[2]) * y.entry[1] +
                       static_cast<long long>(x.entry[3]) * y.entry[3],
                   p),
    };
    return out;
}

MatrixModP matrix_inverse(const MatrixModP& x) {
    const int inv_det = mod_inverse(matrix_det(x), x.p);
    return matrix_mod_p(x.p, static_cast<long long>(inv_det) * x.entry[3] % x.p,
                        -static_cast<long long>(inv_det) * x.entry[1] % x.p,
                        -static_cast<long long>(inv_det) * x.entry[2] % x.p,
                        static_cast<long long>(inv_det) * x.entry[0] % x.p);
}

long long matrix_order(const MatrixModP& x) {
    const MatrixModP one = matrix_identity(x.p);
    MatrixModP acc = x;
    long long order = 1;
    const long long cap = static_cast<long long>(x.p) * x.p * x.p * x.p;
    while (!(acc == one)) {
        acc = acc * x;
        ++order;
        if (order > cap) {
            throw std::logic_error("matrix order exceeded the group size bound");
        }
    }
    return order;
}

long long matrix_closure_order(const std::vector<MatrixModP>& gens) {
    if (gens.empty()) {
        throw std::invalid_argument("closure needs at least one generator");
    }
    for (const MatrixModP& g : gens) {
        if (g.p != gens.front().p) {
            throw std::invalid_argument("matrix moduli differ");
        }
    }
    std::set<std::array<int, 4>> seen;
    std::vector<MatrixModP> frontier{matrix_identity(gens.front().p)};
    seen.insert(frontier.front().entry);
    while (!frontier.empty()) {
        const MatrixModP current = frontier.back();
        frontier.pop_back();
        for (const MatrixModP& g : gens) {
            const MatrixModP next = current * g;
            if (seen.insert(next.entry).second) {
                frontier.push_back(next);
            }
        }
    }
    return static_cast<long long>(seen.size());
}

BolzaMatrixCheck bolza_matrix_check() {
    BolzaMatrixCheck record;
    record.a = matrix_mod_p(3, 1, 1, 0, -1);
    record.b = matrix_mod_p(3, 0, -1, 1, -1);
    record.c = matrix_inverse(record.b) * record.a;
    const MatrixModP c2 = record.c * record.c;
    const MatrixModP c4 = c2 * c2;
    const MatrixModP b2 = record.b * record.b;
    record.s1 = c4 * b2 * record.c * b2;
    record.s2 = c4 * record.a;
    record.s1_order = matrix_order(record.s1);
    record.s2_order = matrix_order(record.s2);
    record.group_order = matrix_closure_order({record.a, record.b});
    return record;
}

namespace {

std::array<int, 3> validate_perm(const std::array<int, 3>& perm) {
    std::array<bool, 3> hit{false, false, false};
    for (int image : perm) {
        if (image < 0 || image > 2 || hit[image]) {
            throw std::invalid_argument("monomial permutation must be a bijection on {0,1,2}");
        }
        hit[image] = true;
    }
    return perm;
}

std::array<int, 3> normalize_exps(std::array<int, 3> exps, int n) {
    for (int& e : exps) {
        e = mod_reduce(e, n);
    }
    const int shift = exps[0];
    for (int& e : exps) {
        e = mod_reduce(e - shift, n);
    }
    return exps;
}

}  // namespace

MonomialMatrix monomial_matrix(const std::array<int, 3>& perm, const std::array<int, 3>& exps,
                               int n) {
    if (n < 1) {
        throw std::invalid_argument("root order must be at least 1");
    }
    MonomialMatrix x;
    x.perm = validate_perm(perm);
    x.exps = normalize_exps(exps, n);
    x.n = n;
    return x;
}

MonomialMatrix monomial_identity(int n) {
    return monomial_matrix({0, 1, 2}, {0, 0, 0}, n);
}

MonomialMatrix operator*(const MonomialMatrix& x, const MonomialMatrix& y) {
    if (x.n != y.n) {
        throw std::invalid_argument("monomial root orders differ");
    }
    std::array<int, 3> perm{};
    std::array<int, 3> exps{};
    for (int k = 0; k < 3; ++k) {
        perm[k] = x.perm[y.perm[k]];
        exps[k] = x.exps[y.perm[k]] + y.exps[k];
    }
    return monomial_matrix(perm, exps, x.n);
}

long long projective_order(const MonomialMatrix& x) {
    const MonomialMatrix one = monomial_identity(x.n);
    MonomialMatrix acc = x;
    long long order = 1;
    const long long cap = 6LL * x.n * x.n;
    while (!(acc == one)) {
        acc = acc * x;
        ++order;
        if (order > cap) {
            throw std::logic_error("projective order exceeded the group size bound");
        }
    }
    return order;
}

FermatGenerators fermat_generators(int n) {
    if (n < 2) {
        throw std::invalid_argument("Fermat degree must be at least 2");
    }
    FermatGenerators gens;
    gens.a = monomial_matrix({1, 0, 2}, {-1, 1, 0}, n);
    gens.b = monomial_matrix({2, 0, 1}, {0, 1, 0}, n);
    gens.c = monomial_matrix({2, 1, 0}, {-1, 0, 0}, n);
    return gens;
}

long long fermat_closure_order(int n) {
    if (n > 12) {
        throw std::invalid_argument("closure enumeration is capped at degree 12");
    }
    const FermatGenerators gens = fermat_generators(n);
    std::set<MonomialMatrix> seen;
    std::vector<MonomialMatrix> frontier{monomial_identity(n)};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        const MonomialMatrix current = frontier.back();
        frontier.pop_back();
        for (const MonomialMatrix& g : {gens.a, gens.b, gens.c}) {
            MonomialMatrix next = current * g;
            if (seen.insert(next).second) {
                frontier.push_back(std::move(next));
            }
        }
    }
    return static_cast<long long>(seen.size());
}

FermatMirrorOrders fermat_mirror_orders(int n) {
    const FermatGenerators gens = fermat_generators(n);
    MonomialMatrix cn = monomial_identity(n);
    for (int i = 0; i < n; ++i) {
        cn = cn * gens.c;
    }
    const MonomialMatrix b2 = gens.b * gens.b;
    FermatMirrorOrders orders;
    orders.s1 = projective_order(cn * b2 * gens.c * b2);
    orders.s2 = projective_order(cn * gens.a);
    return orders;
}

namespace {

// Expected rows in P, Q, R order: the classifier fixes each reflection's
// link, the caller supplies the three link indices.
std::vector<PatternReport> expected_reports(const MapType& t,
                                            const std::array<long long, 3>& indices) {
    std::vector<PatternReport> rows;
    const auto classes = classify_type(t);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        PatternReport row;
        row.reflection = classes[i].reflection;
        row.link = classes[i].link;
        row.link_index = indices[i];
        row.pattern = pattern_string(classes[i].link, indices[i]);
        rows.push_back(std::move(row));
    }
    return rows;
}

void validate_genus_parameter(long long g, long long minimum) {
    if (g < minimum) {
        throw std::invalid_argument("genus parameter must be at least " +
                                    std::to_string(minimum));
    }
    if (g > 1'000'000) {
        throw std::invalid_argument("genus parameter is too large");
    }
}

}  // namespace

FamilyMap accola_maclachlan(long long g) {
    validate_genus_parameter(g, 2);
    const int m = static_cast<int>(2 * g + 2);
    FamilyMap fam;
    fam.name = "accola_maclachlan(g=" + std::to_string(g) + ")";
    fam.presentation = rotation_triangle(m, 4, {word_power(Word{-kGenC, kGenB}, 2)});
    fam.type = MapType{m, 4};
    fam.rotation_order = 8 * (g + 1);
    fam.expected = expected_reports(fam.type, {2, g % 2 == 1 ? 2 : 4, 2});
    return fam;
}

FamilyMap wiman_type_one(long long g) {
    validate_genus_parameter(g, 2);
    const int m = static_cast<int>(4 * g + 2);
    const int n = static_cast<int>(2 * g + 1);
    FamilyMap fam;
    fam.name = "wiman_I(g=" + std::to_string(g) + ")";
    fam.presentation = rotation_triangle(m, n, {commutator(Word{kGenB}, Word{kGenC})});
    fam.type = MapType{m, n};
    fam.rotation_order = 4 * g + 2;
    fam.expected = expected_reports(fam.type, {1, 1, 1});
    return fam;
}

FamilyMap wiman_type_two(long long g) {
    validate_genus_parameter(g, 3);
    const int m = static_cast<int>(4 * g);
    Word relator = word_power(Word{kGenC}, 2);
    const Word b_power = word_power(Word{kGenB}, 2 * g);
    relator.insert(relator.end(), b_power.begin(), b_power.end());
    FamilyMap fam;
    fam.name = "wiman_II(g=" + std::to_string(g) + ")";
    fam.presentation = rotation_triangle(m, 4, {relator});
    fam.type = MapType{m, 4};
    fam.rotation_order = 8 * g;
    fam.expected = expected_reports(fam.type, {2, 2, 1});
    return fam;
}

FamilyMap bolza() {
    FamilyMap fam;
    fam.name = "bolza";
    fam.presentation =
        rotation_triangle(3, 8, {commutator(word_power(Word{kGenC}, 4), Word{kGenA})});
    fam.type = MapType{3, 8};
    fam.rotation_order = 48;
    fam.expected = expected_reports(fam.type, {2, 2, 2});
    return fam;
}

FamilyMap fermat_map(long long n) {
    if (n < 2) {
        throw std::invalid_argument("Fermat degree must be at least 2");
    }
    if (n > 1'000'000) {
        throw std::invalid_argument("Fermat degree is too large");
    }
    const Word c2 = word_power(Word{kGenC}, 2);
    Word conjugate{kGenA};
    conjugate.insert(conjugate.end(), c2.begin(), c2.end());
    conjugate.push_back(kGenA);
    FamilyMap fam;
    fam.name = "fermat(n=" + std::to_string(n) + ")";
    fam.presentation =
        rotation_triangle(3, static_cast<int>(2 * n), {commutator(c2, conjugate)});
    fam.type = MapType{3, static_cast<int>(2 * n)};
    fam.rotation_order = 6 * n * n;
    const bool odd = n % 2 == 1;
    fam.expected = expected_reports(fam.type, {odd ? 3 : 4, odd ? n : 2, odd ? n : 2});
    return fam;
}

FamilyMap spherical_map(const MapType& t) {
    validate_map_type(t);
    const long long m = t.m;
    const long long n = t.n;
    const long long denominator = 2 * m + 2 * n - m * n;
    if (denominator <= 0) {
        throw std::invalid_argument("type {" + std::to_string(t.m) + "," + std::to_string(t.n) +
                                    "} is not spherical");
    }
    if ((4 * m * n) % denominator != 0) {
        throw std::logic_error("spherical group order failed to be an integer");
    }
    FamilyMap fam;
    fam.type = t;
    fam.presentation = rotation_triangle(t.m, t.n);
    fam.rotation_order = 4 * m * n / denominator;

    std::array<long long, 3> indices{};
    if (t.m == 3 && t.n == 3) {
        fam.name = "tetrahedron";
        indices = {1, 1, 1};
    } else if (t.m == 3 && t.n == 4) {
        fam.name = "octahedron";
        indices = {4, 2, 2};
    } else if (t.m == 4 && t.n == 3) {
        fam.name = "cube";
        indices = {2, 4, 2};
    } else if (t.m == 3 && t.n == 5) {
        fam.name = "icosahedron";
        indices = {2, 2, 2};
    } else if (t.m == 5 && t.n == 3) {
        fam.name = "dodecahedron";
        indices = {2, 2, 2};
    } else if (t.m == 2) {
        fam.name = "hosohedron(n=" + std::to_string(t.n) + ")";
        // Odd n: P, R trace (0102)^1 around the two poles, Q traces (12)^n.
        // Even n: P (01)^2, Q (12)^n, R (02)^2.
        indices = t.n % 2 == 1 ? std::array<long long, 3>{1, n, 1}
                               : std::array<long long, 3>{2, n, 2};
    } else if (t.n == 2) {
        fam.name = "dihedron(m=" + std::to_string(t.m) + ")";
        indices = t.m % 2 == 1 ? std::array<long long, 3>{m, 1, 1}
                               : std::array<long long, 3>{m, 2, 2};
    } else {
        throw std::logic_error("unhandled spherical type");
    }
    fam.expected = expected_reports(t, indices);
    return fam;
}

HurwitzQuotient hurwitz_quotient(long long k, const EnumOptions& options) {
    if (k < 1) {
        throw std::invalid_argument("relator power must be at least 1");
    }
    if (k > 1'000'000) {
        throw std::invalid_argument("relator power is too large");
    }
    const MapType type{3, 7};
    const Word mirror_word = mirror_automorphism_word(LinkKind::l010212, type);
    const Presentation p = rotation_triangle(3, 7, {word_power(mirror_word, k)});
    const EnumResult result = enumerate_cosets(p, {}, options);
    if (result.status != EnumStatus::complete) {
        throw BudgetExceededError("quotient enumeration exceeded the coset budget (" +
                                  std::to_string(options.budget) + ")");
    }
    HurwitzQuotient quotient;
    quotient.k = k;
    quotient.group_order = static_cast<long long>(result.table.size());
    quotient.s_order = element_order(result.table, mirror_word);
    const bool realizes_type = element_order(result.table, Word{kGenA}) == 2 &&
                               element_order(result.table, Word{kGenB}) == 3 &&
                               element_order(result.table, Word{kGenC}) == 7;
    if (realizes_type) {
        quotient.genus = genus_from_order(type, quotient.group_order);
        for (const ReflectionLink& rl : classify_type(type)) {
            PatternReport row;
            row.reflection = rl.reflection;
            row.link = rl.link;
            row.link_index = link_index(result.table, rl.link, type);
            row.pattern = pattern_string(rl.link, *row.link_index);
            quotient.reports.push_back(std::move(row));
        }
    }
    return quotient;
}

namespace {

[[noreturn]] void manifest_error(std::size_t line, const std::string& message) {
    throw std::invalid_argument("fixture manifest line " + std::to_string(line) + ": " + message);
}

long long parse_positive_integer(const std::string& token, std::size_t line, const char* what) {
    long long value = 0;
    std::size_t used = 0;
    bool ok = true;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        ok = false;
    }
    if (!ok || used != token.size() || value < 1) {
        manifest_error(line,
                       std::string(what) + " must be a positive integer, got '" + token + "'");
    }
    return value;
}

}  // namespace

std::vector<FixtureEntry> parse_fixture_manifest(const std::string& text) {
    std::vector<FixtureEntry> entries;
    std::istringstream stream(text);
    std::string raw;
    std::size_t line_number = 0;
    while (std::getline(stream, raw)) {
        ++line_number;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream fields(raw);
        FixtureEntry entry;
        if (!(fields >> entry.name)) {
            continue;
        }
        if (entry.name.find_first_not_of(
                "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-.") !=
            std::string::npos) {
            manifest_error(line_number, "fixture name '" + entry.name +
                                            "' may only use letters, digits, '_', '-', '.'");
        }
        std::string m_token, n_token, order_token;
        if (!(fields >> m_token >> n_token >> order_token)) {
            manifest_error(line_number, "expected 'name m n rotation_order [links]'");
        }
        entry.type.m = static_cast<int>(parse_positive_integer(m_token, line_number, "m"));
        entry.type.n = static_cast<int>(parse_positive_integer(n_token, line_number, "n"));
        validate_map_type(entry.type);
        entry.rotation_order =
            parse_positive_integer(order_token, line_number, "rotation order");
        std::string links_token;
        if (fields >> links_token) {
            std::string extra;
            if (fields >> extra) {
                manifest_error(line_number, "unexpected trailing field '" + extra + "'");
            }
            std::istringstream links(links_token);
            std::string item;
            while (std::getline(links, item, ',')) {
                const std::size_t eq = item.find('=');
                if (eq == std::string::npos) {
                    manifest_error(line_number, "link entry '" + item + "' is not link=index");
                }
                const auto link = link_from_string(item.substr(0, eq));
                if (!link) {
                    manifest_error(line_number,
                                   "unknown link '" + item.substr(0, eq) + "'");
                }
                if (!link_admissible(*link, entry.type)) {
                    manifest_error(line_number, "link " + item.substr(0, eq) +
                                                    " cannot occur on maps of type {" +
                                                    std::to_string(entry.type.m) + "," +
                                                    std::to_string(entry.type.n) + "}");
                }
                for (const FixtureExpectation& seen : entry.links) {
                    if (seen.link == *link) {
                        manifest_error(line_number,
                                       "duplicate link '" + item.substr(0, eq) + "'");
                    }
                }
                FixtureExpectation expectation;
                expectation.link = *link;
                expectation.index =
                    parse_positive_integer(item.substr(eq + 1), line_number, "link index");
                entry.links.push_back(expectation);
            }
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

FixtureMap fixture_map(const std::string& path, const MapType& declared,
                       const EnumOptions& options) {
    validate_map_type(declared);
    std::ifstream file(path);
    if (!file) {
        throw std::invalid_argument("cannot read fixture file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();

    FixtureMap fixture;
    fixture.presentation = parse_presentation(buffer.str());
    if (fixture.presentation.generators.size() != 3) {
        throw std::invalid_argument("fixture '" + path + "' must present exactly 3 generators");
    }
    fixture.type = declared;
    const EnumResult result = enumerate_cosets(fixture.presentation, {}, options);
    if (result.status != EnumStatus::complete) {
        throw BudgetExceededError("fixture enumeration exceeded the coset budget (" +
                                  std::to_string(options.budget) + ")");
    }
    const long long a_order = element_order(result.table, Word{kGenA});
    const long long b_order = element_order(result.table, Word{kGenB});
    const long long c_order = element_order(result.table, Word{kGenC});
    if (a_order != 2 || b_order != declared.m || c_order != declared.n) {
        throw std::invalid_argument(
            "fixture '" + path + "' does not realize type {" + std::to_string(declared.m) + "," +
            std::to_string(declared.n) + "}: generator orders are " + std::to_string(a_order) +
            ", " + std::to_string(b_order) + ", " + std::to_string(c_order));
    }
    fixture.rotation_order = static_cast<long long>(result.table.size());
    for (const ReflectionLink& rl : classify_type(declared)) {
        PatternReport row;
        row.reflection = rl.reflection;
        row.link = rl.link;
        row.link_index = link_index(result.table, rl.link, declared);
        row.pattern = pattern_string(rl.link, *row.link_index);
        fixture.reports.push_back(std::move(row));
    }
    return fixture;
}

}  // namespace regmap
