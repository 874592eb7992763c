#include "regmap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "regmap/flag_tracer.hpp"
#include "regmap/hyperbolic.hpp"
#include "regmap/lattice_tori.hpp"
#include "regmap/patterns.hpp"
#include "regmap/report_io.hpp"
#include "regmap/surface_families.hpp"

namespace regmap {

namespace {

CheckResult ok(std::string name, std::string detail = "") {
    return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

std::vector<CensusPattern> distinct_links(const std::vector<PatternReport>& rows) {
    std::set<std::pair<LinkKind, long long>> seen;
    for (const PatternReport& row : rows) {
        if (row.link_index) {
            seen.insert({row.link, *row.link_index});
        }
    }
    std::vector<CensusPattern> links;
    for (const auto& [link, index] : seen) {
        links.push_back({link, index});
    }
    return links;
}

bool same_links(const std::vector<CensusPattern>& a, const std::vector<CensusPattern>& b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].link != b[i].link || a[i].index != b[i].index) {
            return false;
        }
    }
    return true;
}

std::string links_string(const std::vector<CensusPattern>& links) {
    std::ostringstream out;
    for (std::size_t i = 0; i < links.size(); ++i) {
        out << (i ? "," : "") << to_string(links[i].link) << "=" << links[i].index;
    }
    return out.str();
}

std::string type_label(const MapType& t) {
    return "{" + std::to_string(t.m) + "," + std::to_string(t.n) + "}";
}

// (reflection, link, index) triple a toroidal row must show.
struct TorusRowForm {
    char reflection;
    LinkKind link;
    long long index;
};

struct TorusForm {
    ToroidalMapId id;
    std::string label;
    long long order;
    std::array<TorusRowForm, 3> rows;
};

TorusForm torus_form(TorusFamily family, TorusVariant variant, long long b) {
    const bool doubled = variant == TorusVariant::bb;
    TorusForm form;
    form.id = {family, variant, b};
    const MapType type = toroidal_type(form.id);
    form.label = type_label(type) + "_{" + std::to_string(b) + "," +
                 (doubled ? std::to_string(b) : "0") + "}";
    switch (family) {
        case TorusFamily::sq44:
            form.order = doubled ? 8 * b * b : 4 * b * b;
            form.rows = {{{'P', LinkKind::l01, doubled ? 2 * b : b},
                          {'Q', LinkKind::l12, doubled ? 2 * b : b},
                          {'R', LinkKind::l02, b}}};
            break;
        case TorusFamily::tri36:
            form.order = doubled ? 18 * b * b : 6 * b * b;
            form.rows = {{{'P', LinkKind::l01, doubled ? 3 * b : b},
                          {'Q', LinkKind::l0212, b},
                          {'R', LinkKind::l0212, b}}};
            break;
        case TorusFamily::hex63:
            form.order = doubled ? 18 * b * b : 6 * b * b;
            form.rows = {{{'P', LinkKind::l0102, b},
                          {'Q', LinkKind::l12, doubled ? 3 * b : b},
                          {'R', LinkKind::l0102, b}}};
            break;
    }
    return form;
}

std::vector<TorusForm> all_torus_forms(long long max_b) {
    std::vector<TorusForm> forms;
    for (long long b = 1; b <= max_b; ++b) {
        for (TorusFamily family :
             {TorusFamily::sq44, TorusFamily::tri36, TorusFamily::hex63}) {
            for (TorusVariant variant : {TorusVariant::b0, TorusVariant::bb}) {
                forms.push_back(torus_form(family, variant, b));
            }
        }
    }
    return forms;
}

// Traces a map and requires agreement with the classification, the
// mirror-count bound, and optionally the expected curve aggregate.
CheckResult oracle_check(const std::string& name, const Presentation& rotation,
                         const MapType& type, const EnumOptions& options,
                         const std::vector<PatternCount>* expected = nullptr) {
    TracerComparison comparison;
    try {
        comparison = verify_against_patterns(rotation, type, options);
    } catch (const BudgetExceededError&) {
        throw;
    } catch (const std::exception& error) {
        return fail(name, error.what());
    }
    if (!comparison.consistent) {
        return fail(name, "tracer disagrees with the classification: " + comparison.detail);
    }
    if (!comparison.harnack_ok) {
        return fail(name, "a reflection fixes more curves than its bound");
    }
    if (expected != nullptr && aggregate_pattern_counts(comparison) != *expected) {
        return fail(name, "curve aggregate differs from the frozen counts");
    }
    return ok(name);
}

CheckResult report_rows_match(const std::string& name,
                              const std::vector<PatternReport>& got,
                              const std::vector<PatternReport>& expected) {
    if (got.size() != expected.size()) {
        return fail(name, "report row count differs");
    }
    for (std::size_t i = 0; i < got.size(); ++i) {
        if (got[i].reflection != expected[i].reflection ||
            got[i].link != expected[i].link ||
            got[i].link_index != expected[i].link_index) {
            return fail(name, std::string("row ") + expected[i].reflection +
                                  " differs: got " + got[i].pattern + ", expected " +
                                  expected[i].pattern);
        }
    }
    return ok(name);
}

const CensusRow& census_row(const std::string& id) {
    for (const std::vector<CensusRow>* census :
         {&genus2_census(), &genus3_census(), &hurwitz_census()}) {
        for (const CensusRow& row : *census) {
            if (row.id == id) {
                return row;
            }
        }
    }
    throw std::logic_error("no census row " + id);
}

CheckResult dual_matches_census(const std::string& name, const FamilyMap& map,
                                const std::string& census_id,
                                const EnumOptions& options) {
    const CensusRow& row = census_row(census_id);
    const std::vector<PatternReport> report =
        full_pattern_report(map.presentation, map.type, options);
    const std::vector<CensusPattern> links = distinct_links(dualize(report));
    const MapType dual_type{map.type.n, map.type.m};
    if (dual_type.m != row.type.m || dual_type.n != row.type.n) {
        return fail(name, "dual type differs from " + census_id);
    }
    if (map.rotation_order != row.rotation_order) {
        return fail(name, "rotation order differs from " + census_id);
    }
    if (!same_links(links, row.links)) {
        return fail(name, "dual links " + links_string(links) + " differ from " +
                              census_id + " links " + links_string(row.links));
    }
    return ok(name);
}

}  // namespace

std::vector<CheckResult> verify_spherical(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    for (const SphericalCensusRow& row : spherical_census(8)) {
        const std::string name = "sphere " + row.name + " " + type_label(row.type);
        const FamilyMap map = spherical_map(row.type);
        TracerComparison comparison;
        try {
            comparison =
                verify_against_patterns(map.presentation, row.type, options.enum_options);
        } catch (const BudgetExceededError&) {
            throw;
        } catch (const std::exception& error) {
            results.push_back(fail(name, error.what()));
            continue;
        }
        if (!comparison.consistent || !comparison.harnack_ok) {
            results.push_back(fail(name, "tracer disagrees: " + comparison.detail));
        } else if (aggregate_pattern_counts(comparison) != row.patterns) {
            results.push_back(fail(name, "curve aggregate differs from the frozen counts"));
        } else if (comparison.rotation_order != map.rotation_order) {
            results.push_back(fail(name, "rotation order differs from the closed form"));
        } else if (comparison.genus != 0) {
            results.push_back(fail(name, "genus is not zero"));
        } else {
            results.push_back(ok(name));
        }
    }
    return results;
}

std::vector<CheckResult> verify_tori(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    for (const TorusForm& form : all_torus_forms(6)) {
        const std::string name = "torus " + form.label + " lattice";
        if (torus_rotation_order(form.id) != form.order) {
            results.push_back(fail(name, "rotation order differs from the closed form"));
            continue;
        }
        const std::vector<PatternReport> rows = toroidal_patterns(form.id);
        bool good = rows.size() == 3;
        std::string detail;
        for (std::size_t i = 0; good && i < 3; ++i) {
            const TorusRowForm& want = form.rows[i];
            if (rows[i].reflection != want.reflection || rows[i].link != want.link ||
                rows[i].link_index != want.index ||
                rows[i].pattern != pattern_string(want.link, want.index)) {
                good = false;
                detail = std::string("row ") + want.reflection +
                         " differs from the closed form";
            }
        }
        results.push_back(good ? ok(name) : fail(name, detail));
    }
    for (const TorusForm& form : all_torus_forms(3)) {
        const std::string name = "torus " + form.label + " tracer";
        const Presentation rotation = toroidal_presentation(form.id);
        const std::optional<long long> order = group_order(rotation, options.enum_options);
        if (order != form.order) {
            results.push_back(fail(name, "presentation order differs from the lattice"));
            continue;
        }
        const TracerComparison comparison =
            verify_against_patterns(rotation, toroidal_type(form.id), options.enum_options);
        if (!comparison.consistent || !comparison.harnack_ok) {
            results.push_back(fail(name, "tracer disagrees: " + comparison.detail));
        } else if (comparison.genus != 1) {
            results.push_back(fail(name, "genus is not one"));
        } else {
            results.push_back(ok(name));
        }
    }
    return results;
}

std::vector<CheckResult> verify_families(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    const EnumOptions& enum_options = options.enum_options;

    auto check_member = [&](const std::string& name, const FamilyMap& map,
                            long long expected_order, long long expected_genus) {
        const std::optional<long long> order = group_order(map.presentation, enum_options);
        if (order != expected_order || map.rotation_order != expected_order) {
            results.push_back(fail(name, "rotation order differs from the closed form"));
            return;
        }
        if (genus_from_order(map.type, expected_order) != expected_genus) {
            results.push_back(fail(name, "genus differs from the closed form"));
            return;
        }
        const std::vector<PatternReport> report =
            full_pattern_report(map.presentation, map.type, enum_options);
        results.push_back(report_rows_match(name, report, map.expected));
    };

    for (long long g = 2; g <= 8; ++g) {
        check_member("family accola_maclachlan " + std::to_string(g),
                     accola_maclachlan(g), 8 * (g + 1), g);
    }
    for (long long g = 2; g <= 8; ++g) {
        check_member("family wiman_i " + std::to_string(g), wiman_type_one(g), 4 * g + 2,
                     g);
    }
    for (long long g = 3; g <= 8; ++g) {
        check_member("family wiman_ii " + std::to_string(g), wiman_type_two(g), 8 * g, g);
    }
    check_member("family bolza", bolza(), 48, 2);
    {
        const BolzaMatrixCheck matrices = bolza_matrix_check();
        const bool pass = matrices.group_order == 48 && matrices.s1_order == 2 &&
                          matrices.s2_order == 2;
        results.push_back(pass ? ok("family bolza matrices")
                               : fail("family bolza matrices",
                                      "matrix group or mirror orders differ"));
    }
    for (long long n = 3; n <= 6; ++n) {
        const std::string name = "family fermat " + std::to_string(n);
        const FamilyMap map = fermat_map(n);
        check_member(name, map, 6 * n * n, (n - 1) * (n - 2) / 2);
        const FermatMirrorOrders orders = fermat_mirror_orders(static_cast<int>(n));
        const long long closure = fermat_closure_order(static_cast<int>(n));
        bool pass = closure == 6 * n * n;
        std::string detail = pass ? "" : "matrix closure order differs";
        for (const PatternReport& row : map.expected) {
            const long long want =
                row.link == LinkKind::l01 ? orders.s2 : orders.s1;
            if (row.link_index != want) {
                pass = false;
                detail = "matrix mirror order differs from the pattern index";
            }
        }
        results.push_back(pass ? ok(name + " matrices") : fail(name + " matrices", detail));
    }
    {
        const FamilyMap map = fermat_map(4);
        const CensusRow& row = census_row("M.3.2");
        const std::vector<CensusPattern> links = distinct_links(
            full_pattern_report(map.presentation, map.type, enum_options));
        results.push_back(
            map.rotation_order == row.rotation_order && same_links(links, row.links)
                ? ok("family fermat 4 equals census row M.3.2")
                : fail("family fermat 4 equals census row M.3.2",
                       "links " + links_string(links) + " differ"));
    }
    {
        const FamilyMap map = fermat_map(3);
        const ToroidalMapId torus{TorusFamily::tri36, TorusVariant::b0, 3};
        const std::vector<CensusPattern> links = distinct_links(
            full_pattern_report(map.presentation, map.type, enum_options));
        const std::vector<CensusPattern> torus_links =
            distinct_links(toroidal_patterns(torus));
        results.push_back(
            map.rotation_order == torus_rotation_order(torus) &&
                    same_links(links, torus_links)
                ? ok("family fermat 3 equals the side-3 triangular torus")
                : fail("family fermat 3 equals the side-3 triangular torus",
                       "links or order differ"));
    }

    results.push_back(dual_matches_census("dual accola_maclachlan 2 equals M.2.2",
                                          accola_maclachlan(2), "M.2.2", enum_options));
    results.push_back(dual_matches_census("dual accola_maclachlan 3 equals M.3.5",
                                          accola_maclachlan(3), "M.3.5", enum_options));
    results.push_back(dual_matches_census("dual wiman_i 2 equals M.2.5", wiman_type_one(2),
                                          "M.2.5", enum_options));
    results.push_back(dual_matches_census("dual wiman_i 3 equals M.3.11", wiman_type_one(3),
                                          "M.3.11", enum_options));
    results.push_back(dual_matches_census("dual wiman_ii 3 equals M.3.7", wiman_type_two(3),
                                          "M.3.7", enum_options));

    {
        const HurwitzQuotient trivial = hurwitz_quotient(1, enum_options);
        results.push_back(trivial.group_order == 1 && !trivial.genus &&
                                  trivial.reports.empty()
                              ? ok("family hurwitz 1 degenerates")
                              : fail("family hurwitz 1 degenerates",
                                     "the k = 1 quotient is not trivial"));
    }
    for (long long k : {2, 3}) {
        const std::string name = "family hurwitz " + std::to_string(k);
        const HurwitzQuotient quotient = hurwitz_quotient(k, enum_options);
        const long long expected_order = k == 2 ? 504 : 168;
        const long long expected_genus = k == 2 ? 7 : 3;
        bool pass = quotient.group_order == expected_order && quotient.s_order == k &&
                    quotient.genus == expected_genus;
        if (pass) {
            const std::vector<CensusPattern> links = distinct_links(quotient.reports);
            pass = links.size() == 1 && links[0].link == LinkKind::l010212 &&
                   links[0].index == k;
        }
        results.push_back(pass ? ok(name)
                               : fail(name, "order, genus, or link index differs"));
    }

    {
        const double base = mirror_length(LinkKind::l010212, 1, {3, 7});
        const struct {
            long long k;
            double expected;
        } pins[] = {{1, 2.8981494452}, {2, 5.7962988904}, {3, 8.6944483356}};
        bool pass = true;
        std::string detail;
        for (const auto& pin : pins) {
            const double got = mirror_length(LinkKind::l010212, pin.k, {3, 7});
            if (std::abs(got - pin.expected) > options.tolerance) {
                pass = false;
                detail = "length at index " + std::to_string(pin.k) +
                         " differs from its pinned value";
            }
            if (std::abs(got - static_cast<double>(pin.k) * base) > options.tolerance) {
                pass = false;
                detail = "length is not proportional to the index";
            }
        }
        results.push_back(pass ? ok("mirror lengths at {3,7}")
                               : fail("mirror lengths at {3,7}", detail));
    }
    {
        bool pass = true;
        std::string detail;
        std::vector<PatternReport> bolza_rows =
            full_pattern_report(bolza().presentation, {3, 8}, enum_options);
        fill_mirror_lengths(bolza_rows, {3, 8});
        for (const PatternReport& row : bolza_rows) {
            if (!row.length || !(*row.length > 0) || !std::isfinite(*row.length)) {
                pass = false;
                detail = "a hyperbolic mirror is missing its length";
            }
        }
        std::vector<PatternReport> torus_rows =
            toroidal_patterns({TorusFamily::sq44, TorusVariant::b0, 2});
        fill_mirror_lengths(torus_rows, {4, 4});
        for (const PatternReport& row : torus_rows) {
            if (row.length) {
                pass = false;
                detail = "a torus mirror carries a length";
            }
        }
        results.push_back(pass ? ok("lengths engage exactly for hyperbolic types")
                               : fail("lengths engage exactly for hyperbolic types",
                                      detail));
    }
    return results;
}

std::vector<CheckResult> verify_oracle(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    const EnumOptions& enum_options = options.enum_options;

    for (const SphericalCensusRow& row : spherical_census(8)) {
        const FamilyMap map = spherical_map(row.type);
        results.push_back(oracle_check("oracle sphere " + row.name + " " +
                                           type_label(row.type),
                                       map.presentation, row.type, enum_options,
                                       &row.patterns));
    }
    for (const TorusForm& form : all_torus_forms(3)) {
        results.push_back(oracle_check("oracle torus " + form.label,
                                       toroidal_presentation(form.id),
                                       toroidal_type(form.id), enum_options));
    }
    {
        const TorusForm form = torus_form(TorusFamily::sq44, TorusVariant::b0, 4);
        results.push_back(oracle_check("oracle torus " + form.label,
                                       toroidal_presentation(form.id),
                                       toroidal_type(form.id), enum_options));
    }
    auto family_oracle = [&](const std::string& name, const FamilyMap& map) {
        results.push_back(oracle_check("oracle " + name, map.presentation, map.type,
                                       enum_options));
    };
    for (long long g = 2; g <= 5; ++g) {
        family_oracle("accola_maclachlan " + std::to_string(g), accola_maclachlan(g));
    }
    for (long long g = 2; g <= 5; ++g) {
        family_oracle("wiman_i " + std::to_string(g), wiman_type_one(g));
    }
    for (long long g = 3; g <= 5; ++g) {
        family_oracle("wiman_ii " + std::to_string(g), wiman_type_two(g));
    }
    family_oracle("bolza", bolza());
    for (long long n = 3; n <= 5; ++n) {
        family_oracle("fermat " + std::to_string(n), fermat_map(n));
    }
    for (long long k : {2, 3}) {
        const HurwitzQuotient quotient = hurwitz_quotient(k, enum_options);
        results.push_back(oracle_check("oracle hurwitz " + std::to_string(k),
                                       rotation_triangle(3, 7,
                                                         {word_power(
                                                             mirror_automorphism_word(
                                                                 LinkKind::l010212, {3, 7}),
                                                             k)}),
                                       {3, 7}, enum_options));
        if (quotient.group_order != (k == 2 ? 504 : 168)) {
            results.push_back(fail("oracle hurwitz " + std::to_string(k) + " order",
                                   "quotient order differs"));
        }
    }
    return results;
}

std::vector<CheckResult> verify_fixtures(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    TableOptions table_options;
    table_options.enum_options = options.enum_options;
    table_options.fixture_dir = options.fixture_dir;
    for (const std::vector<CensusRow>* census :
         {&genus2_census(), &genus3_census(), &hurwitz_census()}) {
        for (const CensusRow& row : *census) {
            const std::string name = "census " + row.id;
            const RowStatus status = check_census_row(row, table_options);
            switch (status) {
                case RowStatus::verified:
                    results.push_back(ok(name));
                    break;
                case RowStatus::fixture_missing:
                    results.push_back(ok(name, "fixture-missing"));
                    break;
                default:
                    results.push_back(fail(name, "row does not match its frozen values"));
                    break;
            }
        }
    }
    return results;
}

std::vector<CheckResult> verify_all(const VerifyOptions& options) {
    std::vector<CheckResult> results = verify_spherical(options);
    for (auto suite : {verify_tori, verify_families, verify_oracle, verify_fixtures}) {
        std::vector<CheckResult> more = suite(options);
        results.insert(results.end(), std::make_move_iterator(more.begin()),
                       std::make_move_iterator(more.end()));
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

std::string render_check_results(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    std::size_t passed = 0;
    for (const CheckResult& result : results) {
        if (result.pass) {
            ++passed;
            out << "ok " << result.name;
            if (!result.detail.empty()) {
                out << " (" << result.detail << ")";
            }
        } else {
            out << "FAIL " << result.name << ": " << result.detail;
        }
        out << '\n';
    }
    out << passed << "/" << results.size() << " checks passed\n";
    return out.str();
}

}  // namespace regmap
