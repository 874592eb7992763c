#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "regmap/coset_enumerator.hpp"
#include "regmap/flag_tracer.hpp"
#include "regmap/patterns.hpp"
#include "regmap/presentation.hpp"
#include "regmap/report_io.hpp"
#include "regmap/surface_families.hpp"
#include "regmap/verify.hpp"
#include "regmap/word.hpp"

using namespace regmap;

namespace {

struct RunConfig {
    long long budget = 1'000'000;
    std::string fixture_dir = "fixtures";
    std::string format = "table";
    double tolerance = 1e-9;
};

EnumOptions enum_options(const RunConfig& config) {
    EnumOptions options;
    options.budget = config.budget;
    return options;
}

// Traces the mirrors of the extended group and copies the curve count of
// each reflection class into its report row. Counts stay disengaged when
// the doubled enumeration no longer fits the budget.
void fill_mirror_counts(MapReport& report, const Presentation& rotation,
                        const EnumOptions& options) {
    if (report.mirrors.empty()) {
        return;
    }
    TracerComparison comparison;
    try {
        comparison = verify_against_patterns(rotation, report.type, options);
    } catch (const BudgetExceededError&) {
        return;
    }
    if (!comparison.consistent) {
        return;
    }
    for (PatternReport& row : report.mirrors) {
        for (const ReflectionClassSummary& summary : comparison.traced) {
            if (summary.reflection == row.reflection) {
                row.mirror_count = summary.mirror_count;
                break;
            }
        }
    }
}

MapReport report_from_family_map(const FamilyMap& map, const RunConfig& config) {
    const EnumOptions options = enum_options(config);
    const std::optional<long long> order = group_order(map.presentation, options);
    if (!order) {
        throw BudgetExceededError("enumeration of '" + map.name +
                                  "' exceeded the coset budget (" +
                                  std::to_string(options.budget) + ")");
    }
    MapReport report;
    report.family = map.name;
    report.type = map.type;
    report.group_order = *order;
    report.genus = genus_from_order(map.type, *order);
    report.mirrors = full_pattern_report(map.presentation, map.type, options);
    fill_mirror_counts(report, map.presentation, options);
    return report;
}

MapReport hurwitz_report(long long k, const RunConfig& config) {
    const EnumOptions options = enum_options(config);
    const HurwitzQuotient quotient = hurwitz_quotient(k, options);
    MapReport report;
    report.family = "hurwitz(k=" + std::to_string(k) + ")";
    report.type = MapType{3, 7};
    report.group_order = quotient.group_order;
    report.genus = quotient.genus;
    report.mirrors = quotient.reports;
    if (quotient.genus) {
        const Word mirror_word = mirror_automorphism_word(LinkKind::l010212, report.type);
        const Presentation rotation = rotation_triangle(3, 7, {word_power(mirror_word, k)});
        fill_mirror_counts(report, rotation, options);
    }
    return report;
}

MapReport family_report(const std::string& family, const std::optional<long long>& param,
                        const std::optional<MapType>& type, const RunConfig& config) {
    if (family == "spherical") {
        if (param) {
            throw std::invalid_argument("--family spherical takes --m/--n, not --param");
        }
        if (!type) {
            throw std::invalid_argument("--family spherical needs --m and --n");
        }
        return report_from_family_map(spherical_map(*type), config);
    }
    if (type) {
        throw std::invalid_argument("--m/--n combine with --family spherical only");
    }
    if (family == "bolza") {
        if (param) {
            throw std::invalid_argument("--family bolza takes no --param");
        }
        return report_from_family_map(bolza(), config);
    }
    if (!param) {
        throw std::invalid_argument("--family " + family + " needs --param");
    }
    if (family == "hurwitz") {
        return hurwitz_report(*param, config);
    }
    if (family == "accola_maclachlan") {
        return report_from_family_map(accola_maclachlan(*param), config);
    }
    if (family == "wiman_i") {
        return report_from_family_map(wiman_type_one(*param), config);
    }
    if (family == "wiman_ii") {
        return report_from_family_map(wiman_type_two(*param), config);
    }
    if (family == "fermat") {
        return report_from_family_map(fermat_map(*param), config);
    }
    throw std::invalid_argument("unknown family '" + family + "'");
}

MapReport presentation_report(const std::string& path, const MapType& type,
                              const RunConfig& config) {
    if (!std::filesystem::exists(path)) {
        throw std::invalid_argument("presentation file not found: '" + path + "'");
    }
    const EnumOptions options = enum_options(config);
    const FixtureMap fixture = fixture_map(path, type, options);
    MapReport report;
    report.family = std::filesystem::path(path).stem().string();
    report.type = fixture.type;
    report.group_order = fixture.rotation_order;
    report.genus = genus_from_order(fixture.type, fixture.rotation_order);
    report.mirrors = fixture.reports;
    fill_mirror_counts(report, fixture.presentation, options);
    return report;
}

MapReport universal_report(const MapType& type) {
    validate_map_type(type);
    MapReport report;
    report.family = "universal";
    report.type = type;
    report.mirrors = universal_pattern_report(type);
    return report;
}

void print_report(MapReport report, const RunConfig& config) {
    fill_mirror_lengths(report.mirrors, report.type);
    if (config.format == "json") {
        std::cout << to_json(report);
    } else if (config.format == "csv") {
        std::cout << to_csv({report});
    } else {
        std::cout << render_text(report);
    }
}

int run_table(const std::string& id, long long b, const RunConfig& config) {
    TableOptions options;
    options.enum_options = enum_options(config);
    options.fixture_dir = config.fixture_dir;
    options.b = b;
    std::cout << render_named_table(id, options);
    return 0;
}

int run_verify(const std::string& suite, const RunConfig& config) {
    VerifyOptions options;
    options.enum_options = enum_options(config);
    options.fixture_dir = config.fixture_dir;
    options.tolerance = config.tolerance;
    std::vector<CheckResult> results;
    if (suite == "spherical") {
        results = verify_spherical(options);
    } else if (suite == "tori") {
        results = verify_tori(options);
    } else if (suite == "families") {
        results = verify_families(options);
    } else if (suite == "oracle") {
        results = verify_oracle(options);
    } else if (suite == "fixtures") {
        results = verify_fixtures(options);
    } else {
        results = verify_all(options);
    }
    std::cout << render_check_results(results);
    return all_passed(results) ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mirror patterns of regular maps: reports, tables, verification"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    RunConfig config;
    bool json_shorthand = false;
    app.add_option("--budget", config.budget, "coset enumeration cap")
        ->envname("REGMAP_BUDGET")
        ->check(CLI::PositiveNumber);
    app.add_option("--fixture-dir", config.fixture_dir, "directory with fixture presentations")
        ->envname("REGMAP_FIXTURES");
    app.add_option("--format", config.format, "report format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_flag("--json", json_shorthand, "shorthand for --format json");
    app.add_option("--tolerance", config.tolerance, "length comparison tolerance")
        ->check(CLI::PositiveNumber);

    CLI::App* pattern = app.add_subcommand(
        "pattern", "mirror pattern report for one map (family, presentation, or universal)");
    pattern->fallthrough();
    int m = 0;
    int n = 0;
    std::string presentation_path;
    std::string family;
    long long param = 0;
    CLI::Option* opt_m = pattern->add_option("--m", m, "face size m of the type {m,n}");
    CLI::Option* opt_n = pattern->add_option("--n", n, "vertex valency n of the type {m,n}");
    CLI::Option* opt_presentation =
        pattern->add_option("--presentation", presentation_path,
                            "rotation-group presentation file realizing the type {m,n}");
    CLI::Option* opt_family =
        pattern->add_option("--family", family, "built-in family")
            ->check(CLI::IsMember({"accola_maclachlan", "wiman_i", "wiman_ii", "fermat",
                                   "hurwitz", "bolza", "spherical"}));
    CLI::Option* opt_param = pattern->add_option(
        "--param", param, "family parameter: genus, Fermat degree, or relator power");
    opt_m->needs(opt_n);
    opt_n->needs(opt_m);
    opt_presentation->needs(opt_m)->excludes(opt_family);
    opt_param->needs(opt_family);

    CLI::App* table = app.add_subcommand("table", "render one published table with row status");
    table->fallthrough();
    std::string table_id;
    long long b = 2;
    table->add_option("--table", table_id, "table id")
        ->required()
        ->check(CLI::IsMember({"1", "2", "4", "5", "7", "t41", "t42"}));
    table->add_option("--b", b, "side parameter for the torus tables")->check(CLI::PositiveNumber);

    CLI::App* verify = app.add_subcommand("verify", "run cross-module verification suites");
    verify->fallthrough();
    std::string suite = "all";
    verify->add_option("--suite", suite, "suite to run")
        ->check(CLI::IsMember({"spherical", "tori", "families", "oracle", "fixtures", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    if (json_shorthand) {
        config.format = "json";
    }

    try {
        if (pattern->parsed()) {
            std::optional<MapType> type;
            if (opt_m->count() > 0) {
                type = MapType{m, n};
                validate_map_type(*type);
            }
            std::optional<long long> family_param;
            if (opt_param->count() > 0) {
                family_param = param;
            }
            MapReport report;
            if (opt_family->count() > 0) {
                report = family_report(family, family_param, type, config);
            } else if (type) {
                if (opt_presentation->count() > 0) {
                    report = presentation_report(presentation_path, *type, config);
                } else {
                    report = universal_report(*type);
                }
            } else {
                throw std::invalid_argument("pattern needs --family or --m/--n");
            }
            print_report(report, config);
            return 0;
        }
        if (table->parsed()) {
            return run_table(table_id, b, config);
        }
        return run_verify(suite, config);
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
