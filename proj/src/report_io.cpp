#include "regmap/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "regmap/flag_tracer.hpp"
#include "regmap/hyperbolic.hpp"
#include "regmap/lattice_tori.hpp"
#include "regmap/surface_families.hpp"

namespace regmap {

namespace {

using nlohmann::json;

json mirror_to_json(const PatternReport& row) {
    json entry;
    entry["class"] = std::string(1, row.reflection);
    entry["link"] = to_string(row.link);
    entry["index"] = row.link_index ? json(*row.link_index) : json(nullptr);
    entry["pattern"] = row.pattern;
    entry["count"] = row.mirror_count ? json(*row.mirror_count) : json(nullptr);
    entry["length"] = row.length ? json(*row.length) : json(nullptr);
    return entry;
}

[[noreturn]] void schema_error(const std::string& what) {
    throw std::invalid_argument("report JSON: " + what);
}

std::optional<long long> optional_integer_field(const json& object, const char* key) {
    if (!object.contains(key)) {
        schema_error(std::string("missing '") + key + "'");
    }
    if (object[key].is_null()) {
        return std::nullopt;
    }
    if (!object[key].is_number_integer()) {
        schema_error(std::string("'") + key + "' must be an integer or null");
    }
    return object[key].get<long long>();
}

PatternReport mirror_from_json(const json& entry) {
    if (!entry.is_object()) {
        schema_error("each mirror must be an object");
    }
    PatternReport row;
    if (!entry.contains("class") || !entry["class"].is_string()) {
        schema_error("'class' must be a string");
    }
    const std::string reflection = entry["class"].get<std::string>();
    if (reflection.size() != 1 || std::string("PQR").find(reflection) == std::string::npos) {
        schema_error("'class' must be one of P, Q, R");
    }
    row.reflection = reflection[0];
    if (!entry.contains("link") || !entry["link"].is_string()) {
        schema_error("'link' must be a string");
    }
    const std::optional<LinkKind> link = link_from_string(entry["link"].get<std::string>());
    if (!link) {
        schema_error("unknown link '" + entry["link"].get<std::string>() + "'");
    }
    row.link = *link;
    row.link_index = optional_integer_field(entry, "index");
    if (!entry.contains("pattern") || !entry["pattern"].is_string()) {
        schema_error("'pattern' must be a string");
    }
    row.pattern = entry["pattern"].get<std::string>();
    row.mirror_count = optional_integer_field(entry, "count");
    if (!entry.contains("length")) {
        schema_error("missing 'length'");
    }
    if (entry["length"].is_null()) {
        row.length = std::nullopt;
    } else if (entry["length"].is_number()) {
        row.length = entry["length"].get<double>();
    } else {
        schema_error("'length' must be a number or null");
    }
    return row;
}

}  // namespace

std::string to_json(const MapReport& report) {
    json document;
    document["family"] = report.family;
    document["type"] = json::array({report.type.m, report.type.n});
    document["group_order"] = report.group_order ? json(*report.group_order) : json(nullptr);
    document["genus"] = report.genus ? json(*report.genus) : json(nullptr);
    json mirrors = json::array();
    for (const PatternReport& row : report.mirrors) {
        mirrors.push_back(mirror_to_json(row));
    }
    document["mirrors"] = mirrors;
    return document.dump(2) + "\n";
}

MapReport map_report_from_json(const std::string& text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("report JSON: ") + e.what());
    }
    if (!document.is_object()) {
        schema_error("top level must be an object");
    }
    MapReport report;
    if (!document.contains("family") || !document["family"].is_string()) {
        schema_error("'family' must be a string");
    }
    report.family = document["family"].get<std::string>();
    if (!document.contains("type") || !document["type"].is_array() ||
        document["type"].size() != 2 || !document["type"][0].is_number_integer() ||
        !document["type"][1].is_number_integer()) {
        schema_error("'type' must be an array of two integers");
    }
    report.type.m = document["type"][0].get<int>();
    report.type.n = document["type"][1].get<int>();
    report.group_order = optional_integer_field(document, "group_order");
    report.genus = optional_integer_field(document, "genus");
    if (!document.contains("mirrors") || !document["mirrors"].is_array()) {
        schema_error("'mirrors' must be an array");
    }
    for (const json& entry : document["mirrors"]) {
        report.mirrors.push_back(mirror_from_json(entry));
    }
    return report;
}

std::string format_length(double length) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.10f", length);
    return buffer;
}

void fill_mirror_lengths(std::vector<PatternReport>& rows, const MapType& t) {
    if (!is_hyperbolic_type(t)) {
        return;
    }
    for (PatternReport& row : rows) {
        if (row.link_index) {
            row.length = mirror_length(row.link, *row.link_index, t);
        }
    }
}

std::string to_csv(const std::vector<MapReport>& reports) {
    std::ostringstream out;
    out << "family,m,n,class,link,index,pattern,count,length\n";
    for (const MapReport& report : reports) {
        for (const PatternReport& row : report.mirrors) {
            out << report.family << ',' << report.type.m << ',' << report.type.n << ','
                << row.reflection << ',' << to_string(row.link) << ',';
            if (row.link_index) {
                out << *row.link_index;
            }
            out << ',' << row.pattern << ',';
            if (row.mirror_count) {
                out << *row.mirror_count;
            }
            out << ',';
            if (row.length) {
                out << format_length(*row.length);
            }
            out << '\n';
        }
    }
    return out.str();
}

namespace {

// Column-aligned renderer: two-space gutters, a dash rule under the
// header, every cell left-justified.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<std::string> cells) {
        cells.resize(header_.size());
        rows_.push_back(std::move(cells));
    }

    std::string str() const {
        std::vector<std::size_t> widths(header_.size());
        for (std::size_t i = 0; i < header_.size(); ++i) {
            widths[i] = header_[i].size();
        }
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                widths[i] = std::max(widths[i], row[i].size());
            }
        }
        std::ostringstream out;
        auto emit = [&](const std::vector<std::string>& row) {
            std::string line;
            for (std::size_t i = 0; i < row.size(); ++i) {
                std::string cell = row[i];
                cell.resize(widths[i], ' ');
                line += cell;
                if (i + 1 < row.size()) {
                    line += "  ";
                }
            }
            while (!line.empty() && line.back() == ' ') {
                line.pop_back();
            }
            out << line << '\n';
        };
        emit(header_);
        std::vector<std::string> rule;
        for (std::size_t width : widths) {
            rule.push_back(std::string(width, '-'));
        }
        emit(rule);
        for (const auto& row : rows_) {
            emit(row);
        }
        return out.str();
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string type_string(const MapType& t) {
    return "{" + std::to_string(t.m) + "," + std::to_string(t.n) + "}";
}

}  // namespace

std::string render_text(const MapReport& report) {
    std::ostringstream out;
    out << "family  " << report.family << '\n';
    out << "type    " << type_string(report.type) << '\n';
    out << "order   " << (report.group_order ? std::to_string(*report.group_order) : "-")
        << '\n';
    out << "genus   " << (report.genus ? std::to_string(*report.genus) : "-") << '\n';
    out << '\n';
    TextTable table({"class", "link", "index", "pattern", "count", "length"});
    for (const PatternReport& row : report.mirrors) {
        table.add_row({std::string(1, row.reflection), to_string(row.link),
                       row.link_index ? std::to_string(*row.link_index) : "-", row.pattern,
                       row.mirror_count ? std::to_string(*row.mirror_count) : "-",
                       row.length ? format_length(*row.length) : "-"});
    }
    out << table.str();
    return out.str();
}

std::string to_string(RowStatus s) {
    switch (s) {
        case RowStatus::verified: return "verified";
        case RowStatus::fixture_missing: return "fixture-missing";
        case RowStatus::mismatch: return "mismatch";
        case RowStatus::optional_skipped: return "optional";
    }
    throw std::logic_error("unreachable row status");
}

const std::vector<CensusRow>& genus2_census() {
    static const std::vector<CensusRow> rows = {
        {"M.2.1", {3, 8}, "S1", 96, 48, 2, {{LinkKind::l01, 2}, {LinkKind::l0212, 2}},
         "bolza", false},
        {"M.2.2", {4, 6}, "S2", 48, 24, 2,
         {{LinkKind::l01, 4}, {LinkKind::l02, 2}, {LinkKind::l12, 2}}, "am:2", true},
        {"M.2.3", {4, 8}, "S1", 32, 16, 2,
         {{LinkKind::l01, 2}, {LinkKind::l02, 1}, {LinkKind::l12, 2}}, "", false},
        {"M.2.4", {6, 6}, "S2", 24, 12, 2,
         {{LinkKind::l01, 2}, {LinkKind::l02, 2}, {LinkKind::l12, 2}}, "", false},
        {"M.2.5", {5, 10}, "S3", 20, 10, 2, {{LinkKind::l01, 1}, {LinkKind::l0212, 1}},
         "wi:2", true},
        {"M.2.6", {8, 8}, "S1", 16, 8, 2,
         {{LinkKind::l01, 1}, {LinkKind::l02, 1}, {LinkKind::l12, 1}}, "", false},
    };
    return rows;
}

const std::vector<CensusRow>& genus3_census() {
    static const std::vector<CensusRow> rows = {
        {"M.3.1", {3, 7}, "S1", 336, 168, 3, {{LinkKind::l010212, 3}}, "hurwitz:3", false},
        {"M.3.2", {3, 8}, "S2", 192, 96, 3, {{LinkKind::l01, 4}, {LinkKind::l0212, 2}},
         "fermat:4", false},
        {"M.3.3", {3, 12}, "S3", 96, 48, 3, {{LinkKind::l01, 2}, {LinkKind::l0212, 2}},
         "", false},
        {"M.3.4", {4, 6}, "S4", 96, 48, 3,
         {{LinkKind::l01, 2}, {LinkKind::l02, 2}, {LinkKind::l12, 4}}, "", false},
        {"M.3.5", {4, 8}, "S5", 64, 32, 3,
         {{LinkKind::l01, 2}, {LinkKind::l02, 2}, {LinkKind::l12, 2}}, "am:3", true},
        {"M.3.6", {4, 8}, "S2", 64, 32, 3,
         {{LinkKind::l01, 2}, {LinkKind::l02, 2}, {LinkKind::l12, 4}}, "", false},
        {"M.3.7", {4, 12}, "S6", 48, 24, 3,
         {{LinkKind::l01, 2}, {LinkKind::l02, 1}, {LinkKind::l12, 2}}, "wii:3", true},
        {"M.3.8", {6, 6}, "S4", 48, 24, 3,
         {{LinkKind::l01, 2}, {LinkKind::l02, 1}, {LinkKind::l12, 2}}, "", false},
        {"M.3.9", {8, 8}, "S2", 32, 16, 3,
         {{LinkKind::l01, 2}, {LinkKind::l02, 1}, {LinkKind::l12, 2}}, "", false},
        {"M.3.10", {8, 8}, "S5", 32, 16, 3,
         {{LinkKind::l01, 2}, {LinkKind::l02, 1}, {LinkKind::l12, 2}}, "", false},
        {"M.3.11", {7, 14}, "S7", 28, 14, 3, {{LinkKind::l01, 1}, {LinkKind::l0212, 1}},
         "wi:3", true},
        {"M.3.12", {12, 12}, "S6", 24, 12, 3,
         {{LinkKind::l01, 1}, {LinkKind::l02, 1}, {LinkKind::l12, 1}}, "", false},
    };
    return rows;
}

const std::vector<CensusRow>& hurwitz_census() {
    static const std::vector<CensusRow> rows = {
        {"H1", {3, 7}, "", 336, 168, 3, {{LinkKind::l010212, 3}}, "hurwitz:3", false},
        {"H2", {3, 7}, "", 1008, 504, 7, {{LinkKind::l010212, 2}}, "hurwitz:2", false},
        {"H3", {3, 7}, "", 2184, 1092, 14, {{LinkKind::l010212, 7}}, "", false},
        {"H4", {3, 7}, "", 2184, 1092, 14, {{LinkKind::l010212, 7}}, "", false},
        {"H5", {3, 7}, "", 2184, 1092, 14, {{LinkKind::l010212, 6}}, "", false},
        {"H6", {3, 7}, "", 19656, 9828, 118, {{LinkKind::l010212, 13}}, "", false},
        {"H7", {3, 7}, "", 21504, 10752, 129, {{LinkKind::l010212, 6}}, "", false},
        {"H8", {3, 7}, "", 24360, 12180, 146, {{LinkKind::l010212, 15}}, "", false},
        {"H9", {3, 7}, "", 24360, 12180, 146, {{LinkKind::l010212, 15}}, "", false},
        {"H10", {3, 7}, "", 24360, 12180, 146, {{LinkKind::l010212, 14}}, "", false},
    };
    return rows;
}

std::string census_fixture_name(const std::string& id) {
    std::string name;
    bool seen_dot = false;
    for (char c : id) {
        if (c == '.') {
            if (seen_dot) {
                name += '_';
            }
            seen_dot = true;
            continue;
        }
        name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return name;
}

std::vector<SphericalCensusRow> spherical_census(int max_n) {
    std::vector<SphericalCensusRow> rows = {
        {"tetrahedron", {3, 3}, {{LinkKind::l010212, 1, 6}}},
        {"octahedron", {3, 4}, {{LinkKind::l01, 4, 3}, {LinkKind::l0212, 2, 6}}},
        {"cube", {4, 3}, {{LinkKind::l12, 4, 3}, {LinkKind::l0102, 2, 6}}},
        {"icosahedron", {3, 5}, {{LinkKind::l010212, 2, 15}}},
        {"dodecahedron", {5, 3}, {{LinkKind::l010212, 2, 15}}},
    };
    for (int n = 2; n <= max_n; ++n) {
        SphericalCensusRow hoso{"hosohedron", {2, n}, {}};
        SphericalCensusRow dihedron{"dihedron", {n, 2}, {}};
        if (n % 2 == 0) {
            hoso.patterns = {{LinkKind::l01, 2, n / 2},
                             {LinkKind::l02, 2, n / 2},
                             {LinkKind::l12, n, 1}};
            dihedron.patterns = {{LinkKind::l01, n, 1},
                                 {LinkKind::l02, 2, n / 2},
                                 {LinkKind::l12, 2, n / 2}};
        } else {
            hoso.patterns = {{LinkKind::l12, n, 1}, {LinkKind::l0102, 1, n}};
            dihedron.patterns = {{LinkKind::l01, n, 1}, {LinkKind::l0212, 1, n}};
        }
        rows.push_back(hoso);
        rows.push_back(dihedron);
    }
    // aggregate_pattern_counts sorts by link first; the parity branches
    // above list entries in that order already.
    return rows;
}

namespace {

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

// Rebuilds a census row from its in-repo construction and checks order,
// genus, and the distinct (link, index) set.
RowStatus check_builder_row(const CensusRow& row, const EnumOptions& options) {
    long long order = 0;
    std::optional<long long> genus;
    std::vector<PatternReport> reports;
    const std::size_t colon = row.builder.find(':');
    const std::string kind = row.builder.substr(0, colon);
    const long long param =
        colon == std::string::npos ? 0 : std::stoll(row.builder.substr(colon + 1));
    if (kind == "hurwitz") {
        const HurwitzQuotient quotient = hurwitz_quotient(param, options);
        order = quotient.group_order;
        genus = quotient.genus;
        reports = quotient.reports;
    } else {
        FamilyMap map;
        if (kind == "bolza") {
            map = bolza();
        } else if (kind == "am") {
            map = accola_maclachlan(param);
        } else if (kind == "wi") {
            map = wiman_type_one(param);
        } else if (kind == "wii") {
            map = wiman_type_two(param);
        } else if (kind == "fermat") {
            map = fermat_map(param);
        } else {
            throw std::logic_error("unknown builder '" + row.builder + "'");
        }
        const std::optional<long long> enumerated = group_order(map.presentation, options);
        if (!enumerated || *enumerated != map.rotation_order) {
            return RowStatus::mismatch;
        }
        order = map.rotation_order;
        genus = genus_from_order(map.type, order);
        reports = full_pattern_report(map.presentation, map.type, options);
        if (row.dual_of_builder) {
            reports = dualize(reports);
        }
    }
    if (order != row.rotation_order) {
        return RowStatus::mismatch;
    }
    if (row.genus && genus != row.genus) {
        return RowStatus::mismatch;
    }
    if (!same_links(distinct_links(reports), row.links)) {
        return RowStatus::mismatch;
    }
    return RowStatus::verified;
}

std::optional<std::vector<FixtureEntry>> load_manifest(const std::string& dir) {
    std::ifstream in(dir + "/manifest");
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_fixture_manifest(buffer.str());
}

// Checks a fixture-backed census row against both the manifest's claims
// and the frozen values. Budget exhaustion propagates; a fixture that
// loads but disagrees is a mismatch.
RowStatus check_fixture_row(const CensusRow& row,
                            const std::optional<std::vector<FixtureEntry>>& manifest,
                            const std::string& dir, const EnumOptions& options) {
    if (!manifest) {
        return RowStatus::fixture_missing;
    }
    const std::string name = census_fixture_name(row.id);
    const FixtureEntry* entry = nullptr;
    for (const FixtureEntry& candidate : *manifest) {
        if (candidate.name == name) {
            entry = &candidate;
        }
    }
    if (entry == nullptr) {
        return RowStatus::fixture_missing;
    }
    if (entry->type.m != row.type.m || entry->type.n != row.type.n ||
        entry->rotation_order != row.rotation_order) {
        return RowStatus::mismatch;
    }
    FixtureMap map;
    try {
        map = fixture_map(dir + "/" + name + ".pres", row.type, options);
    } catch (const BudgetExceededError&) {
        throw;
    } catch (const std::exception&) {
        return RowStatus::mismatch;
    }
    if (map.rotation_order != row.rotation_order) {
        return RowStatus::mismatch;
    }
    if (!same_links(distinct_links(map.reports), row.links)) {
        return RowStatus::mismatch;
    }
    std::vector<CensusPattern> declared;
    for (const FixtureExpectation& expectation : entry->links) {
        declared.push_back({expectation.link, expectation.index});
    }
    if (!declared.empty() && !same_links(declared, row.links)) {
        return RowStatus::mismatch;
    }
    return RowStatus::verified;
}

std::string pattern_cell(LinkKind link, long long index) {
    return pattern_string(link, index);
}

bool sphere_rows_match(const std::vector<SphericalCensusRow>& checks,
                       const EnumOptions& options) {
    for (const SphericalCensusRow& check : checks) {
        const FamilyMap map = spherical_map(check.type);
        const TracerComparison comparison =
            verify_against_patterns(map.presentation, map.type, options);
        if (!comparison.consistent || !comparison.harnack_ok) {
            return false;
        }
        if (aggregate_pattern_counts(comparison) != check.patterns) {
            return false;
        }
    }
    return true;
}

std::string render_sphere_table(const TableOptions& options) {
    std::ostringstream out;
    out << "maps on the sphere and their mirrors\n\n";
    TextTable table({"map", "type", "mirrors", "pattern", "status"});

    const std::vector<SphericalCensusRow> census = spherical_census(8);
    auto rows_named = [&](const std::string& name, int parity) {
        std::vector<SphericalCensusRow> rows;
        for (const SphericalCensusRow& row : census) {
            if (row.name == name &&
                (parity < 0 || std::max(row.type.m, row.type.n) % 2 == parity)) {
                rows.push_back(row);
            }
        }
        return rows;
    };

    for (const char* name :
         {"tetrahedron", "octahedron", "cube", "icosahedron", "dodecahedron"}) {
        const SphericalCensusRow solid = rows_named(name, -1).front();
        const RowStatus status = sphere_rows_match({solid}, options.enum_options)
                                     ? RowStatus::verified
                                     : RowStatus::mismatch;
        bool first = true;
        for (const PatternCount& entry : solid.patterns) {
            table.add_row({first ? solid.name : "", first ? type_string(solid.type) : "",
                           std::to_string(entry.count),
                           pattern_cell(entry.link, entry.link_index), to_string(status)});
            first = false;
        }
    }

    struct SymbolicRow {
        std::string name;
        std::string type;
        int parity;
        std::vector<std::pair<std::string, std::string>> patterns;  // mirrors, pattern
    };
    const std::vector<SymbolicRow> families = {
        {"hosohedron", "{2,n} n odd", 1, {{"1", "(12)^n"}, {"n", "0102"}}},
        {"hosohedron", "{2,n} n even", 0,
         {{"n/2", "(01)^2"}, {"n/2", "(02)^2"}, {"1", "(12)^n"}}},
        {"dihedron", "{n,2} n odd", 1, {{"1", "(01)^n"}, {"n", "0212"}}},
        {"dihedron", "{n,2} n even", 0,
         {{"1", "(01)^n"}, {"n/2", "(02)^2"}, {"n/2", "(12)^2"}}},
    };
    for (const SymbolicRow& family : families) {
        const RowStatus status =
            sphere_rows_match(rows_named(family.name, family.parity), options.enum_options)
                ? RowStatus::verified
                : RowStatus::mismatch;
        bool first = true;
        for (const auto& [mirrors, pattern] : family.patterns) {
            table.add_row({first ? family.name : "", first ? family.type : "", mirrors,
                           pattern, to_string(status)});
            first = false;
        }
    }
    out << table.str();
    out << "\nsymbolic rows checked for every n from 2 through 8\n";
    return out.str();
}

std::string render_universal_table() {
    std::ostringstream out;
    out << "mirrors of universal maps by type parity\n\n";
    TextTable table({"case", "classes", "pattern", "status"});
    struct ParityRow {
        std::string label;
        MapType representative;
        std::vector<std::pair<std::string, LinkKind>> lines;
    };
    const std::vector<ParityRow> cases = {
        {"m and n odd", {3, 5}, {{"P, Q, R", LinkKind::l010212}}},
        {"m odd, n even", {3, 4}, {{"P", LinkKind::l01}, {"Q, R", LinkKind::l0212}}},
        {"m and n even", {4, 4},
         {{"P", LinkKind::l01}, {"Q", LinkKind::l12}, {"R", LinkKind::l02}}},
        {"m even, n odd", {4, 3}, {{"P, R", LinkKind::l0102}, {"Q", LinkKind::l12}}},
    };
    for (const ParityRow& parity : cases) {
        const std::array<ReflectionLink, 3> classified = classify_type(parity.representative);
        bool matches = true;
        for (const auto& [classes, link] : parity.lines) {
            for (char reflection : classes) {
                if (reflection == ',' || reflection == ' ') {
                    continue;
                }
                for (const ReflectionLink& entry : classified) {
                    if (entry.reflection == reflection && entry.link != link) {
                        matches = false;
                    }
                }
            }
        }
        const RowStatus status = matches ? RowStatus::verified : RowStatus::mismatch;
        bool first = true;
        for (const auto& [classes, link] : parity.lines) {
            table.add_row({first ? parity.label : "", classes,
                           "(" + to_string(link) + ")^inf", to_string(status)});
            first = false;
        }
    }
    out << table.str();
    return out.str();
}

std::string render_census_table(const std::string& title, const std::vector<CensusRow>& rows,
                                const TableOptions& options) {
    const std::optional<std::vector<FixtureEntry>> manifest =
        load_manifest(options.fixture_dir);
    std::ostringstream out;
    out << title << "\n\n";
    TextTable table({"map", "type", "surface", "|Aut+-M|", "link", "index", "status"});
    for (const CensusRow& row : rows) {
        const RowStatus status =
            row.builder.empty()
                ? check_fixture_row(row, manifest, options.fixture_dir, options.enum_options)
                : check_builder_row(row, options.enum_options);
        bool first = true;
        for (const CensusPattern& link : row.links) {
            table.add_row({first ? row.id : "", first ? type_string(row.type) : "",
                           first ? row.surface : "",
                           first ? std::to_string(row.extended_order) : "",
                           to_string(link.link), std::to_string(link.index),
                           to_string(status)});
            first = false;
        }
    }
    out << table.str();
    return out.str();
}

std::string render_hurwitz_table(const TableOptions& options) {
    const std::optional<std::vector<FixtureEntry>> manifest =
        load_manifest(options.fixture_dir);
    std::ostringstream out;
    out << "link indices of Hurwitz maps\n\n";
    TextTable table({"map", "genus", "|AutM|", "link index", "length", "status"});
    for (const CensusRow& row : hurwitz_census()) {
        const RowStatus status =
            row.builder.empty()
                ? check_fixture_row(row, manifest, options.fixture_dir, options.enum_options)
                : check_builder_row(row, options.enum_options);
        const long long index = row.links.front().index;
        table.add_row({row.id, std::to_string(*row.genus),
                       std::to_string(row.rotation_order), std::to_string(index),
                       format_length(mirror_length(LinkKind::l010212, index, {3, 7})),
                       to_string(status)});
    }
    out << table.str();
    return out.str();
}

std::string render_torus_table(TorusFamily family, const TableOptions& options) {
    std::ostringstream out;
    const bool square = family == TorusFamily::sq44;
    if (square) {
        out << "square torus maps, b = " << options.b << "\n\n";
    } else {
        out << "triangular and hexagonal torus maps, b = " << options.b << "\n\n";
    }
    TextTable table({"map", "class", "link", "pattern", "status"});
    std::vector<ToroidalMapId> ids;
    if (square) {
        ids = {{TorusFamily::sq44, TorusVariant::b0, options.b},
               {TorusFamily::sq44, TorusVariant::bb, options.b}};
    } else {
        ids = {{TorusFamily::tri36, TorusVariant::b0, options.b},
               {TorusFamily::tri36, TorusVariant::bb, options.b},
               {TorusFamily::hex63, TorusVariant::b0, options.b},
               {TorusFamily::hex63, TorusVariant::bb, options.b}};
    }
    for (const ToroidalMapId& id : ids) {
        const MapType type = toroidal_type(id);
        const bool doubled = id.variant == TorusVariant::bb;
        const std::string label = type_string(type) + "_{" + std::to_string(id.b) + "," +
                                  (doubled ? std::to_string(id.b) : "0") + "}";
        const std::vector<PatternReport> rows = toroidal_patterns(id);
        bool first = true;
        for (const PatternReport& row : rows) {
            long long expected = id.b;
            if (doubled) {
                // On the diagonal square torus the axis links 01 and 12
                // double while the diagonal link 02 keeps index b; on
                // the diagonal triangular and hexagonal tori the short
                // link triples and the four-letter links keep index b.
                if (square) {
                    expected = row.link == LinkKind::l02 ? id.b : 2 * id.b;
                } else {
                    expected =
                        row.link == LinkKind::l01 || row.link == LinkKind::l12 ? 3 * id.b
                                                                               : id.b;
                }
            }
            const RowStatus status = row.link_index && *row.link_index == expected
                                         ? RowStatus::verified
                                         : RowStatus::mismatch;
            table.add_row({first ? label : "", std::string(1, row.reflection),
                           to_string(row.link), row.pattern, to_string(status)});
            first = false;
        }
    }
    out << table.str();
    return out.str();
}

}  // namespace

RowStatus check_census_row(const CensusRow& row, const TableOptions& options) {
    if (!row.builder.empty()) {
        return check_builder_row(row, options.enum_options);
    }
    const std::optional<std::vector<FixtureEntry>> manifest =
        load_manifest(options.fixture_dir);
    return check_fixture_row(row, manifest, options.fixture_dir, options.enum_options);
}

std::string render_named_table(const std::string& id, const TableOptions& options) {
    if (options.b < 1) {
        throw std::invalid_argument("torus side must be at least 1");
    }
    if (id == "1") {
        return render_sphere_table(options);
    }
    if (id == "2") {
        return render_universal_table();
    }
    if (id == "4") {
        return render_census_table("reflexible maps of genus 2", genus2_census(), options);
    }
    if (id == "5") {
        return render_census_table("reflexible maps of genus 3", genus3_census(), options);
    }
    if (id == "7") {
        return render_hurwitz_table(options);
    }
    if (id == "t41") {
        return render_torus_table(TorusFamily::sq44, options);
    }
    if (id == "t42") {
        return render_torus_table(TorusFamily::tri36, options);
    }
    throw std::invalid_argument("unknown table '" + id +
                                "'; expected 1, 2, 4, 5, 7, t41, or t42");
}

}  // namespace regmap
