#include "regmap/flag_tracer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "regmap/surface_families.hpp"

namespace regmap {

Word FlagComplex::flag_word(long long flag) const {
    if (flag < 0 || flag >= flag_count()) {
        throw std::invalid_argument("flag id out of range");
    }
    Word reversed;
    for (long long at = flag; parent[at] >= 0; at = parent[at]) {
        reversed.push_back(parent_letter[at]);
    }
    return Word(reversed.rbegin(), reversed.rend());
}

Presentation extend_rotation_presentation(const Presentation& rotation, const MapType& t) {
    validate_map_type(t);
    return extended_triangle(t.m, t.n, rotation.relators);
}

namespace {

// Union-find over flag ids with smallest-id representatives at the end.
class OrbitFinder {
public:
    explicit OrbitFinder(std::size_t size) : parent_(size) {
        for (std::size_t i = 0; i < size; ++i) {
            parent_[i] = static_cast<int>(i);
        }
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return;
        }
        if (a > b) {
            std::swap(a, b);
        }
        parent_[b] = a;
    }

private:
    std::vector<int> parent_;
};

// Corner labels are joined by the two reflections fixing the sides that
// meet there: the vertex corner 0 by R and P, the edge corner 1 by P and
// Q, the face corner 2 by Q and R.
constexpr std::array<std::array<int, 2>, 3> kCornerStabilizers = {{
    {kGenR, kGenP},
    {kGenP, kGenQ},
    {kGenQ, kGenR},
}};

}  // namespace

FlagComplex build_flag_complex(const Presentation& extended, const MapType& t,
                               const EnumOptions& options) {
    validate_map_type(t);
    const EnumResult result = enumerate_cosets(extended, {}, options);
    if (result.status != EnumStatus::complete) {
        throw BudgetExceededError("flag enumeration exceeded the coset budget (" +
                                  std::to_string(options.budget) + ")");
    }

    FlagComplex complex;
    complex.type = t;
    complex.table = result.table;
    const long long flags = static_cast<long long>(complex.table.size());

    // The generators must act as three distinct reflections; a collapse
    // means the presented group is not the extended group of a map.
    const int p_image = complex.table.act(0, kGenP);
    const int q_image = complex.table.act(0, kGenQ);
    const int r_image = complex.table.act(0, kGenR);
    if (p_image == 0 || q_image == 0 || r_image == 0 || p_image == q_image ||
        q_image == r_image || p_image == r_image) {
        throw std::runtime_error("the three side reflections are not distinct involutions");
    }

    complex.parent.assign(flags, -1);
    complex.parent_letter.assign(flags, 0);
    std::vector<bool> reached(flags, false);
    reached[0] = true;
    std::vector<int> frontier{0};
    std::size_t head = 0;
    while (head < frontier.size()) {
        const int flag = frontier[head++];
        for (int letter : {kGenP, kGenQ, kGenR}) {
            const int image = complex.table.act(flag, letter);
            if (!reached[image]) {
                reached[image] = true;
                complex.parent[image] = flag;
                complex.parent_letter[image] = letter;
                frontier.push_back(image);
            }
        }
    }
    if (frontier.size() != static_cast<std::size_t>(flags)) {
        throw std::runtime_error("flag adjacency is not connected");
    }

    const std::array<long long, 3> orbit_sizes = {2LL * t.n, 4LL, 2LL * t.m};
    for (int corner = 0; corner < 3; ++corner) {
        OrbitFinder finder(static_cast<std::size_t>(flags));
        for (int flag = 0; flag < flags; ++flag) {
            for (int letter : kCornerStabilizers[corner]) {
                finder.unite(flag, complex.table.act(flag, letter));
            }
        }
        std::vector<int>& orbit_of = complex.corner_orbit[corner];
        orbit_of.assign(flags, -1);
        std::vector<long long> orbit_size;
        for (int flag = 0; flag < flags; ++flag) {
            const int root = finder.find(flag);
            if (orbit_of[root] < 0) {
                orbit_of[root] = static_cast<int>(orbit_size.size());
                orbit_size.push_back(0);
            }
            orbit_of[flag] = orbit_of[root];
            ++orbit_size[orbit_of[flag]];
        }
        complex.corner_counts[corner] = static_cast<long long>(orbit_size.size());
        for (std::size_t orbit = 0; orbit < orbit_size.size(); ++orbit) {
            if (orbit_size[orbit] != orbit_sizes[corner]) {
                throw std::runtime_error(
                    "corner " + std::to_string(corner) + " orbit " + std::to_string(orbit) +
                    " has " + std::to_string(orbit_size[orbit]) + " flags, expected " +
                    std::to_string(orbit_sizes[corner]) +
                    "; the group does not realize type {" + std::to_string(t.m) + "," +
                    std::to_string(t.n) + "}");
            }
        }
    }

    if (flags % 2 != 0) {
        throw std::runtime_error("flag count is odd, so there is no rotation subgroup");
    }
    complex.rotation_order = flags / 2;
    complex.genus = genus_from_order(t, complex.rotation_order);
    return complex;
}

namespace {

using NodeKey = std::pair<int, int>;  // corner label, orbit id

struct Segment {
    std::array<long long, 2> flags;
    std::array<NodeKey, 2> nodes;
};

std::array<NodeKey, 2> side_nodes(const FlagComplex& complex, long long flag, int side_letter) {
    const int f = static_cast<int>(flag);
    const int vertex = complex.corner_orbit[0][f];
    const int edge = complex.corner_orbit[1][f];
    const int face = complex.corner_orbit[2][f];
    switch (side_letter) {
        case kGenP: return {NodeKey{0, vertex}, NodeKey{1, edge}};
        case kGenQ: return {NodeKey{1, edge}, NodeKey{2, face}};
        case kGenR: return {NodeKey{0, vertex}, NodeKey{2, face}};
        default: throw std::logic_error("side letter is not a reflection");
    }
}

std::pair<LinkKind, long long> identify_cycle(const std::string& labels) {
    static const std::array<LinkKind, 6> by_length = {
        LinkKind::l01,   LinkKind::l02,   LinkKind::l12,
        LinkKind::l0102, LinkKind::l0212, LinkKind::l010212,
    };
    const std::string canon = canonical_cycle(labels);
    for (LinkKind k : by_length) {
        const std::string link = to_string(k);
        if (labels.size() % link.size() != 0) {
            continue;
        }
        const std::size_t reps = labels.size() / link.size();
        std::string repeated;
        repeated.reserve(labels.size());
        for (std::size_t i = 0; i < reps; ++i) {
            repeated += link;
        }
        if (canonical_cycle(repeated) == canon) {
            return {k, static_cast<long long>(reps)};
        }
    }
    throw std::runtime_error("traced cycle '" + labels +
                             "' is not a repetition of any canonical link");
}

}  // namespace

MirrorTrace trace_mirror(const FlagComplex& complex, const Word& reflection) {
    const Word reduced = free_reduce(reflection);
    if (reduced.empty()) {
        throw std::invalid_argument("the identity fixes no mirror");
    }
    if (reduced.size() % 2 == 0) {
        throw std::invalid_argument("the word preserves orientation, so it fixes no mirror");
    }
    const long long flags = complex.flag_count();
    const int image = complex.table.act_word(0, reduced);
    if (image == 0 || complex.table.act_word(image, reduced) != 0) {
        throw std::invalid_argument("the word is not an involution");
    }

    // Left translation by the reflection, pushed down the spanning tree:
    // t * (g_parent * s) = (t * g_parent) * s.
    std::vector<int> left(flags);
    left[0] = image;
    std::vector<bool> done(flags, false);
    done[0] = true;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int flag = stack.back();
        stack.pop_back();
        for (int letter : {kGenP, kGenQ, kGenR}) {
            const int child = complex.table.act(flag, letter);
            if (!done[child] && complex.parent[child] == flag &&
                complex.parent_letter[child] == letter) {
                left[child] = complex.table.act(left[flag], letter);
                done[child] = true;
                stack.push_back(child);
            }
        }
    }

    MirrorTrace trace;
    trace.reflection = reduced;

    // Flag f lies on the mirror with its side s fixed exactly when
    // t * g_f = g_f * s.
    std::vector<int> side_of(flags, 0);
    std::vector<Segment> segments;
    std::map<NodeKey, std::vector<std::size_t>> at_node;
    for (long long flag = 0; flag < flags; ++flag) {
        for (int letter : {kGenP, kGenQ, kGenR}) {
            if (left[flag] == complex.table.act(static_cast<int>(flag), letter)) {
                if (side_of[flag] != 0) {
                    throw std::runtime_error("flag " + std::to_string(flag) +
                                             " has two sides on one mirror");
                }
                side_of[flag] = letter;
                ++trace.on_mirror_flags;
            }
        }
    }
    for (long long flag = 0; flag < flags; ++flag) {
        const int letter = side_of[flag];
        if (letter == 0) {
            continue;
        }
        const long long partner = complex.table.act(static_cast<int>(flag), letter);
        if (partner == flag) {
            throw std::runtime_error("flag " + std::to_string(flag) +
                                     " is its own partner across a fixed side");
        }
        if (side_of[partner] != letter) {
            throw std::runtime_error("flags " + std::to_string(flag) + " and " +
                                     std::to_string(partner) +
                                     " disagree about their shared fixed side");
        }
        if (partner < flag) {
            continue;
        }
        Segment segment;
        segment.flags = {flag, partner};
        segment.nodes = side_nodes(complex, flag, letter);
        at_node[segment.nodes[0]].push_back(segments.size());
        at_node[segment.nodes[1]].push_back(segments.size());
        segments.push_back(segment);
    }

    for (const auto& [node, incident] : at_node) {
        if (incident.size() != 2) {
            throw std::runtime_error("corner (" + std::to_string(node.first) + ", orbit " +
                                     std::to_string(node.second) + ") touches " +
                                     std::to_string(incident.size()) +
                                     " mirror segments, expected exactly 2");
        }
    }

    std::vector<bool> visited(segments.size(), false);
    for (std::size_t start = 0; start < segments.size(); ++start) {
        if (visited[start]) {
            continue;
        }
        CycleTrace cycle;
        std::size_t segment = start;
        NodeKey node = std::min(segments[start].nodes[0], segments[start].nodes[1]);
        const NodeKey first_node = node;
        do {
            visited[segment] = true;
            cycle.labels.push_back(static_cast<char>('0' + node.first));
            cycle.segments.push_back(segments[segment].flags);
            node = segments[segment].nodes[0] == node ? segments[segment].nodes[1]
                                                      : segments[segment].nodes[0];
            const std::vector<std::size_t>& incident = at_node[node];
            segment = incident[0] == segment ? incident[1] : incident[0];
        } while (!(segment == start && node == first_node));
        const auto [link, index] = identify_cycle(cycle.labels);
        cycle.link = link;
        cycle.link_index = index;
        trace.cycles.push_back(std::move(cycle));
    }

    if (trace.on_mirror_flags != 2 * static_cast<long long>(segments.size())) {
        throw std::runtime_error("on-mirror flag count does not double the segment count");
    }
    return trace;
}

std::string dump_trace(const MirrorTrace& trace) {
    std::ostringstream out;
    out << "reflection " << format_word(trace.reflection, {"P", "Q", "R"}) << ": "
        << trace.cycles.size() << " cycle(s), " << trace.on_mirror_flags
        << " on-mirror flags\n";
    for (std::size_t i = 0; i < trace.cycles.size(); ++i) {
        const CycleTrace& cycle = trace.cycles[i];
        out << "  cycle " << i + 1 << " " << pattern_string(cycle.link, cycle.link_index)
            << " labels " << cycle.labels << " flags";
        for (const auto& segment : cycle.segments) {
            out << " {" << segment[0] << "," << segment[1] << "}";
        }
        out << "\n";
    }
    return out.str();
}

namespace {

std::set<long long> conjugacy_class(const FlagComplex& complex, int letter) {
    std::set<long long> seen{static_cast<long long>(complex.table.act(0, letter))};
    std::vector<long long> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        const long long element = frontier.back();
        frontier.pop_back();
        const Word word = complex.flag_word(element);
        for (int s : {kGenP, kGenQ, kGenR}) {
            int conjugate = complex.table.act(0, -s);
            conjugate = complex.table.act_word(conjugate, word);
            conjugate = complex.table.act(conjugate, s);
            if (seen.insert(conjugate).second) {
                frontier.push_back(conjugate);
            }
        }
    }
    return seen;
}

}  // namespace

std::vector<PatternCount> aggregate_pattern_counts(const TracerComparison& comparison) {
    std::set<long long> signatures;
    std::map<std::pair<LinkKind, long long>, long long> totals;
    for (const ReflectionClassSummary& summary : comparison.traced) {
        if (!signatures.insert(summary.class_signature).second) {
            continue;
        }
        for (const PatternCount& entry : summary.pattern_counts) {
            totals[{entry.link, entry.link_index}] += entry.count;
        }
    }
    std::vector<PatternCount> aggregated;
    for (const auto& [key, count] : totals) {
        aggregated.push_back({key.first, key.second, count});
    }
    return aggregated;
}

TracerComparison verify_against_patterns(const Presentation& rotation, const MapType& t,
                                         const EnumOptions& options) {
    TracerComparison comparison;
    comparison.type = t;
    comparison.pattern_rows = full_pattern_report(rotation, t, options);

    const FlagComplex complex =
        build_flag_complex(extend_rotation_presentation(rotation, t), t, options);
    comparison.rotation_order = complex.rotation_order;
    comparison.genus = complex.genus;
    comparison.corner_counts = complex.corner_counts;

    const EnumResult rotation_result = enumerate_cosets(rotation, {}, options);
    std::ostringstream detail;
    comparison.consistent = true;
    comparison.harnack_ok = true;
    if (rotation_result.status != EnumStatus::complete ||
        static_cast<long long>(rotation_result.table.size()) != complex.rotation_order) {
        comparison.consistent = false;
        detail << "extended group has " << 2 * complex.rotation_order
               << " elements, which is not twice the rotation group\n";
    }

    const std::array<int, 3> letters = {kGenP, kGenQ, kGenR};
    const std::array<char, 3> names = {'P', 'Q', 'R'};
    for (int i = 0; i < 3; ++i) {
        const std::set<long long> elements = conjugacy_class(complex, letters[i]);
        ReflectionClassSummary summary;
        summary.reflection = names[i];
        summary.class_size = static_cast<long long>(elements.size());
        summary.class_signature = *elements.begin();

        std::map<std::pair<LinkKind, long long>, long long> census;
        bool base_found = false;
        const long long base_partner = complex.table.act(0, letters[i]);
        for (const long long element : elements) {
            const MirrorTrace trace = trace_mirror(complex, complex.flag_word(element));
            if (static_cast<long long>(trace.cycles.size()) > complex.genus + 1) {
                comparison.harnack_ok = false;
                detail << "reflection class " << names[i] << ": element " << element
                       << " fixes " << trace.cycles.size() << " curves, above the bound "
                       << complex.genus + 1 << "\n";
            }
            summary.mirror_count += static_cast<long long>(trace.cycles.size());
            for (const CycleTrace& cycle : trace.cycles) {
                ++census[{cycle.link, cycle.link_index}];
                if (element != base_partner) {
                    continue;
                }
                for (const auto& segment : cycle.segments) {
                    if (segment[0] == 0 && segment[1] == base_partner) {
                        summary.link = cycle.link;
                        summary.link_index = cycle.link_index;
                        base_found = true;
                    }
                }
            }
        }
        if (!base_found) {
            throw std::runtime_error(
                std::string("the base flag's side fixed by ") + names[i] +
                " lies on none of its traced curves");
        }
        for (const auto& [key, count] : census) {
            summary.pattern_counts.push_back({key.first, key.second, count});
        }

        const PatternReport& row = comparison.pattern_rows[static_cast<std::size_t>(i)];
        if (row.link != summary.link || !row.link_index.has_value() ||
            *row.link_index != summary.link_index) {
            comparison.consistent = false;
            detail << "reflection class " << names[i] << ": traced "
                   << pattern_string(summary.link, std::max<long long>(summary.link_index, 1))
                   << " through the base side but the mirror-automorphism order predicts "
                   << (row.link_index ? pattern_string(row.link, *row.link_index)
                                      : to_string(row.link))
                   << "\n";
        }
        comparison.traced.push_back(summary);
    }
    comparison.detail = detail.str();
    return comparison;
}

}  // namespace regmap
