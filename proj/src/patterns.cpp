#include "regmap/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace regmap {

void validate_map_type(const MapType& t) {
    if (t.m < 2 || t.n < 2) {
        throw std::invalid_argument("map type requires m >= 2 and n >= 2");
    }
}

std::string to_string(LinkKind k) {
    switch (k) {
        case LinkKind::l01: return "01";
        case LinkKind::l02: return "02";
        case LinkKind::l12: return "12";
        case LinkKind::l0102: return "0102";
        case LinkKind::l0212: return "0212";
        case LinkKind::l010212: return "010212";
    }
    throw std::logic_error("unhandled link kind");
}

std::optional<LinkKind> link_from_string(const std::string& s) {
    static const std::array<LinkKind, 6> kinds = {
        LinkKind::l01, LinkKind::l02, LinkKind::l12,
        LinkKind::l0102, LinkKind::l0212, LinkKind::l010212,
    };
    for (LinkKind k : kinds) {
        if (to_string(k) == s) {
            return k;
        }
    }
    return std::nullopt;
}

std::string canonical_cycle(const std::string& cycle) {
    if (cycle.empty()) {
        return cycle;
    }
    std::string best;
    auto consider = [&best](const std::string& s) {
        for (std::size_t shift = 0; shift < s.size(); ++shift) {
            std::string rotated = s.substr(shift) + s.substr(0, shift);
            if (best.empty() || rotated < best) {
                best = std::move(rotated);
            }
        }
    };
    consider(cycle);
    consider(std::string(cycle.rbegin(), cycle.rend()));
    return best;
}

LinkKind dual_link(LinkKind k) {
    std::string s = to_string(k);
    for (char& c : s) {
        if (c == '0') {
            c = '2';
        } else if (c == '2') {
            c = '0';
        }
    }
    const auto dual = link_from_string(canonical_cycle(s));
    if (!dual) {
        throw std::logic_error("dual of a link is not a link");
    }
    return *dual;
}

std::array<ReflectionLink, 3> classify_type(const MapType& t) {
    validate_map_type(t);
    const bool m_even = t.m % 2 == 0;
    const bool n_even = t.n % 2 == 0;
    if (!m_even && !n_even) {
        return {{{'P', LinkKind::l010212}, {'Q', LinkKind::l010212}, {'R', LinkKind::l010212}}};
    }
    if (!m_even && n_even) {
        return {{{'P', LinkKind::l01}, {'Q', LinkKind::l0212}, {'R', LinkKind::l0212}}};
    }
    if (m_even && n_even) {
        return {{{'P', LinkKind::l01}, {'Q', LinkKind::l12}, {'R', LinkKind::l02}}};
    }
    return {{{'P', LinkKind::l0102}, {'Q', LinkKind::l12}, {'R', LinkKind::l0102}}};
}

bool link_admissible(LinkKind k, const MapType& t) {
    validate_map_type(t);
    const bool m_even = t.m % 2 == 0;
    const bool n_even = t.n % 2 == 0;
    switch (k) {
        case LinkKind::l01: return n_even;
        case LinkKind::l02: return m_even && n_even;
        case LinkKind::l12: return m_even;
        case LinkKind::l0102: return m_even && !n_even;
        case LinkKind::l0212: return !m_even && n_even;
        case LinkKind::l010212: return !m_even && !n_even;
    }
    throw std::logic_error("unhandled link kind");
}

namespace {

Word powers(std::initializer_list<std::pair<int, int>> factors) {
    Word w;
    for (const auto& [gen, exp] : factors) {
        const Word part = word_power(Word{gen}, exp);
        w.insert(w.end(), part.begin(), part.end());
    }
    return w;
}

[[noreturn]] void inadmissible(LinkKind k, const MapType& t) {
    throw std::invalid_argument("link " + to_string(k) + " cannot occur on maps of type {" +
                                std::to_string(t.m) + "," + std::to_string(t.n) + "}");
}

}  // namespace

Word mirror_automorphism_word(LinkKind k, const MapType& t) {
    if (!link_admissible(k, t)) {
        inadmissible(k, t);
    }
    const int m = t.m;
    const int n = t.n;
    switch (k) {
        case LinkKind::l01:
            return powers({{kGenC, n / 2}, {kGenA, 1}});
        case LinkKind::l02:
            return powers({{kGenB, m / 2}, {kGenC, n / 2}});
        case LinkKind::l12:
            return powers({{kGenB, m / 2}, {kGenA, 1}});
        case LinkKind::l0102:
            return powers({{kGenC, (n + 1) / 2},
                           {kGenB, 1},
                           {kGenC, (n + 1) / 2},
                           {kGenB, m / 2}});
        case LinkKind::l0212:
            return powers({{kGenC, n / 2},
                           {kGenB, (m + 1) / 2},
                           {kGenC, 1},
                           {kGenB, (m + 1) / 2}});
        case LinkKind::l010212:
            return powers({{kGenB, (m + 1) / 2},
                           {kGenC, 1},
                           {kGenB, (m + 1) / 2},
                           {kGenC, (n + 1) / 2},
                           {kGenB, 1},
                           {kGenC, (n + 1) / 2}});
    }
    throw std::logic_error("unhandled link kind");
}

long long link_index(const CosetTable& table, LinkKind k, const MapType& t) {
    return element_order(table, mirror_automorphism_word(k, t));
}

std::string pattern_string(LinkKind k, long long index) {
    if (index < 1) {
        throw std::invalid_argument("link index must be positive");
    }
    if (index == 1) {
        return to_string(k);
    }
    return "(" + to_string(k) + ")^" + std::to_string(index);
}

std::string expand_pattern(const std::string& pattern) {
    std::string link;
    long long reps = 1;
    if (!pattern.empty() && pattern.front() == '(') {
        const std::size_t close = pattern.find(')');
        if (close == std::string::npos || pattern.size() < close + 3 ||
            pattern[close + 1] != '^') {
            throw std::invalid_argument("malformed pattern notation '" + pattern + "'");
        }
        link = pattern.substr(1, close - 1);
        reps = std::stoll(pattern.substr(close + 2));
        if (reps < 1) {
            throw std::invalid_argument("pattern repetition must be positive");
        }
    } else {
        link = pattern;
    }
    if (link.empty() || link.find_first_not_of("012") != std::string::npos) {
        throw std::invalid_argument("malformed pattern notation '" + pattern + "'");
    }
    std::string out;
    out.reserve(link.size() * static_cast<std::size_t>(reps));
    for (long long i = 0; i < reps; ++i) {
        out += link;
    }
    return out;
}

std::vector<PatternReport> full_pattern_report(const Presentation& p,
                                               const MapType& t,
                                               const EnumOptions& options) {
    validate_map_type(t);
    const EnumResult result = enumerate_cosets(p, {}, options);
    if (result.status != EnumStatus::complete) {
        throw BudgetExceededError("group enumeration exceeded the coset budget (" +
                                  std::to_string(options.budget) + ")");
    }
    std::vector<PatternReport> rows;
    for (const ReflectionLink& rl : classify_type(t)) {
        PatternReport row;
        row.reflection = rl.reflection;
        row.link = rl.link;
        row.link_index = link_index(result.table, rl.link, t);
        row.pattern = pattern_string(rl.link, *row.link_index);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<PatternReport> universal_pattern_report(const MapType& t) {
    std::vector<PatternReport> rows;
    for (const ReflectionLink& rl : classify_type(t)) {
        PatternReport row;
        row.reflection = rl.reflection;
        row.link = rl.link;
        row.pattern = to_string(rl.link);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<PatternReport> dualize(const std::vector<PatternReport>& rows) {
    std::vector<PatternReport> out = rows;
    for (PatternReport& row : out) {
        if (row.reflection == 'P') {
            row.reflection = 'Q';
        } else if (row.reflection == 'Q') {
            row.reflection = 'P';
        }
        row.link = dual_link(row.link);
        row.pattern = row.link_index ? pattern_string(row.link, *row.link_index)
                                     : to_string(row.link);
    }
    std::sort(out.begin(), out.end(), [](const PatternReport& a, const PatternReport& b) {
        return a.reflection < b.reflection;
    });
    return out;
}

}  // namespace regmap
