#include "regmap/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace regmap {

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int letter : w) {
        if (!out.empty() && out.back() == -letter) {
            out.pop_back();
        } else {
            out.push_back(letter);
        }
    }
    return out;
}

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        out.push_back(-*it);
    }
    return out;
}

Word word_power(const Word& w, long long k) {
    const Word base = k < 0 ? inverse_word(w) : w;
    const unsigned long long reps = k < 0 ? static_cast<unsigned long long>(-k)
                                          : static_cast<unsigned long long>(k);
    Word out;
    out.reserve(base.size() * reps);
    for (unsigned long long i = 0; i < reps; ++i) {
        out.insert(out.end(), base.begin(), base.end());
    }
    return out;
}

Word commutator(const Word& u, const Word& v) {
    Word out = inverse_word(u);
    const Word vi = inverse_word(v);
    out.insert(out.end(), vi.begin(), vi.end());
    out.insert(out.end(), u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

namespace {

// Recursive-descent parser over a single token. Positions are 0-based
// internally and reported 1-based.
class WordParser {
public:
    WordParser(const std::string& text, const std::vector<std::string>& names)
        : text_(text), names_(names) {}

    Word parse() {
        Word w = parse_sequence();
        if (pos_ != text_.size()) {
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        }
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, 1, static_cast<int>(pos_) + 1);
    }

    bool at_end() const { return pos_ >= text_.size(); }

    // sequence := factor+   (stops at ')' or end)
    Word parse_sequence() {
        Word out;
        if (at_end() || text_[pos_] == ')') {
            fail("expected a generator or '('");
        }
        while (!at_end() && text_[pos_] != ')') {
            Word factor = parse_factor();
            out.insert(out.end(), factor.begin(), factor.end());
        }
        return out;
    }

    // factor := atom postfix*
    Word parse_factor() {
        Word atom = parse_atom();
        while (!at_end()) {
            if (text_[pos_] == '\'') {
                ++pos_;
                atom = inverse_word(atom);
            } else if (text_[pos_] == '^') {
                ++pos_;
                atom = word_power(atom, parse_exponent());
            } else {
                break;
            }
        }
        return atom;
    }

    Word parse_atom() {
        if (text_[pos_] == '(') {
            const std::size_t open = pos_;
            ++pos_;
            Word inner = parse_sequence();
            if (at_end() || text_[pos_] != ')') {
                pos_ = open;
                fail("unbalanced '('");
            }
            ++pos_;
            return inner;
        }
        // Longest generator name match at the current position.
        int best = -1;
        std::size_t best_len = 0;
        for (std::size_t g = 0; g < names_.size(); ++g) {
            const std::string& name = names_[g];
            if (name.size() > best_len && text_.compare(pos_, name.size(), name) == 0) {
                best = static_cast<int>(g);
                best_len = name.size();
            }
        }
        if (best < 0) {
            fail("unknown generator symbol at '" + text_.substr(pos_, 8) + "'");
        }
        pos_ += best_len;
        return Word{best + 1};
    }

    long long parse_exponent() {
        const std::size_t start = pos_;
        bool negative = false;
        if (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected an integer exponent after '^'");
        }
        long long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000'000LL) {
                pos_ = start;
                fail("exponent too large");
            }
            ++pos_;
        }
        return negative ? -value : value;
    }

    const std::string& text_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& token, const std::vector<std::string>& generator_names) {
    return WordParser(token, generator_names).parse();
}

std::string format_word(const Word& w, const std::vector<std::string>& generator_names) {
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        const int letter = w[i];
        const std::size_t gen = static_cast<std::size_t>(std::abs(letter)) - 1;
        if (gen >= generator_names.size()) {
            throw std::invalid_argument("word letter outside the generator alphabet");
        }
        std::size_t run = i;
        while (run < w.size() && w[run] == letter) {
            ++run;
        }
        const std::size_t count = run - i;
        out += generator_names[gen];
        if (letter < 0) {
            out += "^-" + std::to_string(count);
        } else if (count > 1) {
            out += "^" + std::to_string(count);
        }
        i = run;
    }
    return out;
}

}  // namespace regmap
