#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace regmap {

// A word over a generator alphabet. Letter k > 0 is generator number k
// (1-based index into the owning alphabet), letter -k is its inverse.
// The empty word is the identity.
using Word = std::vector<int>;

// Parse or validation failure with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column)
        : std::runtime_error(std::move(message)), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

// Cancel adjacent inverse pairs until none remain. The result is the unique
// freely reduced representative; reducing twice changes nothing.
Word free_reduce(const Word& w);

// Reverse the word and invert each letter.
Word inverse_word(const Word& w);

// w repeated k times; negative k repeats the inverse, k = 0 is the identity.
Word word_power(const Word& w, long long k);

// Commutator u^-1 v^-1 u v.
Word commutator(const Word& u, const Word& v);

// Parse a single whitespace-free word token. Generator names are matched
// longest-first. Supported syntax: juxtaposition, parenthesized subwords,
// postfix ' for inverse, postfix ^k for integer powers (k may be negative).
// Column positions in errors are 1-based offsets into `token`.
Word parse_word(const std::string& token, const std::vector<std::string>& generator_names);

// Render a word as a token parse_word accepts, folding runs of one letter
// into powers (AAB^-1 -> "A^2B^-1"). format then parse returns the original
// letter sequence exactly.
std::string format_word(const Word& w, const std::vector<std::string>& generator_names);

}  // namespace regmap
