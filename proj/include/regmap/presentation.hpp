#pragma once

#include <string>
#include <vector>

#include "regmap/word.hpp"

namespace regmap {

// Letter numbers shared by the rotation alphabet {A,B,C} and the
// reflection alphabet {P,Q,R}; a word's meaning depends on which
// presentation owns it.
inline constexpr int kGenA = 1;
inline constexpr int kGenB = 2;
inline constexpr int kGenC = 3;
inline constexpr int kGenP = 1;
inline constexpr int kGenQ = 2;
inline constexpr int kGenR = 3;

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
};

// Parse the presentation file grammar:
//   gens <names...>; rels <word> <word> ...;
// Statements end with ';' (the final one may omit it). '#' starts a comment
// running to end of line. Words are whitespace-free tokens in parse_word
// syntax. An explicit `free;` statement declares an empty relator list;
// otherwise at least one relator is required. Relators are stored freely
// reduced and must not reduce to the empty word.
Presentation parse_presentation(const std::string& text);

// Emit the same grammar; parse_presentation(serialize_presentation(p))
// reproduces p exactly.
std::string serialize_presentation(const Presentation& p);

// Rotation group of the type {m,n} map:
//   <A,B,C | A^2, B^m, C^n, ABC, extras...>
Presentation rotation_triangle(int m, int n, std::vector<Word> extra_relators = {});

// Full (reflection) group of the type {m,n} map:
//   <P,Q,R | P^2, Q^2, R^2, (PQ)^2, (QR)^m, (RP)^n, translated extras...>
// Extra relators are given as rotation words and rewritten via A = PQ,
// B = QR, C = RP.
Presentation extended_triangle(int m, int n, const std::vector<Word>& extra_rotation_relators = {});

// Rewrite a rotation word over {A,B,C} as a reflection word over {P,Q,R}
// using A = PQ, B = QR, C = RP. The result is freely reduced.
Word rotation_to_extended(const Word& w);

}  // namespace regmap
