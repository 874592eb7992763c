#include "regmap/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace regmap {

namespace {

struct Token {
    std::string text;  // ";" or a word/name token
    int line;          // 1-based
    int column;        // 1-based
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    int line = 1;
    int column = 1;
    std::string current;
    int tok_line = 0;
    int tok_col = 0;
    bool in_comment = false;

    auto flush = [&]() {
        if (!current.empty()) {
            tokens.push_back({current, tok_line, tok_col});
            current.clear();
        }
    };

    for (char c : text) {
        if (c == '\n') {
            flush();
            in_comment = false;
            ++line;
            column = 1;
            continue;
        }
        if (in_comment) {
            ++column;
            continue;
        }
        if (c == '#') {
            flush();
            in_comment = true;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else if (c == ';') {
            flush();
            tokens.push_back({";", line, column});
        } else {
            if (current.empty()) {
                tok_line = line;
                tok_col = column;
            }
            current += c;
        }
        ++column;
    }
    flush();
    return tokens;
}

bool valid_generator_name(const std::string& name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
        return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    const std::vector<Token> tokens = tokenize(text);
    if (tokens.empty()) {
        throw ParseError("empty presentation", 1, 1);
    }

    // Split the token stream into ';'-terminated statements. The final
    // terminator may be omitted.
    std::vector<std::vector<Token>> statements;
    std::vector<Token> current;
    for (const Token& t : tokens) {
        if (t.text == ";") {
            if (!current.empty()) {
                statements.push_back(current);
                current.clear();
            }
        } else {
            current.push_back(t);
        }
    }
    if (!current.empty()) {
        statements.push_back(current);
    }
    if (statements.empty()) {
        throw ParseError("empty presentation", 1, 1);
    }

    Presentation p;
    bool saw_gens = false;
    bool saw_rels = false;
    bool saw_free = false;

    for (const auto& stmt : statements) {
        const Token& head = stmt.front();
        if (head.text == "gens") {
            if (saw_gens) {
                throw ParseError("duplicate 'gens' statement", head.line, head.column);
            }
            saw_gens = true;
            if (stmt.size() < 2) {
                throw ParseError("'gens' needs at least one generator name", head.line, head.column);
            }
            std::set<std::string> seen;
            for (std::size_t i = 1; i < stmt.size(); ++i) {
                const Token& name = stmt[i];
                if (!valid_generator_name(name.text)) {
                    throw ParseError("invalid generator name '" + name.text + "'",
                                     name.line, name.column);
                }
                if (!seen.insert(name.text).second) {
                    throw ParseError("duplicate generator name '" + name.text + "'",
                                     name.line, name.column);
                }
                p.generators.push_back(name.text);
            }
        } else if (head.text == "rels") {
            if (!saw_gens) {
                throw ParseError("'rels' before 'gens'", head.line, head.column);
            }
            if (saw_free) {
                throw ParseError("'rels' conflicts with 'free'", head.line, head.column);
            }
            if (stmt.size() < 2) {
                throw ParseError("'rels' needs at least one relator (use 'free;' for none)",
                                 head.line, head.column);
            }
            saw_rels = true;
            for (std::size_t i = 1; i < stmt.size(); ++i) {
                const Token& tok = stmt[i];
                Word w;
                try {
                    w = parse_word(tok.text, p.generators);
                } catch (const ParseError& e) {
                    throw ParseError(e.what(), tok.line, tok.column + e.column() - 1);
                }
                w = free_reduce(w);
                if (w.empty()) {
                    throw ParseError("relator '" + tok.text + "' reduces to the empty word",
                                     tok.line, tok.column);
                }
                p.relators.push_back(std::move(w));
            }
        } else if (head.text == "free") {
            if (!saw_gens) {
                throw ParseError("'free' before 'gens'", head.line, head.column);
            }
            if (saw_rels) {
                throw ParseError("'free' conflicts with 'rels'", head.line, head.column);
            }
            if (saw_free) {
                throw ParseError("duplicate 'free' statement", head.line, head.column);
            }
            if (stmt.size() > 1) {
                throw ParseError("'free' takes no arguments", stmt[1].line, stmt[1].column);
            }
            saw_free = true;
        } else {
            throw ParseError("unknown statement '" + head.text + "'", head.line, head.column);
        }
    }

    if (!saw_gens) {
        throw ParseError("missing 'gens' statement", tokens.front().line, tokens.front().column);
    }
    if (!saw_rels && !saw_free) {
        throw ParseError("no relators given; write 'free;' for a free group",
                         tokens.front().line, tokens.front().column);
    }
    return p;
}

std::string serialize_presentation(const Presentation& p) {
    std::string out = "gens";
    for (const std::string& g : p.generators) {
        out += " " + g;
    }
    out += ";\n";
    if (p.relators.empty()) {
        out += "free;\n";
        return out;
    }
    out += "rels";
    for (const Word& r : p.relators) {
        out += " " + format_word(r, p.generators);
    }
    out += ";\n";
    return out;
}

Presentation rotation_triangle(int m, int n, std::vector<Word> extra_relators) {
    Presentation p;
    p.generators = {"A", "B", "C"};
    p.relators.push_back(Word{kGenA, kGenA});
    p.relators.push_back(word_power(Word{kGenB}, m));
    p.relators.push_back(word_power(Word{kGenC}, n));
    p.relators.push_back(Word{kGenA, kGenB, kGenC});
    for (Word& w : extra_relators) {
        Word reduced = free_reduce(w);
        if (reduced.empty()) {
            throw std::invalid_argument("extra relator reduces to the empty word");
        }
        p.relators.push_back(std::move(reduced));
    }
    return p;
}

Word rotation_to_extended(const Word& w) {
    Word out;
    out.reserve(w.size() * 2);
    for (int letter : free_reduce(w)) {
        switch (letter) {
            case kGenA: out.push_back(kGenP); out.push_back(kGenQ); break;
            case -kGenA: out.push_back(kGenQ); out.push_back(kGenP); break;
            case kGenB: out.push_back(kGenQ); out.push_back(kGenR); break;
            case -kGenB: out.push_back(kGenR); out.push_back(kGenQ); break;
            case kGenC: out.push_back(kGenR); out.push_back(kGenP); break;
            case -kGenC: out.push_back(kGenP); out.push_back(kGenR); break;
            default:
                throw std::invalid_argument("rotation word letter outside {A,B,C}");
        }
    }
    return free_reduce(out);
}

Presentation extended_triangle(int m, int n, const std::vector<Word>& extra_rotation_relators) {
    Presentation p;
    p.generators = {"P", "Q", "R"};
    p.relators.push_back(Word{kGenP, kGenP});
    p.relators.push_back(Word{kGenQ, kGenQ});
    p.relators.push_back(Word{kGenR, kGenR});
    p.relators.push_back(word_power(Word{kGenP, kGenQ}, 2));
    p.relators.push_back(word_power(Word{kGenQ, kGenR}, m));
    p.relators.push_back(word_power(Word{kGenR, kGenP}, n));
    for (const Word& w : extra_rotation_relators) {
        Word translated = rotation_to_extended(w);
        if (translated.empty()) {
            throw std::invalid_argument("extra relator reduces to the empty word");
        }
        p.relators.push_back(std::move(translated));
    }
    return p;
}

}  // namespace regmap
