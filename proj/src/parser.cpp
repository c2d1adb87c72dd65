#include "sere/parser.hpp"

#include <cctype>
#include <set>

namespace sere {

namespace {

enum class Tok { Ident, Semi, AndAnd, OrOr, Amp, Pipe, Bang, Star, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            int line = line_, col = col_;
            if (pos_ >= text_.size()) {
                out.push_back({Tok::End, "", line, col});
                return out;
            }
            char c = text_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string id;
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                    id += text_[pos_];
                    advance();
                }
                out.push_back({Tok::Ident, id, line, col});
                continue;
            }
            switch (c) {
                case ';': advance(); out.push_back({Tok::Semi, ";", line, col}); break;
                case '*': advance(); out.push_back({Tok::Star, "*", line, col}); break;
                case '!': advance(); out.push_back({Tok::Bang, "!", line, col}); break;
                case '(': advance(); out.push_back({Tok::LParen, "(", line, col}); break;
                case ')': advance(); out.push_back({Tok::RParen, ")", line, col}); break;
                case '&':
                    advance();
                    if (pos_ < text_.size() && text_[pos_] == '&') {
                        advance();
                        out.push_back({Tok::AndAnd, "&&", line, col});
                    } else {
                        out.push_back({Tok::Amp, "&", line, col});
                    }
                    break;
                case '|':
                    advance();
                    if (pos_ < text_.size() && text_[pos_] == '|') {
                        advance();
                        out.push_back({Tok::OrOr, "||", line, col});
                    } else {
                        out.push_back({Tok::Pipe, "|", line, col});
                    }
                    break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
            }
        }
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {  // comment to end of line
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(std::vector<Token> toks, const std::vector<std::string>& atoms)
        : toks_(std::move(toks)), atoms_(atoms.begin(), atoms.end()) {}

    FormulaPtr run() {
        FormulaPtr f = formula();
        expect(Tok::End, "end of input");
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError("expected " + msg + ", got " + got, t.line, t.col);
    }

    void expect(Tok k, const std::string& what) {
        if (peek().kind != k) fail(what);
        ++pos_;
    }

    FormulaPtr formula() {
        FormulaPtr acc = seq();
        while (peek().kind == Tok::AndAnd || peek().kind == Tok::OrOr) {
            bool is_and = next().kind == Tok::AndAnd;
            FormulaPtr rhs = seq();
            acc = is_and ? Formula::conj(acc, rhs) : Formula::disj(acc, rhs);
        }
        return acc;
    }

    // seq := item { ";" item } | "(" formula ")"
    // A leading "(" is ambiguous between the two branches; we parse the
    // parenthesized content as a formula and decide from what follows.
    FormulaPtr seq() {
        if (peek().kind == Tok::LParen) {
            size_t save = pos_;
            const Token open = next();
            FormulaPtr inner = formula();
            expect(Tok::RParen, "')'");
            Tok after = peek().kind;
            if (after == Tok::AndAnd || after == Tok::OrOr || after == Tok::RParen ||
                after == Tok::End) {
                return inner;
            }
            // The parenthesis was a term grouping; reparse item by item.
            if (!coercible_to_term(inner)) {
                throw ParseError("parenthesized sequence cannot be used as a term", open.line,
                                 open.col);
            }
            pos_ = save;
        }
        std::vector<Item> items;
        items.push_back(item());
        while (peek().kind == Tok::Semi) {
            next();
            items.push_back(item());
        }
        return Formula::seq(std::move(items));
    }

    static bool coercible_to_term(const FormulaPtr& f) {
        return f->kind == Formula::Kind::Seq && f->items.size() == 1 && !f->items[0].starred;
    }

    Item item() {
        TermPtr t = term();
        bool starred = false;
        if (peek().kind == Tok::Star) {
            next();
            starred = true;
        }
        return Item{t, starred};
    }

    TermPtr term() {
        if (peek().kind == Tok::Bang) {
            next();
            return Term::negate(term());
        }
        return or_term();
    }

    TermPtr or_term() {
        TermPtr acc = and_term();
        while (peek().kind == Tok::Pipe) {
            next();
            acc = Term::disj(acc, and_term());
        }
        return acc;
    }

    TermPtr and_term() {
        TermPtr acc = factor();
        while (peek().kind == Tok::Amp) {
            next();
            acc = Term::conj(acc, factor());
        }
        return acc;
    }

    TermPtr factor() {
        if (peek().kind == Tok::Ident) {
            const Token& t = next();
            if (!atoms_.count(t.text)) throw UnknownAtomError(t.text, t.line, t.col);
            return Term::atom_ref(t.text);
        }
        if (peek().kind == Tok::LParen) {
            next();
            TermPtr t = term();
            expect(Tok::RParen, "')'");
            return t;
        }
        fail("an atom or '('");
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    std::set<std::string> atoms_;
};

}  // namespace

FormulaPtr parse_sere(const std::string& text, const std::vector<std::string>& atoms) {
    Lexer lex(text);
    Parser p(lex.run(), atoms);
    return p.run();
}

std::vector<std::string> scan_identifiers(const std::string& text) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const Token& t : Lexer(text).run()) {
        if (t.kind == Tok::Ident && seen.insert(t.text).second) out.push_back(t.text);
    }
    return out;
}

}  // namespace sere
