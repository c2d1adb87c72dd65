#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sere/ast.hpp"

namespace sere {

class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line, int col)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line),
          col(col) {}
    int line;
    int col;
};

class UnknownAtomError : public ParseError {
public:
    UnknownAtomError(const std::string& name, int line, int col)
        : ParseError("unknown atom '" + name + "'", line, col), atom(name) {}
    std::string atom;
};

// Parses a SERE formula. Every identifier must appear in `atoms`.
FormulaPtr parse_sere(const std::string& text, const std::vector<std::string>& atoms);

// Identifiers of `text` in first-occurrence order; used when no atom set
// is declared alongside a formula.
std::vector<std::string> scan_identifiers(const std::string& text);

}  // namespace sere
