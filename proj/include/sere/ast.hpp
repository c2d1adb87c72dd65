#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace sere {

// Boolean term over atomic propositions. Immutable; share freely.
class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
public:
    enum class Kind { Const, Atom, Not, And, Or };

    Kind kind;
    bool value = false;      // Const
    std::string atom;        // Atom
    TermPtr lhs, rhs;        // Not uses lhs only

    static TermPtr constant(bool v);
    static TermPtr atom_ref(std::string name);
    static TermPtr negate(TermPtr t);
    static TermPtr conj(TermPtr a, TermPtr b);
    static TermPtr disj(TermPtr a, TermPtr b);

    // n-ary helpers; empty input collapses to the identity element.
    static TermPtr conj_all(const std::vector<TermPtr>& ts);
    static TermPtr disj_all(const std::vector<TermPtr>& ts);
};

bool term_equal(const TermPtr& a, const TermPtr& b);
void collect_atoms(const TermPtr& t, std::set<std::string>& out);
std::string term_to_string(const TermPtr& t);

// One sequence element: a term, optionally starred (zero or more repeats).
struct Item {
    TermPtr term;
    bool starred = false;
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Either a sequence of items or a boolean combination of formulas.
class Formula {
public:
    enum class Kind { Seq, And, Or };

    Kind kind;
    std::vector<Item> items;  // Seq
    FormulaPtr lhs, rhs;      // And/Or

    static FormulaPtr seq(std::vector<Item> items);
    static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
    static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
};

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);
void collect_atoms(const FormulaPtr& f, std::set<std::string>& out);
std::string formula_to_string(const FormulaPtr& f);

}  // namespace sere
