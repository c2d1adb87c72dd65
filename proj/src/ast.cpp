#include "sere/ast.hpp"

#include <stdexcept>
#include <utility>

namespace sere {

namespace {

TermPtr make(Term::Kind k) {
    auto t = std::make_shared<Term>();
    t->kind = k;
    return t;
}

}  // namespace

TermPtr Term::constant(bool v) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Const;
    t->value = v;
    return t;
}

TermPtr Term::atom_ref(std::string name) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Atom;
    t->atom = std::move(name);
    return t;
}

TermPtr Term::negate(TermPtr x) {
    if (x->kind == Kind::Const) return constant(!x->value);
    auto t = make(Kind::Not);
    std::const_pointer_cast<Term>(t)->lhs = std::move(x);
    return t;
}

TermPtr Term::conj(TermPtr a, TermPtr b) {
    if (a->kind == Kind::Const) return a->value ? b : a;
    if (b->kind == Kind::Const) return b->value ? a : b;
    auto t = make(Kind::And);
    auto* m = const_cast<Term*>(t.get());
    m->lhs = std::move(a);
    m->rhs = std::move(b);
    return t;
}

TermPtr Term::disj(TermPtr a, TermPtr b) {
    if (a->kind == Kind::Const) return a->value ? a : b;
    if (b->kind == Kind::Const) return b->value ? b : a;
    auto t = make(Kind::Or);
    auto* m = const_cast<Term*>(t.get());
    m->lhs = std::move(a);
    m->rhs = std::move(b);
    return t;
}

TermPtr Term::conj_all(const std::vector<TermPtr>& ts) {
    TermPtr acc = constant(true);
    for (const auto& t : ts) acc = conj(acc, t);
    return acc;
}

TermPtr Term::disj_all(const std::vector<TermPtr>& ts) {
    TermPtr acc = constant(false);
    for (const auto& t : ts) acc = disj(acc, t);
    return acc;
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Term::Kind::Const: return a->value == b->value;
        case Term::Kind::Atom: return a->atom == b->atom;
        case Term::Kind::Not: return term_equal(a->lhs, b->lhs);
        case Term::Kind::And:
        case Term::Kind::Or:
            return term_equal(a->lhs, b->lhs) && term_equal(a->rhs, b->rhs);
    }
    return false;
}

void collect_atoms(const TermPtr& t, std::set<std::string>& out) {
    switch (t->kind) {
        case Term::Kind::Const: break;
        case Term::Kind::Atom: out.insert(t->atom); break;
        case Term::Kind::Not: collect_atoms(t->lhs, out); break;
        case Term::Kind::And:
        case Term::Kind::Or:
            collect_atoms(t->lhs, out);
            collect_atoms(t->rhs, out);
            break;
    }
}

namespace {

// Precedence inside terms. '!' consumes a whole term, so it binds loosest;
// '&' binds tighter than '|'.
enum TermLevel { kLevelNot = 0, kLevelOr = 1, kLevelAnd = 2, kLevelAtom = 3 };

int level_of(const Term& t) {
    switch (t.kind) {
        case Term::Kind::Not: return kLevelNot;
        case Term::Kind::Or: return kLevelOr;
        case Term::Kind::And: return kLevelAnd;
        default: return kLevelAtom;
    }
}

void print_term(const Term& t, int min_level, std::string& out) {
    const bool parens = level_of(t) < min_level;
    if (parens) out += '(';
    switch (t.kind) {
        case Term::Kind::Const:
            out += t.value ? "true" : "false";
            break;
        case Term::Kind::Atom:
            out += t.atom;
            break;
        case Term::Kind::Not:
            out += '!';
            print_term(*t.lhs, kLevelNot, out);
            break;
        case Term::Kind::Or:
            print_term(*t.lhs, kLevelOr, out);
            out += " | ";
            print_term(*t.rhs, kLevelOr + 1, out);
            break;
        case Term::Kind::And:
            print_term(*t.lhs, kLevelAnd, out);
            out += " & ";
            print_term(*t.rhs, kLevelAnd + 1, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

std::string term_to_string(const TermPtr& t) {
    std::string out;
    print_term(*t, kLevelNot, out);
    return out;
}

FormulaPtr Formula::seq(std::vector<Item> items) {
    if (items.empty()) throw std::invalid_argument("sequence needs at least one item");
    auto f = std::make_shared<Formula>();
    f->kind = Kind::Seq;
    f->items = std::move(items);
    return f;
}

FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::And;
    f->lhs = std::move(a);
    f->rhs = std::move(b);
    return f;
}

FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::Or;
    f->lhs = std::move(a);
    f->rhs = std::move(b);
    return f;
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind) return false;
    if (a->kind == Formula::Kind::Seq) {
        if (a->items.size() != b->items.size()) return false;
        for (size_t i = 0; i < a->items.size(); ++i) {
            if (a->items[i].starred != b->items[i].starred) return false;
            if (!term_equal(a->items[i].term, b->items[i].term)) return false;
        }
        return true;
    }
    return formula_equal(a->lhs, b->lhs) && formula_equal(a->rhs, b->rhs);
}

void collect_atoms(const FormulaPtr& f, std::set<std::string>& out) {
    if (f->kind == Formula::Kind::Seq) {
        for (const auto& it : f->items) collect_atoms(it.term, out);
    } else {
        collect_atoms(f->lhs, out);
        collect_atoms(f->rhs, out);
    }
}

namespace {

void print_formula(const Formula& f, bool parenthesize_composite, std::string& out) {
    if (f.kind == Formula::Kind::Seq) {
        bool first = true;
        for (const auto& it : f.items) {
            if (!first) out += " ; ";
            first = false;
            if (it.starred) {
                // A star suffix applies to a single factor, so composite
                // terms need parentheses to survive a round trip.
                if (it.term->kind == Term::Kind::Atom || it.term->kind == Term::Kind::Const) {
                    out += term_to_string(it.term);
                } else {
                    out += '(';
                    out += term_to_string(it.term);
                    out += ')';
                }
                out += '*';
            } else {
                out += term_to_string(it.term);
            }
        }
        return;
    }
    const bool parens = parenthesize_composite;
    if (parens) out += '(';
    // "&&"/"||" are left-associative at equal precedence, so a composite
    // left child never needs parentheses; a composite right child does.
    print_formula(*f.lhs, false, out);
    out += f.kind == Formula::Kind::And ? " && " : " || ";
    print_formula(*f.rhs, f.rhs->kind != Formula::Kind::Seq, out);
    if (parens) out += ')';
}

}  // namespace

std::string formula_to_string(const FormulaPtr& f) {
    std::string out;
    print_formula(*f, false, out);
    return out;
}

}  // namespace sere
