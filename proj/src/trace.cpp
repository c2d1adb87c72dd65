#include "sere/trace.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sere {

bool eval_term(const TermPtr& t, const Valuation& v) {
    switch (t->kind) {
        case Term::Kind::Const: return t->value;
        case Term::Kind::Atom: return val_get(v, t->atom);
        case Term::Kind::Not: return !eval_term(t->lhs, v);
        case Term::Kind::And: return eval_term(t->lhs, v) && eval_term(t->rhs, v);
        case Term::Kind::Or: return eval_term(t->lhs, v) || eval_term(t->rhs, v);
    }
    return false;
}

namespace {

void check_step(const std::vector<std::string>& atoms, const Valuation& v) {
    if (v.size() != atoms.size())
        throw std::invalid_argument("trace step does not match the declared atom set");
    for (const auto& a : atoms) {
        if (!v.count(a)) throw std::invalid_argument("trace step is missing atom '" + a + "'");
    }
}

}  // namespace

Trace::Trace(std::vector<std::string> atoms, std::vector<Valuation> steps)
    : atoms_(std::move(atoms)), steps_(std::move(steps)) {
    for (const auto& s : steps_) check_step(atoms_, s);
}

Trace Trace::from_rows(std::vector<std::string> atoms,
                       const std::vector<std::vector<bool>>& rows) {
    Trace t(std::move(atoms));
    for (const auto& row : rows) {
        if (row.size() != t.atoms_.size())
            throw std::invalid_argument("trace row width does not match the atom count");
        Valuation v;
        for (size_t i = 0; i < row.size(); ++i) v[t.atoms_[i]] = row[i];
        t.steps_.push_back(std::move(v));
    }
    return t;
}

void Trace::push_step(const Valuation& v) {
    check_step(atoms_, v);
    steps_.push_back(v);
}

Trace Trace::concat(const Trace& other) const {
    if (atoms_ != other.atoms_)
        throw std::invalid_argument("cannot concatenate traces over different atom sets");
    Trace out = *this;
    out.steps_.insert(out.steps_.end(), other.steps_.begin(), other.steps_.end());
    return out;
}

Trace Trace::slice(size_t begin, size_t end) const {
    if (begin > end || end > steps_.size()) throw std::out_of_range("bad trace slice");
    Trace out(atoms_);
    out.steps_.assign(steps_.begin() + begin, steps_.begin() + end);
    return out;
}

Trace Trace::project(const std::vector<std::string>& keep) const {
    Trace out(keep);
    for (const auto& s : steps_) {
        Valuation v;
        for (const auto& a : keep) v[a] = val_get(s, a);
        out.steps_.push_back(std::move(v));
    }
    return out;
}

Trace Trace::extend(const Trace& other) const {
    if (size() != other.size())
        throw std::invalid_argument("cannot merge traces of different lengths");
    std::vector<std::string> atoms = atoms_;
    for (const auto& a : other.atoms_) {
        if (std::find(atoms.begin(), atoms.end(), a) != atoms.end())
            throw std::invalid_argument("atom '" + a + "' present on both sides of extend");
        atoms.push_back(a);
    }
    Trace out(std::move(atoms));
    for (size_t i = 0; i < size(); ++i) {
        Valuation v = steps_[i];
        v.insert(other.steps_[i].begin(), other.steps_[i].end());
        out.steps_.push_back(std::move(v));
    }
    return out;
}

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

}  // namespace

Trace read_trace(std::istream& in) {
    std::string line;
    std::vector<std::string> atoms;
    bool have_header = false;
    std::vector<std::vector<bool>> rows;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (!have_header) {
            if (s.rfind("atoms:", 0) != 0)
                throw std::runtime_error("trace line " + std::to_string(lineno) +
                                         ": expected 'atoms:' header");
            atoms = split_commas(trim(s.substr(6)));
            if (atoms.size() == 1 && atoms[0].empty()) atoms.clear();
            have_header = true;
            continue;
        }
        std::vector<bool> row;
        for (const auto& f : split_commas(s)) {
            if (f == "0")
                row.push_back(false);
            else if (f == "1")
                row.push_back(true);
            else
                throw std::runtime_error("trace line " + std::to_string(lineno) +
                                         ": expected 0 or 1, got '" + f + "'");
        }
        if (row.size() != atoms.size())
            throw std::runtime_error("trace line " + std::to_string(lineno) + ": expected " +
                                     std::to_string(atoms.size()) + " values");
        rows.push_back(std::move(row));
    }
    if (!have_header) throw std::runtime_error("trace file has no 'atoms:' header");
    return Trace::from_rows(atoms, rows);
}

Trace read_trace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open trace file '" + path + "'");
    return read_trace(in);
}

std::string write_trace(const Trace& t) {
    std::ostringstream out;
    out << "atoms: ";
    for (size_t i = 0; i < t.atoms().size(); ++i) {
        if (i) out << ",";
        out << t.atoms()[i];
    }
    out << "\n";
    for (const auto& step : t.steps()) {
        for (size_t i = 0; i < t.atoms().size(); ++i) {
            if (i) out << ",";
            out << (val_get(step, t.atoms()[i]) ? '1' : '0');
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace sere
