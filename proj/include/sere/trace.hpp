#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sere/ast.hpp"

namespace sere {

// Total assignment of booleans to a (small) atom set.
using Valuation = std::map<std::string, bool>;

inline bool val_get(const Valuation& v, const std::string& atom) {
    auto it = v.find(atom);
    if (it == v.end()) throw std::out_of_range("valuation has no atom '" + atom + "'");
    return it->second;
}

bool eval_term(const TermPtr& t, const Valuation& v);

// Finite sequence of valuations over one shared atom set.
class Trace {
public:
    Trace() = default;
    explicit Trace(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {}
    Trace(std::vector<std::string> atoms, std::vector<Valuation> steps);

    // Steps given as rows of bits in atom order.
    static Trace from_rows(std::vector<std::string> atoms,
                           const std::vector<std::vector<bool>>& rows);

    const std::vector<std::string>& atoms() const { return atoms_; }
    const std::vector<Valuation>& steps() const { return steps_; }
    size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    const Valuation& step(size_t i) const { return steps_.at(i); }
    bool value(size_t step, const std::string& atom) const { return val_get(steps_.at(step), atom); }

    void push_step(const Valuation& v);

    Trace concat(const Trace& other) const;
    Trace slice(size_t begin, size_t end) const;
    // Keeps only the named atoms (each must be present in every step).
    Trace project(const std::vector<std::string>& keep) const;
    // Per-step union with another trace over a disjoint atom set.
    Trace extend(const Trace& other) const;

private:
    std::vector<std::string> atoms_;
    std::vector<Valuation> steps_;
};

// Text format: "atoms: a,b,c" header, one comma-separated 0/1 row per step,
// '#' starts a comment line.
Trace read_trace(std::istream& in);
Trace read_trace_file(const std::string& path);
std::string write_trace(const Trace& t);

}  // namespace sere
