#pragma once

#include "sere/ast.hpp"
#include "sere/trace.hpp"

namespace sere {

// Reference semantics by exhaustive decomposition search. Deliberately
// simple; everything else in the toolchain is checked against these two.

// Containment reading: some contiguous subtrace of rho matches psi
// (arbitrary prefix and suffix around the match).
bool satisfies(const Trace& rho, const FormulaPtr& psi);

// Same, but the match must end at the final step of rho (empty suffix).
bool ends_with_match(const Trace& rho, const FormulaPtr& psi);

// Does rho[begin..end) match the item sequence exactly, with no slack on
// either side? Exposed for tests that enumerate decompositions directly.
bool matches_exactly(const Trace& rho, size_t begin, size_t end, const std::vector<Item>& items);

}  // namespace sere
