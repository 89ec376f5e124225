#pragma once

#include <string>
#include <vector>

#include "netideal/interpret.hpp"
#include "netideal/reduction.hpp"

namespace netideal {

/// church_power found a basis that is not of the x - phi^n z form.  This is
/// reported, never silently repaired.
struct ShapeMismatchError : std::runtime_error {
  explicit ShapeMismatchError(const std::string& w) : std::runtime_error(w) {}
};

/// Variables visible at the net's conclusions: unprimed atom variables of
/// linear conclusion edges plus chart parameters of exponential ones, in
/// registry ring order.
std::vector<std::string> conclusion_vars(const ProofNet& net, const VariableRegistry& reg);

struct NormalSemantics {
  VariableRegistry registry;
  std::vector<std::string> conclusion_vars;
  std::vector<PolyQ> basis;  // reduced grevlex basis of the eliminated ideal
  bool empty = false;        // unit ideal: the net denotes the empty scheme
};

/// Dehomogenizes the net ideal and eliminates everything but the conclusion
/// variables; the reduced basis is the net's observable content.
NormalSemantics normal_semantics(const ProofNet& net, const InterpretOptions& opts = {});

/// Builds church(n), restricts the chart parameters to the numeral line
/// (all parameter coordinates except the second vanish), and eliminates
/// down to the first input atom z, the last output atom x and the shared
/// multiplier parameter phi.  Returns the relation normalized so x has
/// coefficient 1; it must equal x - phi^n z or ShapeMismatchError is thrown.
PolyQ church_power(int n, const InterpretOptions& opts = {});

struct InvarianceReport {
  bool ok = false;
  bool variable_sets_match = false;
  std::string detail;  // human-readable failure reason, empty when ok
  std::vector<std::string> conclusion_vars_before;
  std::vector<std::string> conclusion_vars_after;  // in after-net names
  std::vector<PolyQ> basis_before;
  std::vector<PolyQ> basis_after;  // renamed into before-net variables
};

/// Compares normal_semantics across a reduction: conclusion edges are
/// paired by their Conc link id (reduction steps rewire but never discard a
/// conclusion), the after-basis is renamed backward and the two elimination
/// ideals must be equal.
InvarianceReport check_invariance(const ProofNet& before, const ProofNet& after,
                                  const InterpretOptions& opts = {});
InvarianceReport check_invariance(const ProofNet& before, const ReduceResult& step,
                                  const InterpretOptions& opts = {});
InvarianceReport check_invariance(const ProofNet& before, const NormalizeResult& trace,
                                  const InterpretOptions& opts = {});

}  // namespace netideal
