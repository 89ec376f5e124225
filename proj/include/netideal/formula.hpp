#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace netideal {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// MELL formulas in negation normal form: negation appears on atoms only.
/// `~` on a compound formula is normalized away by the parser via dual().
struct Formula {
  enum class Kind { Atom, Tensor, Par, Bang, Quest };

  Kind kind = Kind::Atom;
  std::string atom;      // Kind::Atom
  bool negated = false;  // Kind::Atom
  FormulaPtr left;       // Tensor/Par left operand, Bang/Quest operand
  FormulaPtr right;      // Tensor/Par right operand
};

FormulaPtr make_atom(std::string name, bool negated = false);
FormulaPtr make_tensor(FormulaPtr a, FormulaPtr b);
FormulaPtr make_par(FormulaPtr a, FormulaPtr b);
FormulaPtr make_bang(FormulaPtr a);
FormulaPtr make_quest(FormulaPtr a);

/// Linear-logic dual with operand reversal:
///   ~(A*B) = ~B|~A,  ~(A|B) = ~B*~A,  ~!A = ?~A,  ~?A = !~A.
FormulaPtr dual(const FormulaPtr& f);

bool formulas_equal(const FormulaPtr& a, const FormulaPtr& b);

/// Exponential depth: atoms 0, tensor/par take the max of their operands,
/// bang/quest add one.
int formula_depth(const FormulaPtr& f);

/// True when no !/? occurs anywhere in the formula.
bool is_linear(const FormulaPtr& f);

/// Number of atom occurrences.
int atom_count(const FormulaPtr& f);

/// Atom occurrences left to right as (name, negated).
std::vector<std::pair<std::string, bool>> atom_occurrences(const FormulaPtr& f);

/// Canonical rendering: X, ~X, (A*B), (A|B), !A, ?A.
std::string to_string(const FormulaPtr& f);

/// Parses the formula grammar (unary !/?/~ bind tightest, then *, then |,
/// both left-associative).  Returns nullopt and fills `error` on failure.
std::optional<FormulaPtr> parse_formula(const std::string& text, std::string* error = nullptr);

}  // namespace netideal
