#include "netideal/formula.hpp"

#include <algorithm>
#include <cctype>

namespace netideal {

FormulaPtr make_atom(std::string name, bool negated) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Atom;
  f->atom = std::move(name);
  f->negated = negated;
  return f;
}

FormulaPtr make_tensor(FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Tensor;
  f->left = std::move(a);
  f->right = std::move(b);
  return f;
}

FormulaPtr make_par(FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Par;
  f->left = std::move(a);
  f->right = std::move(b);
  return f;
}

FormulaPtr make_bang(FormulaPtr a) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Bang;
  f->left = std::move(a);
  return f;
}

FormulaPtr make_quest(FormulaPtr a) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Quest;
  f->left = std::move(a);
  return f;
}

FormulaPtr dual(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      return make_atom(f->atom, !f->negated);
    case Formula::Kind::Tensor:
      return make_par(dual(f->right), dual(f->left));
    case Formula::Kind::Par:
      return make_tensor(dual(f->right), dual(f->left));
    case Formula::Kind::Bang:
      return make_quest(dual(f->left));
    case Formula::Kind::Quest:
      return make_bang(dual(f->left));
  }
  return nullptr;
}

bool formulas_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Atom:
      return a->atom == b->atom && a->negated == b->negated;
    case Formula::Kind::Tensor:
    case Formula::Kind::Par:
      return formulas_equal(a->left, b->left) && formulas_equal(a->right, b->right);
    case Formula::Kind::Bang:
    case Formula::Kind::Quest:
      return formulas_equal(a->left, b->left);
  }
  return false;
}

int formula_depth(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      return 0;
    case Formula::Kind::Tensor:
    case Formula::Kind::Par:
      return std::max(formula_depth(f->left), formula_depth(f->right));
    case Formula::Kind::Bang:
    case Formula::Kind::Quest:
      return 1 + formula_depth(f->left);
  }
  return 0;
}

bool is_linear(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      return true;
    case Formula::Kind::Tensor:
    case Formula::Kind::Par:
      return is_linear(f->left) && is_linear(f->right);
    case Formula::Kind::Bang:
    case Formula::Kind::Quest:
      return false;
  }
  return true;
}

int atom_count(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      return 1;
    case Formula::Kind::Tensor:
    case Formula::Kind::Par:
      return atom_count(f->left) + atom_count(f->right);
    case Formula::Kind::Bang:
    case Formula::Kind::Quest:
      return atom_count(f->left);
  }
  return 0;
}

static void collect_atoms(const FormulaPtr& f, std::vector<std::pair<std::string, bool>>& out) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      out.emplace_back(f->atom, f->negated);
      return;
    case Formula::Kind::Tensor:
    case Formula::Kind::Par:
      collect_atoms(f->left, out);
      collect_atoms(f->right, out);
      return;
    case Formula::Kind::Bang:
    case Formula::Kind::Quest:
      collect_atoms(f->left, out);
      return;
  }
}

std::vector<std::pair<std::string, bool>> atom_occurrences(const FormulaPtr& f) {
  std::vector<std::pair<std::string, bool>> out;
  collect_atoms(f, out);
  return out;
}

std::string to_string(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      return f->negated ? "~" + f->atom : f->atom;
    case Formula::Kind::Tensor:
      return "(" + to_string(f->left) + "*" + to_string(f->right) + ")";
    case Formula::Kind::Par:
      return "(" + to_string(f->left) + "|" + to_string(f->right) + ")";
    case Formula::Kind::Bang:
      return "!" + to_string(f->left);
    case Formula::Kind::Quest:
      return "?" + to_string(f->left);
  }
  return "";
}

namespace {

struct FormulaLexer {
  const std::string& s;
  std::size_t pos = 0;
  std::string error;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  FormulaPtr parse_par() {
    auto lhs = parse_tensor();
    if (!lhs) return nullptr;
    while (accept('|')) {
      auto rhs = parse_tensor();
      if (!rhs) return nullptr;
      lhs = make_par(lhs, rhs);
    }
    return lhs;
  }

  FormulaPtr parse_tensor() {
    auto lhs = parse_unary();
    if (!lhs) return nullptr;
    while (accept('*')) {
      auto rhs = parse_unary();
      if (!rhs) return nullptr;
      lhs = make_tensor(lhs, rhs);
    }
    return lhs;
  }

  FormulaPtr parse_unary() {
    if (accept('!')) {
      auto sub = parse_unary();
      return sub ? make_bang(sub) : nullptr;
    }
    if (accept('?')) {
      auto sub = parse_unary();
      return sub ? make_quest(sub) : nullptr;
    }
    if (accept('~')) {
      auto sub = parse_unary();
      return sub ? dual(sub) : nullptr;
    }
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    if (accept('(')) {
      auto sub = parse_par();
      if (!sub) return nullptr;
      if (!accept(')')) {
        error = "expected ')' at offset " + std::to_string(pos);
        return nullptr;
      }
      return sub;
    }
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      ++pos;
    }
    if (pos == start || !std::isalpha(static_cast<unsigned char>(s[start]))) {
      error = "expected atom or '(' at offset " + std::to_string(start);
      return nullptr;
    }
    return make_atom(s.substr(start, pos - start));
  }
};

}  // namespace

std::optional<FormulaPtr> parse_formula(const std::string& text, std::string* error) {
  FormulaLexer lex{text};
  auto f = lex.parse_par();
  if (f) {
    lex.skip_ws();
    if (lex.pos != text.size()) {
      f = nullptr;
      lex.error = "trailing input at offset " + std::to_string(lex.pos);
    }
  }
  if (!f) {
    if (error) *error = lex.error.empty() ? "malformed formula" : lex.error;
    return std::nullopt;
  }
  return f;
}

}  // namespace netideal
