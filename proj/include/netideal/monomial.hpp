#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace netideal {

/// Variable table shared by all polynomials of one computation.  Variable
/// order is fixed at construction and is the order every monomial order
/// refers to.
class Ring {
 public:
  explicit Ring(std::vector<std::string> vars);

  std::size_t nvars() const { return vars_.size(); }
  const std::string& var_name(std::size_t i) const { return vars_[i]; }
  const std::vector<std::string>& var_names() const { return vars_; }
  /// -1 when the name is unknown.
  int var_index(const std::string& name) const;

 private:
  std::vector<std::string> vars_;
  std::map<std::string, int> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Exponent vector; always sized to the ring it belongs to.
struct Mono {
  std::vector<int> e;

  static Mono unit(std::size_t nvars) { return Mono{std::vector<int>(nvars, 0)}; }
  int deg() const;
  int deg_of(std::size_t i) const { return e[i]; }
  bool is_unit() const;
  bool divides(const Mono& m) const;
  Mono operator*(const Mono& o) const;
  /// Requires o | *this.
  Mono operator/(const Mono& o) const;
  static Mono lcm(const Mono& a, const Mono& b);
  bool coprime(const Mono& o) const;
  bool operator==(const Mono& o) const { return e == o.e; }
  bool operator!=(const Mono& o) const { return e != o.e; }
};

/// Term orders.  Grevlex and lex are total-degree / lexicographic on the
/// ring's variable order; Block is the elimination order that compares the
/// block-0 variables grevlex first, then block 1, and so on.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Block };

  static MonomialOrder grevlex();
  static MonomialOrder lex();
  /// block_of[i] = block id of variable i (lower block = higher priority,
  /// i.e. block 0 is eliminated first).
  static MonomialOrder block(std::vector<int> block_of);

  Kind kind() const { return kind_; }

  /// Three-way compare: negative if a < b, 0 if equal, positive if a > b.
  int cmp(const Mono& a, const Mono& b) const;
  bool less(const Mono& a, const Mono& b) const { return cmp(a, b) < 0; }

 private:
  Kind kind_ = Kind::Grevlex;
  std::vector<int> block_of_;
};

}  // namespace netideal
