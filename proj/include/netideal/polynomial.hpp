#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "netideal/monomial.hpp"
#include "netideal/rational.hpp"

namespace netideal {

/// Sparse multivariate polynomial with coefficients in F.  Terms are kept
/// sorted strictly descending under the order passed to normalize(); all
/// callers keep one active order per computation, so binary operations
/// assume both sides are normalized under the same order.
template <class F>
class Poly {
 public:
  struct Term {
    Mono m;
    F c;
  };

  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }

  static Poly constant(RingPtr ring, const F& c) {
    Poly p(ring);
    if (!c.is_zero()) p.terms_.push_back({Mono::unit(ring->nvars()), c});
    return p;
  }

  static Poly variable(RingPtr ring, int var, int exp = 1) {
    Poly p(ring);
    Mono m = Mono::unit(ring->nvars());
    m.e[var] = exp;
    p.terms_.push_back({m, F::one()});
    return p;
  }

  static Poly term(RingPtr ring, Mono m, const F& c) {
    Poly p(ring);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nterms() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading(const MonomialOrder&) const {
    if (terms_.empty()) throw std::logic_error("Poly: leading term of zero");
    return terms_.front();
  }

  int total_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.deg());
    return d;
  }

  int degree_in(std::size_t var) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.e[var]);
    return d;
  }

  /// Re-sorts terms descending under ord and merges equal monomials.
  void normalize(const MonomialOrder& ord) {
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().m == t.m)
        out.back().c += t.c;
      else
        out.push_back(std::move(t));
      if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }

  /// Merge-add; both sides normalized under ord.
  Poly add(const Poly& o, const MonomialOrder& ord) const {
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      int c = ord.cmp(terms_[i].m, o.terms_[j].m);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(o.terms_[j++]);
      } else {
        F s = terms_[i].c + o.terms_[j].c;
        if (!s.is_zero()) r.terms_.push_back({terms_[i].m, s});
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
  }

  Poly sub(const Poly& o, const MonomialOrder& ord) const { return add(-o, ord); }

  Poly mul_term(const Mono& m, const F& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r;  // multiplying by a monomial preserves any term order
  }

  Poly mul_scalar(const F& c) const { return mul_term(Mono::unit(ring_->nvars()), c); }

  Poly mul(const Poly& o, const MonomialOrder& ord) const {
    Poly r(ring_);
    for (const auto& t : o.terms_) r = r.add(mul_term(t.m, t.c), ord);
    return r;
  }

  /// Leading coefficient scaled to one.
  Poly monic(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    return mul_scalar(leading(ord).c.inv());
  }

  /// Substitutes value for variable var, renormalizing under ord.
  Poly substitute(std::size_t var, const Poly& value, const MonomialOrder& ord) const {
    Poly r(ring_);
    for (const auto& t : terms_) {
      Mono m = t.m;
      int k = m.e[var];
      m.e[var] = 0;
      Poly piece = Poly::term(ring_, m, t.c);
      for (int i = 0; i < k; ++i) piece = piece.mul(value, ord);
      r = r.add(piece, ord);
    }
    return r;
  }

  /// Moves the polynomial into another ring via an index map
  /// (old var index -> new var index); every used variable must be mapped.
  Poly map_ring(const RingPtr& target, const std::vector<int>& index_map,
                const MonomialOrder& ord) const {
    Poly r(target);
    for (const auto& t : terms_) {
      Mono m = Mono::unit(target->nvars());
      for (std::size_t i = 0; i < t.m.e.size(); ++i) {
        if (t.m.e[i] == 0) continue;
        if (index_map[i] < 0)
          throw std::invalid_argument("Poly: unmapped variable " + ring_->var_name(i));
        m.e[index_map[i]] += t.m.e[i];
      }
      r.terms_.push_back({std::move(m), t.c});
    }
    r.normalize(ord);
    return r;
  }

  bool operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].m != o.terms_[i].m || !(terms_[i].c == o.terms_[i].c)) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

using PolyQ = Poly<Rat>;
using PolyFp = Poly<Fp>;

/// Reduces every rational coefficient mod p; throws when a denominator
/// vanishes mod p.
PolyFp to_prime_field(const PolyQ& p, const MonomialOrder& ord);

}  // namespace netideal
