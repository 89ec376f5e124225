#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "netideal/polynomial.hpp"

#if defined(NETIDEAL_HAVE_OPENMP)
#include <omp.h>
#endif

namespace netideal {

/// Raised when a computation exceeds the configured degree/size caps.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct GroebnerOptions {
  int max_total_degree = 40;
  std::size_t max_basis = 10000;
  /// Batched S-polynomial reduction runs the first reduction pass of each
  /// degree batch in parallel against a frozen basis snapshot and merges
  /// remainders in pair order, so the result is bit-identical to the
  /// serial reference path.
  bool parallel = true;
};

template <class F>
struct DivisionResult {
  Poly<F> remainder;
  std::vector<Poly<F>> quotients;  // one per divisor, f = sum q_i g_i + r
};

/// Full multivariate division: no term of the remainder is divisible by
/// any divisor's leading term.  Divisors are tried in index order.
template <class F>
DivisionResult<F> reduce(const Poly<F>& f, const std::vector<Poly<F>>& gens,
                         const MonomialOrder& ord, const GroebnerOptions& opts = {}) {
  DivisionResult<F> out;
  out.remainder = Poly<F>::zero(f.ring());
  out.quotients.assign(gens.size(), Poly<F>::zero(f.ring()));
  Poly<F> work = f;
  while (!work.is_zero()) {
    const auto& lt = work.leading(ord);
    if (lt.m.deg() > opts.max_total_degree)
      throw ResourceLimitError("reduce: total degree cap exceeded");
    bool divided = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].is_zero()) continue;
      const auto& gl = gens[i].leading(ord);
      if (!gl.m.divides(lt.m)) continue;
      Mono q = lt.m / gl.m;
      F c = lt.c / gl.c;
      out.quotients[i] = out.quotients[i].add(Poly<F>::term(f.ring(), q, c), ord);
      work = work.sub(gens[i].mul_term(q, c), ord);
      divided = true;
      break;
    }
    if (!divided) {
      out.remainder = out.remainder.add(Poly<F>::term(f.ring(), lt.m, lt.c), ord);
      work = work.sub(Poly<F>::term(f.ring(), lt.m, lt.c), ord);
    }
  }
  return out;
}

template <class F>
Poly<F> normal_form(const Poly<F>& f, const std::vector<Poly<F>>& gens,
                    const MonomialOrder& ord, const GroebnerOptions& opts = {}) {
  return reduce(f, gens, ord, opts).remainder;
}

template <class F>
Poly<F> s_poly(const Poly<F>& f, const Poly<F>& g, const MonomialOrder& ord) {
  const auto& lf = f.leading(ord);
  const auto& lg = g.leading(ord);
  Mono l = Mono::lcm(lf.m, lg.m);
  return f.mul_term(l / lf.m, lf.c.inv()).sub(g.mul_term(l / lg.m, lg.c.inv()), ord);
}

namespace detail {

template <class F>
std::vector<Poly<F>> prepare_input(const std::vector<Poly<F>>& gens, const MonomialOrder& ord) {
  std::vector<Poly<F>> g;
  for (auto p : gens) {
    p.normalize(ord);
    if (!p.is_zero()) g.push_back(p.monic(ord));
  }
  return g;
}

struct Pair {
  std::size_t i, j;
  Mono lcm;
};

}  // namespace detail

/// Buchberger's algorithm, normal selection strategy batched by lcm degree.
/// Pairs are filtered by the product criterion and the classic chain
/// criterion.  Deterministic: batch members are reduced against the frozen
/// basis (optionally in parallel) and merged in pair order.
template <class F>
std::vector<Poly<F>> buchberger(const std::vector<Poly<F>>& gens, const MonomialOrder& ord,
                                const GroebnerOptions& opts = {}) {
  std::vector<Poly<F>> G = detail::prepare_input(gens, ord);
  if (G.empty()) return G;

  std::vector<detail::Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> handled;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Mono& a = G[i].leading(ord).m;
      const Mono& b = G[j].leading(ord).m;
      if (a.coprime(b)) {
        handled.insert({i, j});  // product criterion: S-poly reduces to zero
        continue;
      }
      pending.push_back({i, j, Mono::lcm(a, b)});
    }
  };
  for (std::size_t j = 1; j < G.size(); ++j) push_pairs(j);

  while (!pending.empty()) {
    int dmin = pending.front().lcm.deg();
    for (const auto& p : pending) dmin = std::min(dmin, p.lcm.deg());

    std::vector<detail::Pair> batch;
    std::vector<detail::Pair> rest;
    for (auto& p : pending)
      (p.lcm.deg() == dmin ? batch : rest).push_back(p);
    pending = std::move(rest);
    std::sort(batch.begin(), batch.end(), [&](const detail::Pair& a, const detail::Pair& b) {
      int c = ord.cmp(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });

    // Chain criterion against pairs already handled.
    std::vector<detail::Pair> selected;
    for (const auto& p : batch) {
      bool skip = false;
      for (std::size_t k = 0; k < G.size() && !skip; ++k) {
        if (k == p.i || k == p.j) continue;
        if (!G[k].leading(ord).m.divides(p.lcm)) continue;
        auto key = [&](std::size_t a, std::size_t b) {
          return std::make_pair(std::min(a, b), std::max(a, b));
        };
        if (handled.count(key(p.i, k)) && handled.count(key(p.j, k))) skip = true;
      }
      handled.insert({p.i, p.j});
      if (!skip) selected.push_back(p);
    }

    // Parallel kernel: first reduction pass against the frozen basis.
    std::vector<Poly<F>> rems(selected.size(), Poly<F>::zero(G.front().ring()));
    const std::vector<Poly<F>>& frozen = G;
#if defined(NETIDEAL_HAVE_OPENMP)
    if (opts.parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long k = 0; k < static_cast<long>(selected.size()); ++k) {
        rems[k] = normal_form(s_poly(frozen[selected[k].i], frozen[selected[k].j], ord), frozen,
                              ord, opts);
      }
    } else
#endif
    {
      for (std::size_t k = 0; k < selected.size(); ++k)
        rems[k] = normal_form(s_poly(frozen[selected[k].i], frozen[selected[k].j], ord), frozen,
                              ord, opts);
    }

    // Sequential merge in pair order; re-reduce against elements added
    // earlier in the same batch so the outcome matches a serial pass.
    for (std::size_t k = 0; k < selected.size(); ++k) {
      Poly<F> r = normal_form(rems[k], G, ord, opts);
      if (r.is_zero()) continue;
      if (r.total_degree() > opts.max_total_degree)
        throw ResourceLimitError("buchberger: total degree cap exceeded");
      G.push_back(r.monic(ord));
      if (G.size() > opts.max_basis)
        throw ResourceLimitError("buchberger: basis size cap exceeded");
      push_pairs(G.size() - 1);
    }
  }
  return G;
}

/// Reduced Groebner basis: minimal, tail-reduced, monic, sorted by
/// ascending leading monomial.  Canonical for a given (ideal, order).
template <class F>
std::vector<Poly<F>> reduced_groebner(const std::vector<Poly<F>>& gens, const MonomialOrder& ord,
                                      const GroebnerOptions& opts = {}) {
  std::vector<Poly<F>> G = buchberger(gens, ord, opts);
  // Minimalize: drop elements whose leading term another leading term divides.
  std::vector<Poly<F>> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < G.size() && !drop; ++j) {
      if (i == j) continue;
      const Mono& mi = G[i].leading(ord).m;
      const Mono& mj = G[j].leading(ord).m;
      if (mj.divides(mi) && (mi != mj || j < i)) drop = true;
    }
    if (!drop) minimal.push_back(G[i]);
  }
  // Tail-reduce each element against the rest.
  std::vector<Poly<F>> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly<F> r = normal_form(minimal[i], others, ord, opts);
    if (!r.is_zero()) out.push_back(r.monic(ord));
  }
  std::sort(out.begin(), out.end(), [&](const Poly<F>& a, const Poly<F>& b) {
    return ord.cmp(a.leading(ord).m, b.leading(ord).m) < 0;
  });
  return out;
}

template <class F>
bool is_unit_ideal(const std::vector<Poly<F>>& basis) {
  for (const auto& p : basis)
    if (!p.is_zero() && p.total_degree() == 0) return true;
  return false;
}

/// Equality as ideals via mutual normal forms against reduced bases.
template <class F>
bool ideal_equal(const std::vector<Poly<F>>& a, const std::vector<Poly<F>>& b,
                 const MonomialOrder& ord, const GroebnerOptions& opts = {}) {
  auto ga = reduced_groebner(a, ord, opts);
  auto gb = reduced_groebner(b, ord, opts);
  for (const auto& p : a)
    if (!normal_form(p, gb, ord, opts).is_zero()) return false;
  for (const auto& p : b)
    if (!normal_form(p, ga, ord, opts).is_zero()) return false;
  return true;
}

/// Elimination ideal: generators of I intersected with k[keep].  A linear
/// presolve substitutes away eliminated variables that occur in some
/// generator as a lone degree-one term (sound: if g = c*x + h with x not in
/// h and x eliminated, then I cap k[V minus x] is generated by the
/// substituted system), then a block order finishes the job.  The returned
/// basis is the reduced grevlex basis of the elimination ideal.
template <class F>
std::vector<Poly<F>> eliminate(const std::vector<Poly<F>>& gens,
                               const std::vector<std::string>& keep,
                               const MonomialOrder& result_ord, const GroebnerOptions& opts = {}) {
  if (gens.empty()) return {};
  RingPtr ring = gens.front().ring();
  std::vector<bool> kept(ring->nvars(), false);
  for (const auto& name : keep) {
    int idx = ring->var_index(name);
    if (idx < 0) throw std::invalid_argument("eliminate: unknown variable " + name);
    kept[idx] = true;
  }

  const MonomialOrder grev = MonomialOrder::grevlex();
  std::vector<Poly<F>> work = detail::prepare_input(gens, grev);

  // Linear presolve on eliminated variables.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t gi = 0; gi < work.size() && !changed; ++gi) {
      const Poly<F>& g = work[gi];
      for (const auto& t : g.terms()) {
        if (t.m.deg() != 1) continue;
        std::size_t v = 0;
        while (t.m.e[v] == 0) ++v;
        if (kept[v] || g.degree_in(v) != 1) continue;
        // x must occur only in this lone linear term.
        bool lone = true;
        for (const auto& u : g.terms())
          if (&u != &t && u.m.e[v] != 0) lone = false;
        if (!lone) continue;
        Poly<F> rest = g.sub(Poly<F>::term(ring, t.m, t.c), grev);
        Poly<F> value = rest.mul_scalar(-(t.c.inv()));
        std::vector<Poly<F>> next;
        for (std::size_t k = 0; k < work.size(); ++k) {
          if (k == gi) continue;
          Poly<F> s = work[k].substitute(v, value, grev);
          if (s.total_degree() > opts.max_total_degree)
            throw ResourceLimitError("eliminate: presolve degree cap exceeded");
          if (!s.is_zero()) next.push_back(s.monic(grev));
        }
        work = std::move(next);
        changed = true;
        break;
      }
    }
  }

  bool any_eliminated = false;
  std::vector<int> block_of(ring->nvars(), 1);
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (!kept[i]) {
      block_of[i] = 0;
      for (const auto& g : work)
        if (g.degree_in(i) > 0) any_eliminated = true;
    }

  std::vector<Poly<F>> restricted;
  if (!any_eliminated) {
    restricted = work;
  } else {
    MonomialOrder elim_ord = MonomialOrder::block(block_of);
    for (auto& g : work) g.normalize(elim_ord);
    std::vector<Poly<F>> gb = reduced_groebner(work, elim_ord, opts);
    for (const auto& g : gb) {
      bool pure = true;
      for (const auto& t : g.terms())
        for (std::size_t i = 0; i < ring->nvars() && pure; ++i)
          if (!kept[i] && t.m.e[i] > 0) pure = false;
      if (pure) restricted.push_back(g);
    }
  }
  for (auto& g : restricted) g.normalize(result_ord);
  return reduced_groebner(restricted, result_ord, opts);
}

/// Substitutes 1 for every variable whose name ends in a prime tick.  Edge
/// ids are barred from containing primes, so this hits exactly the primed
/// atom coordinates.
PolyQ dehomogenize_by_name(const PolyQ& p);
std::vector<PolyQ> dehomogenize_by_name(const std::vector<PolyQ>& gens);

/// Brute-force membership: is f in the span of { m*g : deg(m) + deg(g) <= D }
/// over Q?  Straight linear algebra, no Groebner machinery; used as an
/// independent oracle for elimination tests.
bool in_span_up_to_degree(const PolyQ& f, const std::vector<PolyQ>& gens, int max_degree);

/// Ideal with cached reduced bases per order.
template <class F>
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly<F>> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly<F>>& gens() const { return gens_; }

  const std::vector<Poly<F>>& groebner(const MonomialOrder& ord,
                                       const GroebnerOptions& opts = {}) const {
    std::string key = order_key(ord);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, reduced_groebner(gens_, ord, opts)).first;
    return it->second;
  }

 private:
  static std::string order_key(const MonomialOrder& ord) {
    switch (ord.kind()) {
      case MonomialOrder::Kind::Grevlex:
        return "grevlex";
      case MonomialOrder::Kind::Lex:
        return "lex";
      case MonomialOrder::Kind::Block:
        return "block";  // callers use one block layout per ideal instance
    }
    return "?";
  }
  RingPtr ring_;
  std::vector<Poly<F>> gens_;
  mutable std::map<std::string, std::vector<Poly<F>>> cache_;
};

using IdealQ = Ideal<Rat>;

}  // namespace netideal
