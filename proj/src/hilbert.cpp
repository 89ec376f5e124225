#include "netideal/hilbert.hpp"

#include <algorithm>
#include <functional>

namespace netideal {

mpz_class binomial(const mpz_class& n, long k) {
  if (k < 0 || n < 0) return 0;
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

mpz_class BinomialExpansion::value() const {
  mpz_class s = 0;
  for (const auto& [k, i] : terms) s += binomial(k, i);
  return s;
}

BinomialExpansion d_binomial_expansion(const mpz_class& c, int d) {
  if (d < 1) throw std::invalid_argument("d_binomial_expansion: d must be >= 1");
  if (c < 0) throw std::invalid_argument("d_binomial_expansion: c must be >= 0");
  BinomialExpansion out;
  out.d = d;
  mpz_class r = c;
  long i = d;
  while (r > 0) {
    if (i < 1) throw std::logic_error("d_binomial_expansion: ran out of indices");
    // Greedy: largest k with C(k, i) <= r.  Always exists since C(i, i) = 1.
    mpz_class k = i;
    while (binomial(k + 1, i) <= r) ++k;
    if (!out.terms.empty() && k >= out.terms.back().first)
      throw std::logic_error("d_binomial_expansion: ks not strictly decreasing");
    r -= binomial(k, i);
    out.terms.emplace_back(k, i);
    --i;
  }
  return out;
}

std::vector<mpz_class> macaulay_diff_set(const mpz_class& c, int d) {
  auto exp = d_binomial_expansion(c, d);
  std::vector<mpz_class> out;
  out.reserve(exp.terms.size());
  for (const auto& [k, i] : exp.terms) out.push_back(k - i);
  return out;
}

mpz_class macaulay_bracket(const mpz_class& c, int d) {
  if (c == 0) return 0;
  auto exp = d_binomial_expansion(c, d);
  mpz_class s = 0;
  for (const auto& [k, i] : exp.terms) s += binomial(k + 1, i + 1);
  return s;
}

namespace {

// All ways to distribute degree d over the variables of one block,
// as exponent vectors aligned with the block's variable list.
std::vector<std::vector<int>> block_compositions(int d, int width) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(width), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == width - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[static_cast<std::size_t>(pos)] = a;
      rec(pos + 1, left - a);
    }
  };
  if (width > 0) rec(0, d);
  return out;
}

}  // namespace

long count_standard_monomials(const std::vector<Mono>& heads,
                              const std::vector<std::vector<int>>& blocks, int d,
                              const HilbertOptions& opts) {
  if (blocks.empty()) return d == 0 ? 1 : 0;
  std::size_t nvars = 0;
  for (const auto& b : blocks)
    for (int v : b) nvars = std::max(nvars, static_cast<std::size_t>(v) + 1);
  for (const auto& h : heads) nvars = std::max(nvars, h.e.size());

  std::vector<std::vector<std::vector<int>>> choices;
  long total = 1;
  for (const auto& b : blocks) {
    choices.push_back(block_compositions(d, static_cast<int>(b.size())));
    long sz = static_cast<long>(choices.back().size());
    if (sz == 0) return 0;
    if (total > opts.max_monomials_per_degree / sz + 1) total = opts.max_monomials_per_degree + 1;
    else total *= sz;
    if (total > opts.max_monomials_per_degree)
      throw ResourceLimitError("hilbert: slice exceeds monomial budget at degree " +
                               std::to_string(d));
  }

  long count = 0;
  const long n = total;
#if NETIDEAL_HAVE_OPENMP
  const bool par = opts.parallel;
#else
  const bool par = false;
#endif

  auto standard_at = [&](long flat) -> long {
    std::vector<int> e(nvars, 0);
    long rem = flat;
    for (std::size_t b = blocks.size(); b-- > 0;) {
      long sz = static_cast<long>(choices[b].size());
      const auto& comp = choices[b][static_cast<std::size_t>(rem % sz)];
      rem /= sz;
      for (std::size_t j = 0; j < blocks[b].size(); ++j)
        e[static_cast<std::size_t>(blocks[b][j])] = comp[j];
    }
    for (const auto& h : heads) {
      bool div = true;
      for (std::size_t v = 0; v < h.e.size(); ++v)
        if (h.e[v] > e[v]) {
          div = false;
          break;
        }
      if (div) return 0;
    }
    return 1;
  };

  if (par) {
#if NETIDEAL_HAVE_OPENMP
#pragma omp parallel for schedule(static) reduction(+ : count)
    for (long flat = 0; flat < n; ++flat) count += standard_at(flat);
#endif
  } else {
    for (long flat = 0; flat < n; ++flat) count += standard_at(flat);
  }
  return count;
}

HilbertTable hilbert_function(const std::vector<PolyQ>& gens,
                              const std::vector<std::vector<int>>& blocks,
                              const HilbertOptions& opts, const GroebnerOptions& gopts) {
  std::size_t nvars = 0;
  for (const auto& g : gens)
    for (const auto& t : g.terms()) nvars = std::max(nvars, t.m.e.size());
  std::vector<int> block_of(nvars, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int v : blocks[b]) {
      if (v < 0 || static_cast<std::size_t>(v) >= nvars) continue;
      block_of[static_cast<std::size_t>(v)] = static_cast<int>(b);
    }

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    std::vector<long> ref;
    bool first = true;
    for (const auto& t : g.terms()) {
      std::vector<long> deg(blocks.size(), 0);
      for (std::size_t v = 0; v < t.m.e.size(); ++v) {
        if (t.m.e[v] == 0) continue;
        if (block_of[v] < 0)
          throw NotMultihomogeneousError("hilbert: generator uses a non-block variable");
        deg[static_cast<std::size_t>(block_of[v])] += t.m.e[v];
      }
      if (first) {
        ref = deg;
        first = false;
      } else if (deg != ref) {
        throw NotMultihomogeneousError("hilbert: generator is not multihomogeneous");
      }
    }
  }

  auto ord = MonomialOrder::grevlex();
  auto gb = reduced_groebner(gens, ord, gopts);
  std::vector<Mono> heads;
  heads.reserve(gb.size());
  for (const auto& g : gb)
    if (!g.is_zero()) heads.push_back(g.leading(ord).m);

  HilbertTable table;
  table.values.resize(static_cast<std::size_t>(opts.dmax) + 1, 0);
  for (int d = 0; d <= opts.dmax; ++d)
    table.values[static_cast<std::size_t>(d)] = count_standard_monomials(heads, blocks, d, opts);

  const int window = std::max(1, opts.ladder_window);
  for (int j = 1; j + window <= opts.dmax; ++j) {
    bool ok = true;
    for (int t = j; t < j + window && ok; ++t) {
      mpz_class predicted = macaulay_bracket(table.values[static_cast<std::size_t>(t)], t);
      ok = predicted == table.values[static_cast<std::size_t>(t) + 1];
    }
    if (ok) {
      table.stabilization = j;
      table.diff_set = macaulay_diff_set(table.values[static_cast<std::size_t>(j)], j);
      table.gotzmann = static_cast<long>(table.diff_set->size());
      break;
    }
  }
  return table;
}

long gotzmann_number(const std::vector<PolyQ>& gens, const std::vector<std::vector<int>>& blocks,
                     const HilbertOptions& opts, const GroebnerOptions& gopts) {
  auto table = hilbert_function(gens, blocks, opts, gopts);
  if (!table.gotzmann)
    throw NotStabilizedError("hilbert: ladder identity did not stabilize before dmax");
  return *table.gotzmann;
}

std::vector<std::vector<int>> blocks_by_prime_pairing(const RingPtr& ring) {
  std::vector<std::vector<int>> blocks;
  std::vector<bool> used(ring->nvars(), false);
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    if (used[v]) continue;
    const std::string& name = ring->var_name(v);
    if (!name.empty() && name.back() == '\'') {
      int base = ring->var_index(name.substr(0, name.size() - 1));
      if (base < 0)
        throw NotMultihomogeneousError("hilbert: variable " + name + " has no unprimed partner");
      continue;  // handled when the unprimed partner comes up
    }
    int primed = ring->var_index(name + "'");
    if (primed < 0)
      throw NotMultihomogeneousError("hilbert: variable " + name + " has no primed partner");
    used[v] = true;
    used[static_cast<std::size_t>(primed)] = true;
    blocks.push_back({static_cast<int>(v), primed});
  }
  return blocks;
}

}  // namespace netideal
