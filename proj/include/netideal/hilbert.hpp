#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "netideal/groebner.hpp"

namespace netideal {

struct NotStabilizedError : std::runtime_error {
  explicit NotStabilizedError(const std::string& w) : std::runtime_error(w) {}
};
struct NotMultihomogeneousError : std::runtime_error {
  explicit NotMultihomogeneousError(const std::string& w) : std::runtime_error(w) {}
};

mpz_class binomial(const mpz_class& n, long k);

/// The d-th Macaulay representation c = C(k_d,d) + ... + C(k_delta,delta)
/// with k_d > k_{d-1} > ... > k_delta >= delta >= 1, greedy and unique.
struct BinomialExpansion {
  int d = 0;
  /// (k_i, i) pairs, i descending from d to delta.
  std::vector<std::pair<mpz_class, long>> terms;

  mpz_class value() const;
};

BinomialExpansion d_binomial_expansion(const mpz_class& c, int d);

/// Macaulay difference set M_d(c) = (k_d - d, ..., k_delta - delta).
std::vector<mpz_class> macaulay_diff_set(const mpz_class& c, int d);

/// c^<d> = sum C(k_i + 1, i + 1); the Macaulay growth bound for h(d+1)
/// given h(d) = c.  By convention 0^<d> = 0.
mpz_class macaulay_bracket(const mpz_class& c, int d);

struct HilbertOptions {
  int dmax = 12;
  long max_monomials_per_degree = 1000000;
  /// Number of consecutive degrees on which the ladder identity
  /// h(d+1) = h(d)^<d> must hold before the table counts as stabilized.
  int ladder_window = 3;
  bool parallel = true;
};

struct HilbertTable {
  std::vector<long> values;  // h(0) .. h(dmax)
  std::optional<int> stabilization;
  std::optional<std::vector<mpz_class>> diff_set;
  std::optional<long> gotzmann;
};

/// Counts monomials of multidegree (d,...,d) across the given variable
/// blocks that no head monomial divides.
long count_standard_monomials(const std::vector<Mono>& heads,
                              const std::vector<std::vector<int>>& blocks, int d,
                              const HilbertOptions& opts = {});

/// Hilbert function of a block-multihomogeneous ideal by standard-monomial
/// counting against the reduced grevlex basis.  Every generator must have
/// uniform degree per block across its terms and use block variables only.
HilbertTable hilbert_function(const std::vector<PolyQ>& gens,
                              const std::vector<std::vector<int>>& blocks,
                              const HilbertOptions& opts = {}, const GroebnerOptions& gopts = {});

/// Length of the eventually-constant Macaulay difference set; throws
/// NotStabilizedError when the table does not stabilize within dmax.
long gotzmann_number(const std::vector<PolyQ>& gens, const std::vector<std::vector<int>>& blocks,
                     const HilbertOptions& opts = {}, const GroebnerOptions& gopts = {});

/// Pairs variables x / x' into atom-pair blocks by name; throws
/// NotMultihomogeneousError if some variable lacks its partner.
std::vector<std::vector<int>> blocks_by_prime_pairing(const RingPtr& ring);

}  // namespace netideal
