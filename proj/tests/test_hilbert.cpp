// Macaulay expansions, growth bounds, and multigraded Hilbert functions.
#include <memory>
#include <string>
#include <vector>

#include "doctest.h"
#include "netideal/hilbert.hpp"
#include "netideal/polytext.hpp"

using namespace netideal;

namespace {
RingPtr pair_ring() {
  return std::make_shared<Ring>(std::vector<std::string>{"m1", "m1'", "m2", "m2'"});
}
}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binomial(6, 4) == 15);
  CHECK(binomial(5, 3) == 10);
  CHECK(binomial(2, 2) == 1);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 2) == 0);
  CHECK(binomial(mpz_class(50), 25) == mpz_class("126410606437752"));
}

TEST_CASE("the 4th Macaulay representation of 27") {
  auto e = d_binomial_expansion(27, 4);
  REQUIRE(e.terms.size() == 4);
  CHECK(e.terms[0] == std::make_pair(mpz_class(6), 4L));
  CHECK(e.terms[1] == std::make_pair(mpz_class(5), 3L));
  CHECK(e.terms[2] == std::make_pair(mpz_class(2), 2L));
  CHECK(e.terms[3] == std::make_pair(mpz_class(1), 1L));
  CHECK(e.value() == 27);
  CHECK(macaulay_diff_set(27, 4) == std::vector<mpz_class>{2, 2, 0, 0});
  CHECK(macaulay_bracket(27, 4) == 38);  // C(7,5)+C(6,4)+C(3,3)+C(2,2)
}

TEST_CASE("Macaulay representations are valid and reconstruct their input") {
  for (long c = 0; c <= 300; ++c) {
    for (int d = 1; d <= 4; ++d) {
      auto e = d_binomial_expansion(c, d);
      CHECK(e.value() == c);
      long prev_i = d + 1;
      mpz_class prev_k = -1;
      for (const auto& [k, i] : e.terms) {
        CHECK(i == prev_i - 1);  // indices descend by one from d
        CHECK(i >= 1);
        CHECK(k >= i);
        if (prev_k >= 0) CHECK(k < prev_k);
        prev_i = i;
        prev_k = k;
      }
    }
  }
  CHECK(d_binomial_expansion(0, 3).terms.empty());
  CHECK(macaulay_diff_set(0, 3).empty());
  CHECK(macaulay_bracket(0, 5) == 0);
  CHECK_THROWS_AS(d_binomial_expansion(5, 0), std::invalid_argument);
}

TEST_CASE("bracket growth commutes with the representation shift") {
  // M_d(c) and M_{d+1}(c^<d>) are the same difference set.
  for (long c = 1; c <= 100; ++c) {
    for (int d = 1; d <= 4; ++d) {
      mpz_class next = macaulay_bracket(c, d);
      CHECK(macaulay_diff_set(c, d) == macaulay_diff_set(next, d + 1));
    }
  }
}

TEST_CASE("standard monomial counting on atom-pair blocks") {
  // One block of two variables, no heads: d+1 bihomogeneous monomials.
  for (int d = 0; d <= 6; ++d)
    CHECK(count_standard_monomials({}, {{0, 1}}, d) == d + 1);
  // Two blocks, one quadratic head m1'*m2: 2d+1 survivors.
  Mono head = Mono::unit(4);
  head.e[1] = 1;
  head.e[2] = 1;
  for (int d = 0; d <= 8; ++d)
    CHECK(count_standard_monomials({head}, {{0, 1}, {2, 3}}, d) == 2 * d + 1);
  CHECK(count_standard_monomials({}, {}, 0) == 1);
  CHECK(count_standard_monomials({}, {}, 3) == 0);
  HilbertOptions tiny;
  tiny.max_monomials_per_degree = 5;
  CHECK_THROWS_AS(count_standard_monomials({}, {{0, 1}, {2, 3}}, 3, tiny), ResourceLimitError);
}

TEST_CASE("prime pairing groups coordinates into blocks") {
  auto blocks = blocks_by_prime_pairing(pair_ring());
  CHECK(blocks == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  RingPtr reversed = std::make_shared<Ring>(std::vector<std::string>{"a'", "a"});
  CHECK(blocks_by_prime_pairing(reversed) == std::vector<std::vector<int>>{{1, 0}});
  RingPtr widowed = std::make_shared<Ring>(std::vector<std::string>{"a", "b'"});
  CHECK_THROWS_AS(blocks_by_prime_pairing(widowed), NotMultihomogeneousError);
}

TEST_CASE("diagonal of P1 x P1: h(d) = 2d + 1, Gotzmann number 2") {
  RingPtr r = pair_ring();
  std::vector<PolyQ> gens = {parse_poly(r, "m1*m2' - m1'*m2")};
  auto blocks = blocks_by_prime_pairing(r);
  HilbertTable t = hilbert_function(gens, blocks);
  for (int d = 0; d <= 8; ++d) CHECK(t.values[static_cast<std::size_t>(d)] == 2 * d + 1);
  REQUIRE(t.stabilization.has_value());
  CHECK(*t.stabilization == 2);
  REQUIRE(t.diff_set.has_value());
  CHECK(*t.diff_set == std::vector<mpz_class>{1, 1});
  CHECK(gotzmann_number(gens, blocks) == 2);
}

TEST_CASE("empty ideal on one atom pair: h(d) = d + 1, Gotzmann number 1") {
  RingPtr r = std::make_shared<Ring>(std::vector<std::string>{"a", "a'"});
  std::vector<PolyQ> gens;
  auto blocks = blocks_by_prime_pairing(r);
  HilbertTable t = hilbert_function(gens, blocks);
  for (int d = 0; d <= 8; ++d) CHECK(t.values[static_cast<std::size_t>(d)] == d + 1);
  CHECK(gotzmann_number(gens, blocks) == 1);
}

TEST_CASE("ladder identity must stabilize within dmax") {
  RingPtr r = pair_ring();
  std::vector<PolyQ> gens = {parse_poly(r, "m1*m2' - m1'*m2")};
  auto blocks = blocks_by_prime_pairing(r);
  HilbertOptions shallow;
  shallow.dmax = 3;
  HilbertTable t = hilbert_function(gens, blocks, shallow);
  CHECK(!t.stabilization.has_value());
  CHECK(!t.gotzmann.has_value());
  CHECK_THROWS_AS(gotzmann_number(gens, blocks, shallow), NotStabilizedError);
}

TEST_CASE("multihomogeneity is enforced") {
  RingPtr r = pair_ring();
  auto blocks = blocks_by_prime_pairing(r);
  std::vector<PolyQ> skew = {parse_poly(r, "m1^2 - m2")};
  CHECK_THROWS_AS(hilbert_function(skew, blocks), NotMultihomogeneousError);
  // A generator reaching outside the declared blocks is rejected too.
  std::vector<PolyQ> outside = {parse_poly(r, "m1*m2' - m1'*m2")};
  CHECK_THROWS_AS(hilbert_function(outside, {{0, 1}}), NotMultihomogeneousError);
}
