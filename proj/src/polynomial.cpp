#include "netideal/polynomial.hpp"

namespace netideal {

PolyFp to_prime_field(const PolyQ& p, const MonomialOrder& ord) {
  PolyFp r(p.ring());
  mpz_class mod(static_cast<unsigned long>(Fp::modulus()));
  for (const auto& t : p.terms()) {
    mpz_class num = t.c.raw().get_num() % mod;
    mpz_class den = t.c.raw().get_den() % mod;
    if (den == 0)
      throw std::domain_error("to_prime_field: denominator divisible by modulus");
    if (num < 0) num += mod;
    Fp c = Fp(num.get_si()) / Fp(den.get_si());
    r = r.add(PolyFp::term(p.ring(), t.m, c), ord);
  }
  return r;
}

}  // namespace netideal
