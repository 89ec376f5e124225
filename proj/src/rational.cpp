#include "netideal/rational.hpp"

namespace netideal {

std::optional<Rat> Rat::parse(const std::string& s) {
  if (s.empty()) return std::nullopt;
  // mpq_class accepts leading '+', but we validate shape ourselves so that
  // garbage like "1/2/3" or "" never reaches GMP's assertion paths.
  std::size_t slash = s.find('/');
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!is_int(s)) return std::nullopt;
    return Rat(mpq_class(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  if (mpz_class(den) == 0) return std::nullopt;
  return Rat(mpq_class(num + "/" + den));
}

namespace {
std::uint64_t g_modulus = 0;
}

void Fp::set_modulus(std::uint64_t p) {
  if (p < 2 || p >= (1ull << 31))
    throw std::invalid_argument("Fp: modulus must satisfy 2 <= p < 2^31");
  // Small primality check; moduli this size are cheap to test.
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("Fp: modulus must be prime");
  g_modulus = p;
}

std::uint64_t Fp::modulus() {
  if (g_modulus == 0)
    throw std::logic_error("Fp: modulus not set (prime field mode is opt-in)");
  return g_modulus;
}

Fp Fp::inv() const {
  if (is_zero()) throw std::domain_error("Fp: division by zero");
  // Extended Euclid on (v, p).
  std::int64_t a = static_cast<std::int64_t>(v_), m = static_cast<std::int64_t>(modulus());
  std::int64_t x0 = 0, x1 = 1, b = m;
  while (a > 1) {
    std::int64_t q = a / b;
    std::int64_t t = b;
    b = a % b;
    a = t;
    t = x0;
    x0 = x1 - q * x0;
    x1 = t;
  }
  if (x1 < 0) x1 += m;
  return Fp(static_cast<long>(x1));
}

std::optional<Fp> Fp::parse(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return std::nullopt;
  // Reduce via mpz to tolerate values wider than int64.
  mpz_class z(s);
  mpz_class m(static_cast<unsigned long>(Fp::modulus()));
  mpz_class r = z % m;
  if (r < 0) r += m;
  return Fp(r.get_si());
}

}  // namespace netideal
