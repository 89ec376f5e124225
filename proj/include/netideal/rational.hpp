#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace netideal {

/// Exact rational coefficients backed by GMP.  This is the default field
/// for every Groebner computation; results over Q are canonical and
/// byte-reproducible.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) { v_.canonicalize(); }
  Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(v_ / o.v_));
  }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  Rat inv() const { return Rat::one() / *this; }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }

  /// Canonical form: "n" or "n/d" with d > 0 and gcd(n, d) = 1.
  std::string str() const { return v_.get_str(); }

  /// Parses an integer or n/d fraction; nullopt on malformed input.
  static std::optional<Rat> parse(const std::string& s);

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

/// Prime field F_p for a runtime modulus p < 2^31.  Off by default; the
/// modulus is process-global state set once before any F_p arithmetic.
class Fp {
 public:
  Fp() : v_(0) {}
  Fp(long n) {
    long m = n % static_cast<long>(modulus());
    if (m < 0) m += static_cast<long>(modulus());
    v_ = static_cast<std::uint64_t>(m);
  }

  static void set_modulus(std::uint64_t p);
  static std::uint64_t modulus();

  static Fp zero() { return Fp(0); }
  static Fp one() { return Fp(1); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp operator-() const { return from_raw(v_ == 0 ? 0 : modulus() - v_); }
  Fp operator+(const Fp& o) const {
    std::uint64_t s = v_ + o.v_;
    if (s >= modulus()) s -= modulus();
    return from_raw(s);
  }
  Fp operator-(const Fp& o) const {
    std::uint64_t s = v_ + modulus() - o.v_;
    if (s >= modulus()) s -= modulus();
    return from_raw(s);
  }
  Fp operator*(const Fp& o) const { return from_raw((v_ * o.v_) % modulus()); }
  Fp operator/(const Fp& o) const { return *this * o.inv(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp inv() const;

  bool operator==(const Fp& o) const { return v_ == o.v_; }
  bool operator!=(const Fp& o) const { return v_ != o.v_; }

  std::string str() const { return std::to_string(v_); }
  static std::optional<Fp> parse(const std::string& s);

 private:
  static Fp from_raw(std::uint64_t v) {
    Fp r;
    r.v_ = v;
    return r;
  }
  std::uint64_t v_;
};

}  // namespace netideal
