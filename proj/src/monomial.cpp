#include "netideal/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace netideal {

Ring::Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!index_.emplace(vars_[i], static_cast<int>(i)).second)
      throw std::invalid_argument("Ring: duplicate variable " + vars_[i]);
  }
}

int Ring::var_index(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int Mono::deg() const {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool Mono::is_unit() const {
  for (int x : e)
    if (x != 0) return false;
  return true;
}

bool Mono::divides(const Mono& m) const {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

Mono Mono::operator*(const Mono& o) const {
  Mono r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

Mono Mono::operator/(const Mono& o) const {
  Mono r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) {
    r.e[i] -= o.e[i];
    if (r.e[i] < 0) throw std::domain_error("Mono: non-exact division");
  }
  return r;
}

Mono Mono::lcm(const Mono& a, const Mono& b) {
  Mono r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

bool Mono::coprime(const Mono& o) const {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0 && o.e[i] > 0) return false;
  return true;
}

MonomialOrder MonomialOrder::grevlex() {
  MonomialOrder o;
  o.kind_ = Kind::Grevlex;
  return o;
}

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  return o;
}

MonomialOrder MonomialOrder::block(std::vector<int> block_of) {
  MonomialOrder o;
  o.kind_ = Kind::Block;
  o.block_of_ = std::move(block_of);
  return o;
}

namespace {

// Grevlex on the subsequence of variables for which in_block(i) holds.
template <class Pred>
int grevlex_cmp_filtered(const Mono& a, const Mono& b, Pred in_block) {
  int da = 0, db = 0;
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (in_block(i)) {
      da += a.e[i];
      db += b.e[i];
    }
  if (da != db) return da < db ? -1 : 1;
  // Reverse-lex tie break: scan from the last variable; at the first
  // difference the *smaller* exponent belongs to the greater monomial.
  for (std::size_t j = a.e.size(); j-- > 0;) {
    if (!in_block(j)) continue;
    if (a.e[j] != b.e[j]) return a.e[j] > b.e[j] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::cmp(const Mono& a, const Mono& b) const {
  switch (kind_) {
    case Kind::Grevlex:
      return grevlex_cmp_filtered(a, b, [](std::size_t) { return true; });
    case Kind::Lex:
      for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      return 0;
    case Kind::Block: {
      int max_block = 0;
      for (int bid : block_of_) max_block = std::max(max_block, bid);
      for (int blk = 0; blk <= max_block; ++blk) {
        int c = grevlex_cmp_filtered(
            a, b, [&](std::size_t i) { return block_of_[i] == blk; });
        if (c != 0) return c;
      }
      return 0;
    }
  }
  return 0;
}

}  // namespace netideal
