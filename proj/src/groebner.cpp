#include "netideal/groebner.hpp"

#include <algorithm>
#include <map>

namespace netideal {

namespace {
const MonomialOrder kGrev = MonomialOrder::grevlex();
}

PolyQ dehomogenize_by_name(const PolyQ& p) {
  const RingPtr& ring = p.ring();
  PolyQ r = p;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    const std::string& name = ring->var_name(i);
    if (!name.empty() && name.back() == '\'')
      r = r.substitute(i, PolyQ::constant(ring, Rat::one()), kGrev);
  }
  return r;
}

std::vector<PolyQ> dehomogenize_by_name(const std::vector<PolyQ>& gens) {
  std::vector<PolyQ> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    PolyQ d = dehomogenize_by_name(g);
    if (!d.is_zero()) out.push_back(d);
  }
  return out;
}

namespace {

void enumerate_monomials(std::size_t nvars, int max_deg, std::size_t var, Mono& cur,
                         std::vector<Mono>& out) {
  if (var == nvars) {
    out.push_back(cur);
    return;
  }
  const int base = cur.deg();  // exponents at positions >= var are still zero
  for (int d = 0; base + d <= max_deg; ++d) {
    cur.e[var] = d;
    enumerate_monomials(nvars, max_deg, var + 1, cur, out);
  }
  cur.e[var] = 0;
}

using SparseRow = std::map<std::size_t, Rat>;  // column -> coefficient

// Reduces row against the pivot set in place; returns true if it vanished.
bool reduce_row(SparseRow& row, const std::map<std::size_t, SparseRow>& pivots) {
  while (!row.empty()) {
    std::size_t lead = row.begin()->first;
    auto it = pivots.find(lead);
    if (it == pivots.end()) return false;
    Rat factor = row.begin()->second;  // pivot rows are normalized to lead 1
    for (const auto& [col, c] : it->second) {
      auto jt = row.find(col);
      Rat v = (jt == row.end() ? Rat(0) : jt->second) - factor * c;
      if (v.is_zero()) {
        if (jt != row.end()) row.erase(jt);
      } else {
        row[col] = v;
      }
    }
  }
  return true;
}

}  // namespace

bool in_span_up_to_degree(const PolyQ& f, const std::vector<PolyQ>& gens, int max_degree) {
  if (f.is_zero()) return true;
  if (f.total_degree() > max_degree) return false;
  const RingPtr& ring = f.ring();

  std::vector<Mono> monos;
  Mono cur = Mono::unit(ring->nvars());
  enumerate_monomials(ring->nvars(), max_degree, 0, cur, monos);
  std::sort(monos.begin(), monos.end(),
            [](const Mono& a, const Mono& b) { return kGrev.cmp(a, b) > 0; });
  std::map<std::vector<int>, std::size_t> col_of;
  for (std::size_t i = 0; i < monos.size(); ++i) col_of[monos[i].e] = i;

  auto to_row = [&](const PolyQ& p) {
    SparseRow row;
    for (const auto& t : p.terms()) row[col_of.at(t.m.e)] = t.c;
    return row;
  };

  std::map<std::size_t, SparseRow> pivots;
  auto insert_row = [&](SparseRow row) {
    if (reduce_row(row, pivots)) return;
    Rat lead = row.begin()->second;
    for (auto& [col, c] : row) c = c / lead;
    pivots.emplace(row.begin()->first, std::move(row));
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int budget = max_degree - g.total_degree();
    if (budget < 0) continue;
    std::vector<Mono> mults;
    Mono c2 = Mono::unit(ring->nvars());
    enumerate_monomials(ring->nvars(), budget, 0, c2, mults);
    for (const auto& m : mults) insert_row(to_row(g.mul_term(m, Rat::one())));
  }

  SparseRow target = to_row(f);
  return reduce_row(target, pivots);
}

}  // namespace netideal
