#include "netideal/interpret.hpp"

#include <algorithm>
#include <set>

namespace netideal {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

bool exponential_formula(const FormulaPtr& f) {
  return f->kind == Formula::Kind::Bang || f->kind == Formula::Kind::Quest;
}

int shape_atoms(const FormulaPtr& f) {
  return exponential_formula(f) ? atom_count(f->left) : atom_count(f);
}

PolyQ map_by_name(const PolyQ& p, const RingPtr& target) {
  std::vector<int> idx(p.ring()->nvars());
  for (std::size_t i = 0; i < p.ring()->nvars(); ++i)
    idx[i] = target->var_index(p.ring()->var_name(i));
  return p.map_ring(target, idx, kGrevlex);
}

struct UnionFind {
  std::map<std::string, std::string> parent;
  void ensure(const std::string& x) { parent.emplace(x, x); }
  std::string find(const std::string& x) {
    std::string r = x;
    while (parent.at(r) != r) r = parent.at(r);
    std::string c = x;
    while (parent.at(c) != c) {
      std::string next = parent.at(c);
      parent[c] = r;
      c = next;
    }
    return r;
  }
  void unite(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
};

/// Registry over a set of edges with known shapes and resolved charts.
VariableRegistry make_registry(const std::vector<std::pair<std::string, int>>& linear_edges,
                               const std::map<std::string, ChartSelection>& charts,
                               int truncation) {
  VariableRegistry reg;
  reg.truncation = truncation;
  std::vector<std::string> names;
  std::map<std::string, int> atoms;
  for (const auto& [id, m] : linear_edges) atoms[id] = m;

  std::set<std::string> all_ids;
  for (const auto& [id, m] : linear_edges) all_ids.insert(id);
  for (const auto& [id, c] : charts) all_ids.insert(id);
  for (const auto& id : all_ids) {
    auto lin = atoms.find(id);
    if (lin != atoms.end()) {
      for (int t = 1; t <= lin->second; ++t) {
        names.push_back(atom_var_name(id, t, lin->second, false));
        reg.vars.push_back({names.back(), VarClass::UnprimedAtom, id, t});
        names.push_back(atom_var_name(id, t, lin->second, true));
        reg.vars.push_back({names.back(), VarClass::PrimedAtom, id, t});
      }
      reg.edge_atoms[id] = lin->second;
    } else {
      const ChartSelection& chart = charts.at(id);
      for (int k = 1; k <= chart.param_count(); ++k) {
        names.push_back(param_var_name(id, k));
        reg.vars.push_back({names.back(), VarClass::ChartParameter, id, k});
      }
      reg.charts[id] = chart;
    }
  }
  reg.ring = std::make_shared<Ring>(names);
  return reg;
}

Mono block_mono(const VariableRegistry& reg, const std::string& edge,
                const std::vector<int>& unprimed, int truncation) {
  Mono m = Mono::unit(reg.ring->nvars());
  int atoms = reg.atoms_of(edge);
  for (int t = 1; t <= atoms; ++t) {
    m.e[reg.ring->var_index(reg.atom_var(edge, t, false))] += unprimed[t - 1];
    m.e[reg.ring->var_index(reg.atom_var(edge, t, true))] += truncation - unprimed[t - 1];
  }
  return m;
}

PolyQ param_diagonal(const VariableRegistry& reg, const std::string& a, const std::string& b,
                     int k) {
  RingPtr ring = reg.ring;
  PolyQ p = PolyQ::variable(ring, ring->var_index(reg.param_var(a, k)))
                .sub(PolyQ::variable(ring, ring->var_index(reg.param_var(b, k))), kGrevlex);
  return p;
}

/// The 2x2 minor of paired atoms: x*y' - x'*y.
PolyQ pair_minor(const VariableRegistry& reg, const std::string& e1, int t1,
                 const std::string& e2, int t2) {
  RingPtr ring = reg.ring;
  Mono m1 = Mono::unit(ring->nvars());
  m1.e[ring->var_index(reg.atom_var(e1, t1, false))] = 1;
  m1.e[ring->var_index(reg.atom_var(e2, t2, true))] = 1;
  Mono m2 = Mono::unit(ring->nvars());
  m2.e[ring->var_index(reg.atom_var(e1, t1, true))] = 1;
  m2.e[ring->var_index(reg.atom_var(e2, t2, false))] = 1;
  PolyQ p = PolyQ::term(ring, m1, Rat(1)).add(PolyQ::term(ring, m2, Rat(-1)), kGrevlex);
  return p;
}

std::vector<PolyQ> diagonal_gens(const VariableRegistry& reg, const std::string& e1,
                                 const std::string& e2, const std::string& where) {
  std::vector<PolyQ> out;
  if (reg.is_exponential_edge(e1) != reg.is_exponential_edge(e2))
    throw ChartMismatchError(where + ": cannot pair linear edge with exponential edge");
  if (reg.is_exponential_edge(e1)) {
    if (reg.params_of(e1) != reg.params_of(e2))
      throw ChartMismatchError(where + ": edges " + e1 + ", " + e2 +
                               " carry different chart parameter counts");
    for (int k = 1; k <= reg.params_of(e1); ++k) out.push_back(param_diagonal(reg, e1, e2, k));
  } else {
    int m = reg.atoms_of(e1);
    if (m != reg.atoms_of(e2))
      throw ChartMismatchError(where + ": edges " + e1 + ", " + e2 + " differ in atom count");
    for (int t = 1; t <= m; ++t) out.push_back(pair_minor(reg, e1, t, e2, m + 1 - t));
  }
  return out;
}

/// Generators of one link in the given registry's ring.  Prom links are
/// handled by the box machinery and yield nothing here.
std::vector<PolyQ> emit_link_gens(const Link& l, const VariableRegistry& reg) {
  RingPtr ring = reg.ring;
  std::vector<PolyQ> out;
  switch (l.kind) {
    case LinkKind::Ax:
      return diagonal_gens(reg, l.conclusions[0], l.conclusions[1], "ax " + l.id);
    case LinkKind::Cut:
      return diagonal_gens(reg, l.premises[0], l.premises[1], "cut " + l.id);
    case LinkKind::Tensor:
    case LinkKind::Par: {
      const std::string &p1 = l.premises[0], &p2 = l.premises[1], &c = l.conclusions[0];
      if (reg.is_exponential_edge(p1) || reg.is_exponential_edge(p2) ||
          reg.is_exponential_edge(c))
        throw ChartMismatchError("link " + l.id +
                                 ": tensor/par over exponential factors is outside the chart "
                                 "model");
      int m1 = reg.atoms_of(p1), m2 = reg.atoms_of(p2), m = reg.atoms_of(c);
      if (m != m1 + m2)
        throw ChartMismatchError("link " + l.id + ": conclusion atom count mismatch");
      auto premise_atom = [&](int t, bool primed) {  // t is 1-based over the joint premises
        return t <= m1 ? ring->var_index(reg.atom_var(p1, t, primed))
                       : ring->var_index(reg.atom_var(p2, t - m1, primed));
      };
      for (long mask = 1; mask < (1L << m); ++mask) {
        Mono left = Mono::unit(ring->nvars());
        Mono right = Mono::unit(ring->nvars());
        for (int t = 1; t <= m; ++t) {
          bool up = (mask >> (t - 1)) & 1;
          left.e[ring->var_index(reg.atom_var(c, t, !up))] += 1;
          left.e[premise_atom(t, true)] += 1;
          right.e[ring->var_index(reg.atom_var(c, t, true))] += 1;
          right.e[premise_atom(t, !up)] += 1;
        }
        PolyQ g = PolyQ::term(ring, left, Rat(1)).add(PolyQ::term(ring, right, Rat(-1)), kGrevlex);
        out.push_back(g);
      }
      return out;
    }
    case LinkKind::Der: {
      const std::string &p = l.premises[0], &c = l.conclusions[0];
      if (!reg.is_exponential_edge(c) || reg.is_exponential_edge(p))
        throw ChartMismatchError("link " + l.id + ": dereliction edge roles mismatch");
      const ChartSelection& chart = reg.charts.at(c);
      int m = reg.atoms_of(p);
      int N = chart.truncation;
      for (std::size_t i = 0; i < chart.pivots.size(); ++i) {
        PolyQ g = PolyQ::term(
            ring, block_mono(reg, p, slice_exponents(chart.pivots[i], m, N), N), Rat(1));
        for (std::size_t j = 0; j < chart.basis.size(); ++j) {
          Mono bm = block_mono(reg, p, slice_exponents(chart.basis[j], m, N), N);
          int pv = ring->var_index(reg.param_var(c, chart.param_index(static_cast<int>(i),
                                                                      static_cast<int>(j))));
          bm.e[pv] += 1;
          g = g.add(PolyQ::term(ring, bm, Rat(-1)), kGrevlex);
        }
        out.push_back(g);
      }
      return out;
    }
    case LinkKind::Pax:
      return diagonal_gens(reg, l.premises[0], l.conclusions[0], "pax " + l.id);
    case LinkKind::Ctr: {
      const std::string &a = l.premises[0], &b = l.premises[1], &c = l.conclusions[0];
      if (reg.params_of(a) != reg.params_of(c) || reg.params_of(b) != reg.params_of(c))
        throw ChartMismatchError("ctr " + l.id + ": premise/conclusion chart size mismatch");
      for (int k = 1; k <= reg.params_of(c); ++k) out.push_back(param_diagonal(reg, a, c, k));
      for (int k = 1; k <= reg.params_of(c); ++k) out.push_back(param_diagonal(reg, b, c, k));
      return out;
    }
    case LinkKind::Weak:
      out.push_back(PolyQ::constant(ring, Rat(1)));
      return out;
    case LinkKind::Prom:
    case LinkKind::Conc:
      return out;
  }
  return out;
}

using SliceRow = std::map<long, PolyQ>;

struct BoxChartResult {
  ChartSelection chart;
  /// alphas[i][j]: value of the chart parameter (pivot i, basis j) at the
  /// box's point, a polynomial in interior chart parameters.
  std::vector<std::vector<PolyQ>> alphas;
  std::vector<PolyQ> passthrough;  // pure-parameter relations of the interior
  RingPtr local_ring;
};

bool is_nonzero_constant(const PolyQ& p) { return !p.is_zero() && p.total_degree() == 0; }

/// Gauss-Jordan over k[params] with pivots restricted to unit (constant)
/// coefficients, pivot columns chosen grevlex-largest.
void gauss_jordan_rows(std::vector<SliceRow>& rows, const VariableRegistry& local,
                       const std::string& b_edge, int truncation,
                       std::vector<std::pair<long, int>>& pivots_out) {
  int mB = local.atoms_of(b_edge);
  auto col_mono = [&](long addr) {
    return block_mono(local, b_edge, slice_exponents(addr, mB, truncation), truncation);
  };
  std::set<int> pivoted;
  while (true) {
    int best_row = -1;
    long best_addr = -1;
    Mono best_mono;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (pivoted.count(r)) continue;
      long row_addr = -1;
      Mono row_mono;
      for (const auto& [addr, coef] : rows[r]) {
        if (!is_nonzero_constant(coef)) continue;
        Mono m = col_mono(addr);
        if (row_addr < 0 || kGrevlex.cmp(m, row_mono) > 0) {
          row_addr = addr;
          row_mono = m;
        }
      }
      if (row_addr < 0) continue;
      if (best_row < 0 || kGrevlex.cmp(row_mono, best_mono) > 0) {
        best_row = r;
        best_addr = row_addr;
        best_mono = row_mono;
      }
    }
    if (best_row < 0) break;
    pivoted.insert(best_row);
    pivots_out.push_back({best_addr, best_row});
    Rat c = rows[best_row].at(best_addr).terms().front().c;
    for (auto& [addr, coef] : rows[best_row]) coef = coef.mul_scalar(c.inv());
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == best_row) continue;
      auto it = rows[r].find(best_addr);
      if (it == rows[r].end()) continue;
      PolyQ q = it->second;
      for (const auto& [addr, coef] : rows[best_row]) {
        PolyQ& target = rows[r][addr];
        if (target.ring() == nullptr) target = PolyQ::zero(local.ring);
        target = target.sub(q.mul(coef, kGrevlex), kGrevlex);
      }
      for (auto jt = rows[r].begin(); jt != rows[r].end();)
        jt = jt->second.is_zero() ? rows[r].erase(jt) : std::next(jt);
    }
  }
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    if (!pivoted.count(r) && !rows[r].empty())
      throw DegenerateSliceError("box slice row for " + b_edge +
                                 " has no unit coefficient; the truncated chart does not "
                                 "determine a point");
}

ChartSelection default_chart(int atoms, int truncation) {
  ChartSelection c;
  c.truncation = truncation;
  long size = slice_size(atoms, truncation);
  long pivot = static_cast<long>(truncation) * (size / (truncation + 1));
  c.pivots = {pivot};
  for (long a = 0; a < size; ++a)
    if (a != pivot) c.basis.push_back(a);
  return c;
}

struct Plan {
  std::map<std::string, int> shape_atoms_of;       // all edges
  std::map<std::string, bool> exponential;         // all edges
  std::map<std::string, std::string> family_root;  // exponential edge -> root
  std::map<std::string, ChartSelection> family_chart;  // root -> chart
  std::map<std::string, BoxChartResult> box_result;    // prom link id -> chart data
};

BoxChartResult chart_for_box_impl(const ProofNet& net, const Box& box, const Plan& plan,
                                  const InterpretOptions& opts) {
  ProofNet interior = box_interior_net(net, box);
  const Link& prom = net.links.at(box.prom);
  const std::string& b_edge = prom.premises[0];
  int N = opts.truncation;

  // Local registry over the interior edges, with interior exponential edges
  // carrying their (already resolved) family charts.
  std::vector<std::pair<std::string, int>> linear_edges;
  std::map<std::string, ChartSelection> charts;
  for (const auto& [id, e] : interior.edges) {
    if (plan.exponential.at(id)) {
      auto it = plan.family_chart.find(plan.family_root.at(id));
      if (it == plan.family_chart.end())
        throw ChartMismatchError("box " + box.prom + ": interior edge " + id +
                                 " has an unresolved chart family");
      charts[id] = it->second;
    } else {
      linear_edges.push_back({id, plan.shape_atoms_of.at(id)});
    }
  }
  VariableRegistry local = make_registry(linear_edges, charts, N);

  std::vector<PolyQ> gens;
  for (const auto& [id, l] : interior.links) {
    if (l.kind == LinkKind::Prom || l.kind == LinkKind::Pax || l.kind == LinkKind::Weak)
      throw NotPreNearlyLinearError("box " + box.prom + ": " + kind_name(l.kind) +
                                    " inside interior");
    for (auto& g : emit_link_gens(l, local)) gens.push_back(std::move(g));
  }
  std::vector<PolyQ> dehom = dehomogenize_by_name(gens);

  std::vector<std::string> keep;
  int mB = local.atoms_of(b_edge);
  for (int t = 1; t <= mB; ++t) keep.push_back(local.atom_var(b_edge, t, false));
  for (const auto& v : local.vars)
    if (v.cls == VarClass::ChartParameter) keep.push_back(v.name);
  std::vector<PolyQ> elim = eliminate(dehom, keep, kGrevlex, opts.groebner);

  std::vector<int> b_idx;
  for (int t = 1; t <= mB; ++t)
    b_idx.push_back(local.ring->var_index(local.atom_var(b_edge, t, false)));

  BoxChartResult res;
  res.local_ring = local.ring;
  std::vector<SliceRow> rows;
  for (const auto& g : elim) {
    bool touches_b = false, sliceable = true;
    for (const auto& term : g.terms())
      for (int idx : b_idx) {
        if (term.m.e[idx] > 0) touches_b = true;
        if (term.m.e[idx] > N) sliceable = false;
      }
    if (!touches_b) {
      res.passthrough.push_back(g);
      continue;
    }
    if (!sliceable) continue;  // beyond the truncated slice; not chart data
    SliceRow row;
    for (const auto& term : g.terms()) {
      std::vector<int> exps;
      Mono rest = term.m;
      for (int idx : b_idx) {
        exps.push_back(rest.e[idx]);
        rest.e[idx] = 0;
      }
      // Chart slots are labelled in the orientation of the consuming ?-edges,
      // whose underlying formula is the dual of the box conclusion.  Duality
      // reverses the atom order, so the slice cell for a body monomial is
      // addressed by the reversed exponent vector; dereliction and parameter
      // diagonals can then address the shared chart directly.
      std::reverse(exps.begin(), exps.end());
      long addr = slice_address(exps, N);
      PolyQ& cell = row[addr];
      if (cell.ring() == nullptr) cell = PolyQ::zero(local.ring);
      cell = cell.add(PolyQ::term(local.ring, rest, term.c), kGrevlex);
    }
    for (auto it = row.begin(); it != row.end();)
      it = it->second.is_zero() ? row.erase(it) : std::next(it);
    if (!row.empty()) rows.push_back(std::move(row));
  }

  std::vector<std::pair<long, int>> pivots;
  gauss_jordan_rows(rows, local, b_edge, N, pivots);
  std::sort(pivots.begin(), pivots.end());

  res.chart.truncation = N;
  std::set<long> pivot_set;
  for (const auto& [addr, r] : pivots) {
    res.chart.pivots.push_back(addr);
    pivot_set.insert(addr);
  }
  for (long a = 0; a < slice_size(mB, N); ++a)
    if (!pivot_set.count(a)) res.chart.basis.push_back(a);

  for (const auto& [addr, r] : pivots) {
    std::vector<PolyQ> alpha;
    for (long b : res.chart.basis) {
      auto it = rows[r].find(b);
      alpha.push_back(it == rows[r].end() ? PolyQ::zero(local.ring)
                                          : -it->second);
    }
    res.alphas.push_back(std::move(alpha));
  }
  return res;
}

Plan make_plan(const ProofNet& net, const InterpretOptions& opts) {
  Plan plan;
  for (const auto& [id, e] : net.edges) {
    plan.exponential[id] = exponential_formula(e.formula);
    plan.shape_atoms_of[id] = shape_atoms(e.formula);
  }

  UnionFind uf;
  for (const auto& [id, e] : net.edges)
    if (plan.exponential.at(id)) uf.ensure(id);
  auto both_exp = [&](const std::string& a, const std::string& b) {
    return plan.exponential.at(a) && plan.exponential.at(b);
  };
  for (const auto& [id, l] : net.links) {
    switch (l.kind) {
      case LinkKind::Ctr:
        uf.unite(l.premises[0], l.premises[1]);
        uf.unite(l.premises[0], l.conclusions[0]);
        break;
      case LinkKind::Pax:
        uf.unite(l.premises[0], l.conclusions[0]);
        break;
      case LinkKind::Cut:
        if (both_exp(l.premises[0], l.premises[1])) uf.unite(l.premises[0], l.premises[1]);
        break;
      case LinkKind::Ax:
        if (both_exp(l.conclusions[0], l.conclusions[1]))
          uf.unite(l.conclusions[0], l.conclusions[1]);
        break;
      default:
        break;
    }
  }
  std::map<std::string, int> family_atoms;
  for (const auto& [id, e] : net.edges) {
    if (!plan.exponential.at(id)) continue;
    std::string root = uf.find(id);
    plan.family_root[id] = root;
    auto [it, fresh] = family_atoms.emplace(root, plan.shape_atoms_of.at(id));
    if (!fresh && it->second != plan.shape_atoms_of.at(id))
      throw ChartMismatchError("edges " + root + " and " + id +
                               " share a chart family but differ in atom count");
  }

  // Boxes per family, and the family dependencies their charts need.
  std::map<std::string, std::vector<const Box*>> fam_boxes;
  std::map<std::string, std::set<std::string>> deps;
  for (const auto& box : net.boxes) {
    const Link& prom = net.links.at(box.prom);
    std::string root = plan.family_root.at(prom.conclusions[0]);
    fam_boxes[root].push_back(&box);
    for (const auto& link_id : box.interior) {
      const Link& l = net.links.at(link_id);
      auto visit = [&](const std::string& e) {
        if (!plan.exponential.at(e)) return;
        std::string dep = plan.family_root.at(e);
        if (dep == root)
          throw ChartMismatchError("box " + box.prom +
                                   ": chart would depend on its own family (edge " + e + ")");
        deps[root].insert(dep);
      };
      for (const auto& e : l.premises) visit(e);
      for (const auto& e : l.conclusions) visit(e);
    }
  }

  std::set<std::string> unresolved;
  for (const auto& [root, atoms] : family_atoms) unresolved.insert(root);
  while (!unresolved.empty()) {
    bool progress = false;
    for (auto it = unresolved.begin(); it != unresolved.end();) {
      const std::string& root = *it;
      bool ready = true;
      for (const auto& dep : deps[root])
        if (unresolved.count(dep)) ready = false;
      if (!ready) {
        ++it;
        continue;
      }
      auto boxes = fam_boxes.find(root);
      if (boxes == fam_boxes.end()) {
        plan.family_chart[root] = default_chart(family_atoms.at(root), opts.truncation);
      } else {
        std::vector<const Box*> sorted = boxes->second;
        std::sort(sorted.begin(), sorted.end(),
                  [](const Box* a, const Box* b) { return a->prom < b->prom; });
        for (const Box* box : sorted) {
          BoxChartResult r = chart_for_box_impl(net, *box, plan, opts);
          auto prev = plan.family_chart.find(root);
          if (prev == plan.family_chart.end()) {
            plan.family_chart[root] = r.chart;
          } else if (prev->second.pivots != r.chart.pivots ||
                     prev->second.truncation != r.chart.truncation) {
            throw ChartMismatchError("boxes of family " + root +
                                     " disagree on the chart pivot set");
          }
          plan.box_result.emplace(box->prom, std::move(r));
        }
      }
      it = unresolved.erase(it);
      progress = true;
    }
    if (!progress)
      throw ChartMismatchError("cyclic chart dependency between boxes; no chart order exists");
  }
  return plan;
}

}  // namespace

Interpretation build_interpretation(const ProofNet& net, const InterpretOptions& opts) {
  Plan plan = make_plan(net, opts);

  std::vector<std::pair<std::string, int>> linear_edges;
  std::map<std::string, ChartSelection> charts;
  for (const auto& [id, e] : net.edges) {
    if (plan.exponential.at(id))
      charts[id] = plan.family_chart.at(plan.family_root.at(id));
    else
      linear_edges.push_back({id, plan.shape_atoms_of.at(id)});
  }

  Interpretation out;
  out.registry = make_registry(linear_edges, charts, opts.truncation);

  std::map<std::string, int> family_ids;
  for (const auto& [edge, root] : plan.family_root) family_ids.emplace(root, 0);
  int fid = 0;
  for (auto& [root, id] : family_ids) id = fid++;
  for (const auto& [edge, root] : plan.family_root) out.family_of[edge] = family_ids.at(root);

  for (const auto& [id, l] : net.links) {
    std::vector<PolyQ> gens;
    if (l.kind == LinkKind::Prom) {
      auto it = plan.box_result.find(id);
      if (it == plan.box_result.end())
        throw NetFormatError("promotion " + id + " has no box record");
      const BoxChartResult& r = it->second;
      const std::string& bang = l.conclusions[0];
      const ChartSelection& chart = out.registry.charts.at(bang);
      for (std::size_t i = 0; i < chart.pivots.size(); ++i)
        for (std::size_t j = 0; j < chart.basis.size(); ++j) {
          int idx = out.registry.ring->var_index(out.registry.param_var(
              bang, chart.param_index(static_cast<int>(i), static_cast<int>(j))));
          PolyQ g = PolyQ::variable(out.registry.ring, idx)
                        .sub(map_by_name(r.alphas[i][j], out.registry.ring), kGrevlex);
          gens.push_back(g);
        }
      for (const auto& p : r.passthrough) gens.push_back(map_by_name(p, out.registry.ring));
      BoxInfo info;
      info.prom = id;
      info.bang_edge = bang;
      info.chart = chart;
      info.prom_gens = gens;
      out.box_info.push_back(info);
    } else {
      gens = emit_link_gens(l, out.registry);
    }
    for (const auto& g : gens) out.gens.push_back(g);
    out.link_gens[id] = std::move(gens);
  }
  return out;
}

VariableRegistry build_registry(const ProofNet& net, const InterpretOptions& opts) {
  return build_interpretation(net, opts).registry;
}

ChartSelection chart_for_box(const ProofNet& net, const Box& box, const InterpretOptions& opts) {
  Plan plan = make_plan(net, opts);
  auto it = plan.box_result.find(box.prom);
  if (it == plan.box_result.end()) throw NetFormatError("box " + box.prom + " not found");
  return it->second.chart;
}

std::vector<PolyQ> link_ideal(const ProofNet& net, const std::string& link_id,
                              const InterpretOptions& opts) {
  Interpretation interp = build_interpretation(net, opts);
  auto it = interp.link_gens.find(link_id);
  if (it == interp.link_gens.end()) throw NetFormatError("no link " + link_id);
  return it->second;
}

std::pair<IdealQ, VariableRegistry> net_ideal(const ProofNet& net, const InterpretOptions& opts) {
  Interpretation interp = build_interpretation(net, opts);
  return {IdealQ(interp.registry.ring, interp.gens), interp.registry};
}

}  // namespace netideal
