#include "netideal/semantics.hpp"

#include <algorithm>
#include <set>

namespace netideal {

namespace {
const MonomialOrder kGrevlex = MonomialOrder::grevlex();

PolyQ rename_into(const PolyQ& p, const RingPtr& target,
                  const std::map<std::string, std::string>& name_map) {
  std::vector<int> idx(p.ring()->nvars(), -1);
  for (std::size_t i = 0; i < p.ring()->nvars(); ++i) {
    const std::string& name = p.ring()->var_name(i);
    auto it = name_map.find(name);
    idx[i] = target->var_index(it == name_map.end() ? name : it->second);
  }
  return p.map_ring(target, idx, kGrevlex);
}
}  // namespace

std::vector<std::string> conclusion_vars(const ProofNet& net, const VariableRegistry& reg) {
  std::set<std::string> edges;
  for (const auto& [id, l] : net.links)
    if (l.kind == LinkKind::Conc) edges.insert(l.premises[0]);
  std::vector<std::string> out;
  for (const auto& v : reg.vars) {
    if (!edges.count(v.edge)) continue;
    if (v.cls == VarClass::PrimedAtom) continue;
    out.push_back(v.name);
  }
  return out;
}

NormalSemantics normal_semantics(const ProofNet& net, const InterpretOptions& opts) {
  Interpretation interp = build_interpretation(net, opts);
  NormalSemantics out;
  out.registry = interp.registry;
  out.conclusion_vars = conclusion_vars(net, interp.registry);
  std::vector<PolyQ> dehom = dehomogenize_by_name(interp.gens);
  out.basis = eliminate(dehom, out.conclusion_vars, kGrevlex, opts.groebner);
  out.empty = !out.basis.empty() && out.basis.front().total_degree() == 0;
  return out;
}

PolyQ church_power(int n, const InterpretOptions& opts) {
  ProofNet net = church(n);
  Interpretation interp = build_interpretation(net, opts);
  const VariableRegistry& reg = interp.registry;
  RingPtr ring = reg.ring;

  std::string x_var, z_var, phi_var;
  if (n == 0) {
    std::string c = net.conclusions().at(0);
    x_var = reg.atom_var(c, 1, false);
    z_var = reg.atom_var(c, 2, false);
  } else {
    for (const auto& e : net.conclusions()) {
      const FormulaPtr& f = net.edges.at(e).formula;
      if (f->kind == Formula::Kind::Quest)
        phi_var = reg.param_var(e, 2);
      else if (f->kind == Formula::Kind::Atom && f->negated)
        z_var = reg.atom_var(e, 1, false);
      else if (f->kind == Formula::Kind::Atom)
        x_var = reg.atom_var(e, 1, false);
    }
    if (x_var.empty() || z_var.empty() || phi_var.empty())
      throw ShapeMismatchError("church(" + std::to_string(n) +
                               "): conclusions are not (input atom, output atom, ?-edge)");
  }

  // Restrict to the numeral line: every chart parameter except the second
  // coordinate of each block is set to zero.
  std::vector<PolyQ> gens = dehomogenize_by_name(interp.gens);
  for (const auto& v : reg.vars) {
    if (v.cls != VarClass::ChartParameter || v.index == 2) continue;
    int idx = ring->var_index(v.name);
    for (auto& g : gens) g = g.substitute(idx, PolyQ::zero(ring), kGrevlex);
  }

  std::vector<std::string> keep = {z_var, x_var};
  if (!phi_var.empty()) keep.push_back(phi_var);
  std::vector<PolyQ> basis = eliminate(gens, keep, kGrevlex, opts.groebner);
  if (basis.size() != 1)
    throw ShapeMismatchError("church(" + std::to_string(n) + "): expected one relation, got " +
                             std::to_string(basis.size()));

  PolyQ expected = PolyQ::variable(ring, ring->var_index(x_var));
  Mono zm = Mono::unit(ring->nvars());
  zm.e[ring->var_index(z_var)] = 1;
  if (n > 0) zm.e[ring->var_index(phi_var)] = n;
  expected = expected.add(PolyQ::term(ring, zm, Rat(-1)), kGrevlex);

  if (basis.front().monic(kGrevlex) != expected.monic(kGrevlex))
    throw ShapeMismatchError("church(" + std::to_string(n) +
                             "): relation is not x - phi^n z");
  return expected;
}

InvarianceReport check_invariance(const ProofNet& before, const ProofNet& after,
                                  const InterpretOptions& opts) {
  InvarianceReport rep;
  NormalSemantics a = normal_semantics(before, opts);
  NormalSemantics b = normal_semantics(after, opts);
  rep.conclusion_vars_before = a.conclusion_vars;
  rep.conclusion_vars_after = b.conclusion_vars;
  rep.basis_before = a.basis;

  // Pair conclusion edges through the Conc link ids, which every reduction
  // keeps fixed, then rename the after-variables backward.
  std::map<std::string, std::string> edge_pair;  // after edge -> before edge
  for (const auto& [id, l] : after.links) {
    if (l.kind != LinkKind::Conc) continue;
    auto it = before.links.find(id);
    if (it == before.links.end() || it->second.kind != LinkKind::Conc) {
      rep.detail = "conclusion link " + id + " missing in the original net";
      return rep;
    }
    edge_pair[l.premises[0]] = it->second.premises[0];
  }
  for (const auto& [id, l] : before.links)
    if (l.kind == LinkKind::Conc && !after.links.count(id)) {
      rep.detail = "conclusion link " + id + " missing in the reduced net";
      return rep;
    }

  std::map<std::string, std::string> name_map;  // after var -> before var
  for (const auto& [ea, eb] : edge_pair) {
    bool exp_a = b.registry.is_exponential_edge(ea);
    if (exp_a != a.registry.is_exponential_edge(eb)) {
      rep.detail = "conclusion edge " + ea + " changed between linear and exponential";
      return rep;
    }
    if (exp_a) {
      if (b.registry.params_of(ea) != a.registry.params_of(eb)) {
        rep.detail = "conclusion edge " + ea + " changed chart parameter count";
        return rep;
      }
      for (int k = 1; k <= b.registry.params_of(ea); ++k)
        name_map[b.registry.param_var(ea, k)] = a.registry.param_var(eb, k);
    } else {
      if (b.registry.atoms_of(ea) != a.registry.atoms_of(eb)) {
        rep.detail = "conclusion edge " + ea + " changed atom count";
        return rep;
      }
      for (int t = 1; t <= b.registry.atoms_of(ea); ++t)
        name_map[b.registry.atom_var(ea, t, false)] = a.registry.atom_var(eb, t, false);
    }
  }

  std::set<std::string> renamed;
  for (const auto& v : b.conclusion_vars) {
    auto it = name_map.find(v);
    renamed.insert(it == name_map.end() ? v : it->second);
  }
  rep.variable_sets_match =
      renamed == std::set<std::string>(a.conclusion_vars.begin(), a.conclusion_vars.end());
  if (!rep.variable_sets_match) {
    rep.detail = "conclusion variable sets differ";
    return rep;
  }

  for (const auto& g : b.basis) rep.basis_after.push_back(rename_into(g, a.registry.ring, name_map));
  rep.ok = ideal_equal(rep.basis_before, rep.basis_after, kGrevlex, opts.groebner);
  if (!rep.ok) rep.detail = "eliminated conclusion ideals differ";
  return rep;
}

InvarianceReport check_invariance(const ProofNet& before, const ReduceResult& step,
                                  const InterpretOptions& opts) {
  return check_invariance(before, step.net, opts);
}

InvarianceReport check_invariance(const ProofNet& before, const NormalizeResult& trace,
                                  const InterpretOptions& opts) {
  return check_invariance(before, trace.net, opts);
}

}  // namespace netideal
