#include "netideal/reduction.hpp"

#include <algorithm>
#include <set>

namespace netideal {

const char* redex_kind_name(RedexKind k) {
  switch (k) {
    case RedexKind::AxCut: return "AxCut";
    case RedexKind::TensorPar: return "TensorPar";
    case RedexKind::BangQuest: return "BangQuest";
    case RedexKind::WeakBang: return "WeakBang";
    case RedexKind::CtrBang: return "CtrBang";
    case RedexKind::PromPax: return "PromPax";
  }
  return "?";
}

std::optional<RedexKind> redex_kind_from_name(const std::string& name) {
  for (RedexKind k : {RedexKind::AxCut, RedexKind::TensorPar, RedexKind::BangQuest,
                      RedexKind::WeakBang, RedexKind::CtrBang, RedexKind::PromPax})
    if (name == redex_kind_name(k)) return k;
  return std::nullopt;
}

namespace {

long formula_size(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Atom: return 1;
    case Formula::Kind::Tensor:
    case Formula::Kind::Par: return 1 + formula_size(f->left) + formula_size(f->right);
    case Formula::Kind::Bang:
    case Formula::Kind::Quest: return 1 + formula_size(f->left);
  }
  return 1;
}

/// Erases a link and scrubs it from every box record.
void drop_link(ProofNet& net, const std::string& id) {
  net.links.erase(id);
  for (auto& b : net.boxes) {
    b.pax.erase(std::remove(b.pax.begin(), b.pax.end(), id), b.pax.end());
    b.interior.erase(std::remove(b.interior.begin(), b.interior.end(), id), b.interior.end());
  }
}

void drop_box_of(ProofNet& net, const std::string& prom_id) {
  net.boxes.erase(std::remove_if(net.boxes.begin(), net.boxes.end(),
                                 [&](const Box& b) { return b.prom == prom_id; }),
                  net.boxes.end());
}

void rename_edge_refs(ProofNet& net, const std::string& from, const std::string& to) {
  for (auto& [id, l] : net.links) {
    for (auto& e : l.premises)
      if (e == from) e = to;
    for (auto& e : l.conclusions)
      if (e == from) e = to;
  }
}

void rename_premise_refs(ProofNet& net, const std::string& from, const std::string& to) {
  for (auto& [id, l] : net.links)
    for (auto& e : l.premises)
      if (e == from) e = to;
}

std::string fresh_edge_id(const ProofNet& net, std::string base) {
  while (net.edges.count(base)) base += "x";
  return base;
}

std::string fresh_link_id(const ProofNet& net, std::string base) {
  while (net.links.count(base)) base += "x";
  return base;
}

void add_cut(ProofNet& net, const std::string& id, const std::string& p1, const std::string& p2,
             const std::string& interior_of) {
  Link cut;
  cut.id = fresh_link_id(net, id);
  cut.kind = LinkKind::Cut;
  cut.premises = {p1, p2};
  net.links[cut.id] = cut;
  if (!interior_of.empty())
    for (auto& b : net.boxes)
      if (b.prom == interior_of) b.interior.push_back(cut.id);
}

ReduceResult reduce_ax_cut(const ProofNet& net, const Link& cut) {
  std::string p = cut.premises[0], q = cut.premises[1];
  const Link* pprod = net.producer_of(p);
  if (!pprod || pprod->kind != LinkKind::Ax) {
    std::swap(p, q);
    pprod = net.producer_of(p);
  }
  const Link ax = *pprod;

  ReduceResult res;
  res.redex = {cut.id, RedexKind::AxCut};
  res.links = {cut.id, ax.id};
  res.net = net;
  drop_link(res.net, ax.id);
  drop_link(res.net, cut.id);

  bool degenerate = (ax.conclusions[0] == p && ax.conclusions[1] == q) ||
                    (ax.conclusions[0] == q && ax.conclusions[1] == p);
  if (degenerate) {
    res.net.edges.erase(p);
    res.net.edges.erase(q);
    res.corr.forward[p] = std::nullopt;
    res.corr.forward[q] = std::nullopt;
    return res;
  }

  std::string o = ax.conclusions[0] == p ? ax.conclusions[1] : ax.conclusions[0];
  std::string merged = fresh_edge_id(res.net, o + "." + q);
  FormulaPtr f = net.edges.at(q).formula;
  res.net.edges.erase(o);
  res.net.edges.erase(p);
  res.net.edges.erase(q);
  res.net.edges[merged] = {merged, f};
  rename_edge_refs(res.net, o, merged);  // o's consumer picks up the merge
  rename_edge_refs(res.net, q, merged);  // q's producer picks up the merge
  res.corr.forward[o] = merged;
  res.corr.forward[p] = merged;
  res.corr.forward[q] = merged;
  res.corr.backward[merged] = q;
  return res;
}

ReduceResult reduce_tensor_par(const ProofNet& net, const Link& cut) {
  std::string f = cut.premises[0], g = cut.premises[1];
  if (net.producer_of(f)->kind != LinkKind::Tensor) std::swap(f, g);
  const Link tens = *net.producer_of(f);
  const Link par = *net.producer_of(g);

  ReduceResult res;
  res.redex = {cut.id, RedexKind::TensorPar};
  res.links = {cut.id, tens.id, par.id};
  res.net = net;
  std::string interior_of;
  if (const Box* bx = net.box_of_link(cut.id)) interior_of = bx->prom;
  drop_link(res.net, tens.id);
  drop_link(res.net, par.id);
  drop_link(res.net, cut.id);
  res.net.edges.erase(f);
  res.net.edges.erase(g);
  add_cut(res.net, cut.id + ".1", tens.premises[1], par.premises[0], interior_of);
  add_cut(res.net, cut.id + ".2", tens.premises[0], par.premises[1], interior_of);
  res.corr.forward[f] = std::nullopt;
  res.corr.forward[g] = std::nullopt;
  return res;
}

ReduceResult reduce_bang_quest(const ProofNet& net, const Link& cut) {
  std::string d = cut.premises[0], f = cut.premises[1];
  if (net.producer_of(d)->kind != LinkKind::Der) std::swap(d, f);
  const Link der = *net.producer_of(d);
  const Link prom = *net.producer_of(f);
  const Box* bx = net.box_of_prom(prom.id);
  if (!bx) throw StaleRedexError("promotion " + prom.id + " has no box record");
  const Box box = *bx;

  ReduceResult res;
  res.redex = {cut.id, RedexKind::BangQuest};
  res.links = {cut.id, der.id, prom.id};
  std::vector<std::string> paxes(box.pax);
  std::sort(paxes.begin(), paxes.end());
  res.links.insert(res.links.end(), paxes.begin(), paxes.end());

  res.net = net;
  for (const auto& pax_id : paxes) {
    const Link pax = net.links.at(pax_id);
    std::string c = pax.premises[0], g = pax.conclusions[0];
    drop_link(res.net, pax_id);
    res.net.edges.erase(c);
    rename_edge_refs(res.net, c, g);  // interior producer now feeds the outside edge
    res.corr.forward[c] = g;
    res.corr.backward[g] = c;
  }
  drop_link(res.net, der.id);
  drop_link(res.net, prom.id);
  drop_link(res.net, cut.id);
  drop_box_of(res.net, prom.id);
  res.net.edges.erase(d);
  res.net.edges.erase(f);
  add_cut(res.net, cut.id + ".1", der.premises[0], prom.premises[0], "");
  res.corr.forward[d] = std::nullopt;
  res.corr.forward[f] = std::nullopt;
  return res;
}

ReduceResult reduce_weak_bang(const ProofNet& net, const Link& cut) {
  std::string w = cut.premises[0], f = cut.premises[1];
  if (net.producer_of(w)->kind != LinkKind::Weak) std::swap(w, f);
  const Link weak = *net.producer_of(w);
  const Link prom = *net.producer_of(f);
  const Box* bx = net.box_of_prom(prom.id);
  if (!bx) throw StaleRedexError("promotion " + prom.id + " has no box record");
  const Box box = *bx;

  ReduceResult res;
  res.redex = {cut.id, RedexKind::WeakBang};
  res.links = {cut.id, weak.id, prom.id};
  std::vector<std::string> paxes(box.pax);
  std::sort(paxes.begin(), paxes.end());
  res.links.insert(res.links.end(), paxes.begin(), paxes.end());

  res.net = net;
  std::set<std::string> interior_edges = {w, f};
  interior_edges.insert(prom.premises[0]);
  for (const auto& id : box.interior) {
    const Link& l = net.links.at(id);
    for (const auto& e : l.premises) interior_edges.insert(e);
    for (const auto& e : l.conclusions) interior_edges.insert(e);
  }
  for (const auto& pax_id : paxes) {
    const Link pax = net.links.at(pax_id);
    interior_edges.insert(pax.premises[0]);
    Link nw;
    nw.id = fresh_link_id(res.net, pax_id + ".w");
    nw.kind = LinkKind::Weak;
    nw.conclusions = {pax.conclusions[0]};
    drop_link(res.net, pax_id);
    res.net.links[nw.id] = nw;
  }
  drop_link(res.net, weak.id);
  drop_link(res.net, prom.id);
  drop_link(res.net, cut.id);
  for (const auto& id : box.interior) drop_link(res.net, id);
  drop_box_of(res.net, prom.id);
  for (const auto& e : interior_edges) {
    res.net.edges.erase(e);
    res.corr.forward[e] = std::nullopt;
  }
  return res;
}

ReduceResult reduce_ctr_bang(const ProofNet& net, const Link& cut, int step) {
  std::string cf = cut.premises[0], g = cut.premises[1];
  if (net.producer_of(cf)->kind != LinkKind::Ctr) std::swap(cf, g);
  const Link ctr = *net.producer_of(cf);
  const Link prom = *net.producer_of(g);
  const Box* bx = net.box_of_prom(prom.id);
  if (!bx) throw StaleRedexError("promotion " + prom.id + " has no box record");
  const Box box = *bx;

  ReduceResult res;
  res.redex = {cut.id, RedexKind::CtrBang};
  res.links = {cut.id, ctr.id, prom.id};
  std::vector<std::string> paxes(box.pax);
  std::sort(paxes.begin(), paxes.end());
  res.links.insert(res.links.end(), paxes.begin(), paxes.end());

  res.net = net;
  const std::string suffix = ".R" + std::to_string(step);
  std::vector<std::string> scope_links = {prom.id};
  scope_links.insert(scope_links.end(), box.pax.begin(), box.pax.end());
  scope_links.insert(scope_links.end(), box.interior.begin(), box.interior.end());
  std::set<std::string> scope_edges;
  for (const auto& id : scope_links) {
    const Link& l = net.links.at(id);
    for (const auto& e : l.premises) scope_edges.insert(e);
    for (const auto& e : l.conclusions) scope_edges.insert(e);
  }
  std::map<std::string, std::string> edge_copy, link_copy;
  for (const auto& e : scope_edges) edge_copy[e] = fresh_edge_id(res.net, e + suffix);
  for (const auto& id : scope_links) link_copy[id] = fresh_link_id(res.net, id + suffix);
  for (const auto& e : scope_edges) {
    Edge ne = net.edges.at(e);
    ne.id = edge_copy[e];
    res.net.edges[ne.id] = ne;
    res.corr.backward[ne.id] = std::nullopt;
    res.corr.clone_of[ne.id] = e;
  }
  for (const auto& id : scope_links) {
    Link nl = net.links.at(id);
    nl.id = link_copy[id];
    for (auto& e : nl.premises) e = edge_copy.at(e);
    for (auto& e : nl.conclusions) e = edge_copy.at(e);
    res.net.links[nl.id] = nl;
  }
  Box rbox;
  rbox.prom = link_copy[prom.id];
  for (const auto& p : box.pax) rbox.pax.push_back(link_copy[p]);
  for (const auto& i : box.interior) rbox.interior.push_back(link_copy[i]);
  res.net.boxes.push_back(rbox);

  drop_link(res.net, ctr.id);
  drop_link(res.net, cut.id);
  res.net.edges.erase(cf);
  add_cut(res.net, cut.id + ".1", ctr.premises[0], g, "");
  add_cut(res.net, cut.id + ".2", ctr.premises[1], edge_copy.at(g), "");
  res.corr.forward[cf] = g;

  // The context contracted the two copies of each Pax conclusion.
  for (const auto& pax_id : paxes) {
    const Link& pax = net.links.at(pax_id);
    const std::string& h = pax.conclusions[0];
    std::string hc = fresh_edge_id(res.net, h + ".c" + std::to_string(step));
    rename_premise_refs(res.net, h, hc);  // old consumer now reads the contraction
    res.net.edges[hc] = {hc, net.edges.at(h).formula};
    Link nc;
    nc.id = fresh_link_id(res.net, pax_id + ".c" + std::to_string(step));
    nc.kind = LinkKind::Ctr;
    nc.premises = {h, edge_copy.at(h)};
    nc.conclusions = {hc};
    res.net.links[nc.id] = nc;
    res.corr.backward[hc] = std::nullopt;
    res.corr.clone_of[hc] = h;
  }
  return res;
}

}  // namespace

std::optional<RedexKind> classify_redex(const ProofNet& net, const std::string& cut_id) {
  auto it = net.links.find(cut_id);
  if (it == net.links.end() || it->second.kind != LinkKind::Cut ||
      it->second.premises.size() != 2)
    return std::nullopt;
  const Link* a = net.producer_of(it->second.premises[0]);
  const Link* b = net.producer_of(it->second.premises[1]);
  if (!a || !b) return std::nullopt;
  if (a->kind == LinkKind::Ax || b->kind == LinkKind::Ax) return RedexKind::AxCut;
  auto pair = [&](LinkKind x, LinkKind y) {
    return (a->kind == x && b->kind == y) || (a->kind == y && b->kind == x);
  };
  if (pair(LinkKind::Tensor, LinkKind::Par)) return RedexKind::TensorPar;
  if (pair(LinkKind::Der, LinkKind::Prom)) return RedexKind::BangQuest;
  if (pair(LinkKind::Weak, LinkKind::Prom)) return RedexKind::WeakBang;
  if (pair(LinkKind::Ctr, LinkKind::Prom)) return RedexKind::CtrBang;
  if (pair(LinkKind::Pax, LinkKind::Prom)) return RedexKind::PromPax;
  return std::nullopt;
}

std::vector<Redex> find_redexes(const ProofNet& net) {
  std::vector<Redex> out;
  for (const auto& [id, l] : net.links) {
    if (l.kind != LinkKind::Cut) continue;
    if (auto k = classify_redex(net, id)) out.push_back({id, *k});
  }
  return out;  // map iteration is already sorted by id
}

ReduceResult reduce_step(const ProofNet& net, const std::string& cut_id, int step) {
  auto kind = classify_redex(net, cut_id);
  if (!kind) throw StaleRedexError("no redex at cut " + cut_id);
  const Link& cut = net.links.at(cut_id);
  switch (*kind) {
    case RedexKind::AxCut: return reduce_ax_cut(net, cut);
    case RedexKind::TensorPar: return reduce_tensor_par(net, cut);
    case RedexKind::BangQuest: return reduce_bang_quest(net, cut);
    case RedexKind::WeakBang: return reduce_weak_bang(net, cut);
    case RedexKind::CtrBang: return reduce_ctr_bang(net, cut, step);
    case RedexKind::PromPax:
      throw UnsupportedReductionError(
          "Prom/Pax commutation at " + cut_id +
          " requires nested boxes and is outside the shallow fragment");
  }
  throw StaleRedexError("no redex at cut " + cut_id);
}

NormalizeResult normalize(const ProofNet& net, const NormalizeOptions& opts) {
  NormalizeResult res;
  res.net = net;
  int step = 0, fuel = opts.fuel;
  while (true) {
    auto redexes = find_redexes(res.net);
    std::vector<Redex> usable;
    bool prom_pax = false;
    for (const auto& r : redexes) {
      if (r.kind == RedexKind::PromPax)
        prom_pax = true;
      else
        usable.push_back(r);
    }
    if (usable.empty()) {
      if (res.net.cut_count() == 0) break;
      if (prom_pax)
        throw NonShallowRequiredError(
            "cuts remain but every redex is a Prom/Pax commutation; "
            "eliminating them requires non-shallow nets");
      throw UnsupportedReductionError("cuts remain but no reduction rule applies");
    }
    if (fuel <= 0)
      throw FuelExhaustedError("fuel exhausted after " + std::to_string(step) + " steps");
    --fuel;
    ++step;
    Redex pick = usable.front();
    if (opts.strategy == Strategy::ByKindPriority)
      pick = *std::min_element(usable.begin(), usable.end(), [](const Redex& x, const Redex& y) {
        return std::make_pair(static_cast<int>(x.kind), x.cut) <
               std::make_pair(static_cast<int>(y.kind), y.cut);
      });
    ReduceResult rr = reduce_step(res.net, pick.cut, step);
    res.net = std::move(rr.net);
    res.trace.push_back({step, rr.redex, std::move(rr.links), std::move(rr.corr)});
    auto report = validate_shallow(res.net);
    if (!report.shallow)
      res.warnings.push_back("step " + std::to_string(step) + ": result not shallow: " +
                             report.violations[0].rule + " at " + report.violations[0].subject);
  }
  return res;
}

std::tuple<long, std::size_t, std::size_t> reduction_measure(const ProofNet& net) {
  long weight = 0;
  for (const auto& [id, l] : net.links)
    if (l.kind == LinkKind::Cut && !l.premises.empty()) {
      auto it = net.edges.find(l.premises[0]);
      if (it != net.edges.end()) weight += formula_size(it->second.formula);
    }
  return {weight, net.boxes.size(), net.links.size()};
}

}  // namespace netideal
