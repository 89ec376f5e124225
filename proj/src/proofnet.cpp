#include "netideal/proofnet.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "json.hpp"

namespace netideal {

const char* kind_name(LinkKind k) {
  switch (k) {
    case LinkKind::Ax: return "ax";
    case LinkKind::Cut: return "cut";
    case LinkKind::Tensor: return "tensor";
    case LinkKind::Par: return "par";
    case LinkKind::Der: return "der";
    case LinkKind::Prom: return "prom";
    case LinkKind::Pax: return "pax";
    case LinkKind::Ctr: return "ctr";
    case LinkKind::Weak: return "weak";
    case LinkKind::Conc: return "conc";
  }
  return "?";
}

std::optional<LinkKind> kind_from_name(const std::string& name) {
  static const std::map<std::string, LinkKind> table = {
      {"ax", LinkKind::Ax},   {"cut", LinkKind::Cut},   {"tensor", LinkKind::Tensor},
      {"par", LinkKind::Par}, {"der", LinkKind::Der},   {"prom", LinkKind::Prom},
      {"pax", LinkKind::Pax}, {"ctr", LinkKind::Ctr},   {"weak", LinkKind::Weak},
      {"conc", LinkKind::Conc}};
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

const Link* ProofNet::producer_of(const std::string& edge_id) const {
  for (const auto& [id, l] : links)
    for (const auto& c : l.conclusions)
      if (c == edge_id) return &l;
  return nullptr;
}

const Link* ProofNet::consumer_of(const std::string& edge_id) const {
  for (const auto& [id, l] : links)
    for (const auto& p : l.premises)
      if (p == edge_id) return &l;
  return nullptr;
}

const Box* ProofNet::box_of_prom(const std::string& prom_link_id) const {
  for (const auto& b : boxes)
    if (b.prom == prom_link_id) return &b;
  return nullptr;
}

const Box* ProofNet::box_of_link(const std::string& link_id) const {
  for (const auto& b : boxes) {
    if (b.prom == link_id) return &b;
    if (std::find(b.pax.begin(), b.pax.end(), link_id) != b.pax.end()) return &b;
    if (std::find(b.interior.begin(), b.interior.end(), link_id) != b.interior.end()) return &b;
  }
  return nullptr;
}

std::vector<std::string> ProofNet::conclusions() const {
  std::vector<std::string> out;
  for (const auto& [id, l] : links)
    if (l.kind == LinkKind::Conc)
      for (const auto& p : l.premises) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ProofNet::cut_count() const {
  std::size_t n = 0;
  for (const auto& [id, l] : links)
    if (l.kind == LinkKind::Cut) ++n;
  return n;
}

ProofNet net_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw NetFormatError(std::string("net: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw NetFormatError("net: top level must be an object");

  ProofNet net;
  for (const auto& je : j.value("edges", nlohmann::json::array())) {
    if (!je.is_object() || !je.contains("id") || !je.contains("formula"))
      throw NetFormatError("net: edge entries need id and formula");
    Edge e;
    e.id = je["id"].get<std::string>();
    std::string err;
    auto f = parse_formula(je["formula"].get<std::string>(), &err);
    if (!f) throw NetFormatError("net: edge " + e.id + ": " + err);
    e.formula = *f;
    if (!net.edges.emplace(e.id, e).second)
      throw NetFormatError("net: duplicate edge id " + e.id);
  }
  for (const auto& jl : j.value("links", nlohmann::json::array())) {
    if (!jl.is_object() || !jl.contains("id") || !jl.contains("kind"))
      throw NetFormatError("net: link entries need id and kind");
    Link l;
    l.id = jl["id"].get<std::string>();
    auto k = kind_from_name(jl["kind"].get<std::string>());
    if (!k) throw NetFormatError("net: link " + l.id + ": unknown kind");
    l.kind = *k;
    for (const auto& p : jl.value("premises", nlohmann::json::array()))
      l.premises.push_back(p.get<std::string>());
    for (const auto& c : jl.value("conclusions", nlohmann::json::array()))
      l.conclusions.push_back(c.get<std::string>());
    for (const auto& e : l.premises)
      if (!net.edges.count(e)) throw NetFormatError("net: link " + l.id + ": unknown edge " + e);
    for (const auto& e : l.conclusions)
      if (!net.edges.count(e)) throw NetFormatError("net: link " + l.id + ": unknown edge " + e);
    if (!net.links.emplace(l.id, l).second)
      throw NetFormatError("net: duplicate link id " + l.id);
  }
  for (const auto& jb : j.value("boxes", nlohmann::json::array())) {
    if (!jb.is_object() || !jb.contains("prom"))
      throw NetFormatError("net: box entries need a prom link id");
    Box b;
    b.prom = jb["prom"].get<std::string>();
    for (const auto& p : jb.value("pax", nlohmann::json::array()))
      b.pax.push_back(p.get<std::string>());
    for (const auto& i : jb.value("interior", nlohmann::json::array()))
      b.interior.push_back(i.get<std::string>());
    for (const auto& id : b.pax)
      if (!net.links.count(id)) throw NetFormatError("net: box: unknown link " + id);
    for (const auto& id : b.interior)
      if (!net.links.count(id)) throw NetFormatError("net: box: unknown link " + id);
    if (!net.links.count(b.prom)) throw NetFormatError("net: box: unknown link " + b.prom);
    net.boxes.push_back(b);
  }
  std::sort(net.boxes.begin(), net.boxes.end(),
            [](const Box& a, const Box& b) { return a.prom < b.prom; });
  return net;
}

std::string net_to_json(const ProofNet& net) {
  nlohmann::ordered_json j;
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [id, e] : net.edges)
    j["edges"].push_back({{"id", id}, {"formula", to_string(e.formula)}});
  j["links"] = nlohmann::ordered_json::array();
  for (const auto& [id, l] : net.links)
    j["links"].push_back({{"id", id},
                          {"kind", kind_name(l.kind)},
                          {"premises", l.premises},
                          {"conclusions", l.conclusions}});
  j["boxes"] = nlohmann::ordered_json::array();
  std::vector<Box> boxes = net.boxes;
  std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) { return a.prom < b.prom; });
  for (auto b : boxes) {
    std::sort(b.pax.begin(), b.pax.end());
    std::sort(b.interior.begin(), b.interior.end());
    j["boxes"].push_back({{"prom", b.prom}, {"pax", b.pax}, {"interior", b.interior}});
  }
  return j.dump(2) + "\n";
}

bool nets_equal(const ProofNet& a, const ProofNet& b) {
  return net_to_json(a) == net_to_json(b);
}

namespace {

bool valid_edge_id(const std::string& id) {
  if (id.empty() || !std::isalpha(static_cast<unsigned char>(id[0]))) return false;
  for (char c : id)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')) return false;
  return true;
}

struct Arity {
  std::size_t premises, conclusions;
};

Arity arity_of(LinkKind k) {
  switch (k) {
    case LinkKind::Ax: return {0, 2};
    case LinkKind::Cut: return {2, 0};
    case LinkKind::Tensor: return {2, 1};
    case LinkKind::Par: return {2, 1};
    case LinkKind::Der: return {1, 1};
    case LinkKind::Prom: return {1, 1};
    case LinkKind::Pax: return {1, 1};
    case LinkKind::Ctr: return {2, 1};
    case LinkKind::Weak: return {0, 1};
    case LinkKind::Conc: return {1, 0};
  }
  return {0, 0};
}

}  // namespace

std::vector<Violation> well_formed(const ProofNet& net) {
  std::vector<Violation> out;
  auto flag = [&](std::string rule, std::string subject, std::string detail) {
    out.push_back({std::move(rule), std::move(subject), std::move(detail)});
  };

  std::map<std::string, int> produced, consumed;
  for (const auto& [id, e] : net.edges) {
    produced[id] = 0;
    consumed[id] = 0;
    if (!valid_edge_id(id))
      flag("edge-id", id, "edge ids must be identifiers (letters, digits, '_', '.')");
  }

  for (const auto& [id, l] : net.links) {
    auto a = arity_of(l.kind);
    if (l.premises.size() != a.premises || l.conclusions.size() != a.conclusions)
      flag("link-arity", id,
           std::string(kind_name(l.kind)) + " takes " + std::to_string(a.premises) + "/" +
               std::to_string(a.conclusions) + " edges");
    for (const auto& e : l.premises) {
      if (!net.edges.count(e))
        flag("link-arity", id, "unknown edge " + e);
      else
        ++consumed[e];
    }
    for (const auto& e : l.conclusions) {
      if (!net.edges.count(e))
        flag("link-arity", id, "unknown edge " + e);
      else
        ++produced[e];
    }
  }
  for (const auto& [id, n] : produced)
    if (n != 1) flag("edge-producer", id, "has " + std::to_string(n) + " producers");
  for (const auto& [id, n] : consumed)
    if (n != 1) flag("edge-consumer", id, "has " + std::to_string(n) + " consumers");

  auto formula = [&](const std::string& e) -> FormulaPtr {
    auto it = net.edges.find(e);
    return it == net.edges.end() ? nullptr : it->second.formula;
  };
  for (const auto& [id, l] : net.links) {
    auto a = arity_of(l.kind);
    if (l.premises.size() != a.premises || l.conclusions.size() != a.conclusions) continue;
    bool refs_ok = true;
    for (const auto& e : l.premises) refs_ok = refs_ok && net.edges.count(e);
    for (const auto& e : l.conclusions) refs_ok = refs_ok && net.edges.count(e);
    if (!refs_ok) continue;
    switch (l.kind) {
      case LinkKind::Ax:
        if (!formulas_equal(formula(l.conclusions[1]), dual(formula(l.conclusions[0]))))
          flag("formula-mismatch", id, "axiom conclusions are not a dual pair");
        break;
      case LinkKind::Cut:
        if (!formulas_equal(formula(l.premises[1]), dual(formula(l.premises[0]))))
          flag("formula-mismatch", id, "cut premises are not a dual pair");
        break;
      case LinkKind::Tensor:
        if (!formulas_equal(formula(l.conclusions[0]),
                            make_tensor(formula(l.premises[0]), formula(l.premises[1]))))
          flag("formula-mismatch", id, "conclusion is not premise1 * premise2");
        break;
      case LinkKind::Par:
        if (!formulas_equal(formula(l.conclusions[0]),
                            make_par(formula(l.premises[0]), formula(l.premises[1]))))
          flag("formula-mismatch", id, "conclusion is not premise1 | premise2");
        break;
      case LinkKind::Der:
        if (!formulas_equal(formula(l.conclusions[0]), make_quest(formula(l.premises[0]))))
          flag("formula-mismatch", id, "conclusion is not ?premise");
        break;
      case LinkKind::Prom:
        if (!formulas_equal(formula(l.conclusions[0]), make_bang(formula(l.premises[0]))))
          flag("formula-mismatch", id, "conclusion is not !premise");
        break;
      case LinkKind::Pax:
        if (!formulas_equal(formula(l.conclusions[0]), formula(l.premises[0])) ||
            formula(l.premises[0])->kind != Formula::Kind::Quest)
          flag("formula-mismatch", id, "pax carries one ?-formula through");
        break;
      case LinkKind::Ctr:
        if (!formulas_equal(formula(l.premises[0]), formula(l.conclusions[0])) ||
            !formulas_equal(formula(l.premises[1]), formula(l.conclusions[0])) ||
            formula(l.conclusions[0])->kind != Formula::Kind::Quest)
          flag("formula-mismatch", id, "contraction needs three equal ?-formulas");
        break;
      case LinkKind::Weak:
        if (formula(l.conclusions[0])->kind != Formula::Kind::Quest)
          flag("formula-mismatch", id, "weakening conclusion must be a ?-formula");
        break;
      case LinkKind::Conc:
        break;
    }
  }

  // Box bookkeeping: each Prom/Pax belongs to exactly one box in its own
  // role; interiors are pairwise disjoint and closed from below.
  std::map<std::string, int> prom_role, pax_role, interior_role;
  for (const auto& b : net.boxes) {
    ++prom_role[b.prom];
    for (const auto& p : b.pax) ++pax_role[p];
    for (const auto& i : b.interior) ++interior_role[i];
  }
  for (const auto& [id, n] : prom_role)
    if (n > 1) flag("box-structure", id, "prom of several boxes");
  for (const auto& [id, n] : pax_role)
    if (n > 1) flag("box-structure", id, "pax of several boxes");
  for (const auto& [id, n] : interior_role)
    if (n > 1) flag("box-structure", id, "interior of several boxes");
  for (const auto& [id, l] : net.links) {
    if (l.kind == LinkKind::Prom && !prom_role.count(id))
      flag("box-structure", id, "promotion without a box record");
    if (l.kind == LinkKind::Pax && !pax_role.count(id))
      flag("box-structure", id, "pax without a box record");
  }
  for (const auto& b : net.boxes) {
    auto promit = net.links.find(b.prom);
    if (promit == net.links.end() || promit->second.kind != LinkKind::Prom) {
      flag("box-structure", b.prom, "box prom is not a promotion link");
      continue;
    }
    std::set<std::string> inside(b.interior.begin(), b.interior.end());
    std::set<std::string> interior_edges;
    for (const auto& id : b.interior) {
      auto it = net.links.find(id);
      if (it == net.links.end()) continue;
      if (it->second.kind == LinkKind::Conc)
        flag("box-structure", id, "conclusion link inside a box");
      for (const auto& e : it->second.conclusions) interior_edges.insert(e);
    }
    for (const auto& id : b.interior) {
      auto it = net.links.find(id);
      if (it == net.links.end()) continue;
      for (const auto& e : it->second.premises)
        if (!interior_edges.count(e))
          flag("box-structure", id, "interior link consumes edge " + e + " from outside the box");
    }
    auto check_door = [&](const std::string& link_id, const std::string& role) {
      auto it = net.links.find(link_id);
      if (it == net.links.end() || it->second.premises.size() != 1) return;
      const std::string& e = it->second.premises[0];
      if (!interior_edges.count(e))
        flag("box-structure", link_id, role + " premise " + e + " is not produced in the box");
    };
    check_door(b.prom, "promotion");
    for (const auto& p : b.pax) {
      auto it = net.links.find(p);
      if (it == net.links.end() || it->second.kind != LinkKind::Pax)
        flag("box-structure", p, "box pax is not a pax link");
      else
        check_door(p, "pax");
    }
    // Interior conclusions must leave through this box's doors.
    std::set<std::string> doors;
    if (promit->second.premises.size() == 1) doors.insert(promit->second.premises[0]);
    for (const auto& p : b.pax) {
      auto it = net.links.find(p);
      if (it != net.links.end() && it->second.premises.size() == 1)
        doors.insert(it->second.premises[0]);
    }
    for (const auto& e : interior_edges) {
      const Link* consumer = net.consumer_of(e);
      if (!consumer) continue;  // already flagged as edge-consumer
      if (!inside.count(consumer->id) && !doors.count(e))
        flag("box-structure", e, "interior edge escapes the box at link " + consumer->id);
    }
  }
  return out;
}

ProofNet box_interior_net(const ProofNet& net, const Box& box) {
  ProofNet out;
  std::set<std::string> edge_ids;
  for (const auto& id : box.interior) {
    auto it = net.links.find(id);
    if (it == net.links.end()) throw NetFormatError("box interior references unknown link " + id);
    out.links[id] = it->second;
    for (const auto& e : it->second.premises) edge_ids.insert(e);
    for (const auto& e : it->second.conclusions) edge_ids.insert(e);
  }
  for (const auto& e : edge_ids) {
    auto it = net.edges.find(e);
    if (it == net.edges.end()) throw NetFormatError("box interior references unknown edge " + e);
    out.edges[e] = it->second;
  }
  // Doors become conclusions of the standalone interior.
  auto conc = [&](const std::string& link_id) {
    auto it = net.links.find(link_id);
    if (it == net.links.end() || it->second.premises.size() != 1) return;
    const std::string& e = it->second.premises[0];
    if (!out.edges.count(e)) return;
    Link c;
    c.id = "conc." + e;
    c.kind = LinkKind::Conc;
    c.premises = {e};
    out.links[c.id] = c;
  };
  for (const auto& p : box.pax) conc(p);
  conc(box.prom);
  return out;
}

ProofNet linear_part(const ProofNet& interior) {
  for (const auto& [id, l] : interior.links) {
    if (l.kind == LinkKind::Weak || l.kind == LinkKind::Prom || l.kind == LinkKind::Pax)
      throw NotPreNearlyLinearError("linear_part: " + std::string(kind_name(l.kind)) +
                                    " link " + id + " inside interior");
    if (l.kind == LinkKind::Ax)
      for (const auto& e : l.conclusions) {
        auto it = interior.edges.find(e);
        if (it != interior.edges.end() && it->second.formula->kind != Formula::Kind::Atom)
          throw NotPreNearlyLinearError("linear_part: axiom conclusion " + e + " is not atomic");
      }
  }

  // A link dies if it is a dereliction or consumes an edge produced by a
  // dead link; iterate to the fixpoint.
  std::set<std::string> dead_links, dead_edges;
  for (const auto& [id, l] : interior.links)
    if (l.kind == LinkKind::Der) dead_links.insert(id);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [id, l] : interior.links) {
      if (dead_links.count(id)) {
        for (const auto& e : l.conclusions)
          if (dead_edges.insert(e).second) changed = true;
        continue;
      }
      for (const auto& e : l.premises)
        if (dead_edges.count(e) && dead_links.insert(id).second) changed = true;
    }
  }

  ProofNet out;
  for (const auto& [id, l] : interior.links)
    if (!dead_links.count(id)) out.links[id] = l;
  for (const auto& [id, e] : interior.edges)
    if (!dead_edges.count(id)) {
      const Link* prod = interior.producer_of(id);
      if (prod && dead_links.count(prod->id)) continue;  // defensive
      out.edges[id] = e;
    }
  // Orphaned edges (consumer died, e.g. dereliction premises) become
  // conclusions of the linear part.
  for (const auto& [id, e] : out.edges) {
    const Link* consumer = interior.consumer_of(id);
    if (consumer && dead_links.count(consumer->id)) {
      Link c;
      c.id = "lp." + id;
      c.kind = LinkKind::Conc;
      c.premises = {id};
      out.links[c.id] = c;
    }
  }
  return out;
}

std::vector<PersistentPath> persistent_paths(const ProofNet& net) {
  using Node = std::pair<std::string, int>;
  std::map<Node, std::vector<Node>> adj;
  auto occs = [&](const std::string& e) {
    auto it = net.edges.find(e);
    return it == net.edges.end() ? 0 : atom_count(it->second.formula);
  };
  auto connect = [&](const Node& u, const Node& v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  for (const auto& [id, l] : net.links) {
    switch (l.kind) {
      case LinkKind::Ax: {
        int m = occs(l.conclusions[0]);
        for (int t = 0; t < m; ++t)
          connect({l.conclusions[0], t}, {l.conclusions[1], m - 1 - t});
        break;
      }
      case LinkKind::Cut: {
        int m = occs(l.premises[0]);
        for (int t = 0; t < m; ++t) connect({l.premises[0], t}, {l.premises[1], m - 1 - t});
        break;
      }
      case LinkKind::Tensor:
      case LinkKind::Par: {
        int m1 = occs(l.premises[0]);
        int m2 = occs(l.premises[1]);
        for (int t = 0; t < m1; ++t) connect({l.premises[0], t}, {l.conclusions[0], t});
        for (int t = 0; t < m2; ++t) connect({l.premises[1], t}, {l.conclusions[0], m1 + t});
        break;
      }
      case LinkKind::Conc:
        break;
      default:
        throw NonLinearNetError("persistent_paths: net contains a " +
                                std::string(kind_name(l.kind)) + " link");
    }
  }
  for (const auto& [id, e] : net.edges)
    for (int t = 0; t < atom_count(e.formula); ++t) adj[{id, t}];  // ensure node exists

  std::vector<PersistentPath> out;
  auto walk = [&](const Node& start, bool cycle) {
    PersistentPath path;
    path.cycle = cycle;
    Node cur = start;
    path.nodes.push_back(cur);
    while (!adj[cur].empty()) {
      Node next = adj[cur].front();
      adj[cur].erase(adj[cur].begin());
      auto& back = adj[next];
      back.erase(std::find(back.begin(), back.end(), cur));
      if (cycle && next == start) break;
      path.nodes.push_back(next);
      cur = next;
    }
    out.push_back(std::move(path));
  };
  std::vector<Node> nodes;
  for (const auto& [n, nbrs] : adj) nodes.push_back(n);
  for (const auto& n : nodes)
    if (adj[n].size() <= 1 && !adj[n].empty()) walk(n, false);
  for (const auto& n : nodes)
    if (adj[n].empty() && out.end() == std::find_if(out.begin(), out.end(), [&](const auto& p) {
                            return std::find(p.nodes.begin(), p.nodes.end(), n) != p.nodes.end();
                          }))
      out.push_back({{n}, false});
  for (const auto& n : nodes)
    if (!adj[n].empty()) walk(n, true);
  return out;
}

namespace {

std::string letter(int i) {
  std::string s;
  ++i;
  while (i > 0) {
    --i;
    s.insert(s.begin(), static_cast<char>('a' + i % 26));
    i /= 26;
  }
  return s;
}

struct NetBuilder {
  ProofNet net;
  int next_letter = 0;

  std::string edge(const FormulaPtr& f) {
    std::string id = letter(next_letter++);
    net.edges[id] = {id, f};
    return id;
  }
  std::string link(LinkKind k, std::vector<std::string> premises,
                   std::vector<std::string> conclusions) {
    Link l;
    l.kind = k;
    l.premises = std::move(premises);
    l.conclusions = std::move(conclusions);
    l.id = std::string(kind_name(k)) + "." +
           (l.conclusions.empty() ? l.premises[0] : l.conclusions[0]);
    net.links[l.id] = l;
    return l.id;
  }
};

}  // namespace

ProofNet church(int n, bool cut_against_zero) {
  if (n < 0) throw std::invalid_argument("church: n must be >= 0");
  auto X = make_atom("X");
  auto nX = make_atom("X", true);
  auto tens = make_tensor(X, nX);   // X*~X
  auto parr = make_par(X, nX);      // X|~X
  NetBuilder b;

  if (n == 0 && !cut_against_zero) {
    std::string p = b.edge(X), q = b.edge(nX), c = b.edge(parr);
    b.link(LinkKind::Ax, {}, {p, q});
    b.link(LinkKind::Par, {p, q}, {c});
    b.link(LinkKind::Conc, {c}, {});
    return b.net;
  }

  std::string quest_conclusion;
  std::string first_in, last_out;
  if (n == 0) {
    first_in = b.edge(nX);
    last_out = b.edge(X);
    b.link(LinkKind::Ax, {}, {first_in, last_out});
    quest_conclusion = b.edge(make_quest(tens));
    b.link(LinkKind::Weak, {}, {quest_conclusion});
  } else {
    // n+1 axioms, n tensors, n derelictions, a left-comb contraction chain.
    std::vector<std::string> neg(n + 1), pos(n + 1);
    for (int t = 0; t <= n; ++t) {
      neg[t] = b.edge(nX);
      pos[t] = b.edge(X);
      b.link(LinkKind::Ax, {}, {neg[t], pos[t]});
    }
    std::vector<std::string> tconc(n);
    for (int t = 0; t < n; ++t) {
      tconc[t] = b.edge(tens);
      b.link(LinkKind::Tensor, {pos[t], neg[t + 1]}, {tconc[t]});
    }
    std::vector<std::string> dconc(n);
    for (int t = 0; t < n; ++t) {
      dconc[t] = b.edge(make_quest(tens));
      b.link(LinkKind::Der, {tconc[t]}, {dconc[t]});
    }
    std::string acc = dconc[0];
    for (int t = 1; t < n; ++t) {
      std::string merged = b.edge(make_quest(tens));
      b.link(LinkKind::Ctr, {acc, dconc[t]}, {merged});
      acc = merged;
    }
    quest_conclusion = acc;
    first_in = neg[0];
    last_out = pos[n];
  }

  b.link(LinkKind::Conc, {first_in}, {});
  b.link(LinkKind::Conc, {last_out}, {});

  if (!cut_against_zero) {
    b.link(LinkKind::Conc, {quest_conclusion}, {});
    return b.net;
  }

  // Promoted Church numeral 0: an axiom and a par inside a box.
  std::string bang = b.edge(make_bang(parr));
  std::string body = b.edge(parr);
  std::string bpos = b.edge(X), bneg = b.edge(nX);
  std::string ax = b.link(LinkKind::Ax, {}, {bpos, bneg});
  std::string par = b.link(LinkKind::Par, {bpos, bneg}, {body});
  std::string prom = b.link(LinkKind::Prom, {body}, {bang});
  b.net.boxes.push_back({prom, {}, {ax, par}});
  b.link(LinkKind::Cut, {quest_conclusion, bang}, {});
  return b.net;
}

ValidationReport validate_shallow(const ProofNet& net) {
  ValidationReport report;
  report.violations = well_formed(net);

  for (const auto& [id, e] : net.edges)
    if (formula_depth(e.formula) > 1)
      report.violations.push_back(
          {"shallow-formula", id, "formula " + to_string(e.formula) + " has depth > 1"});

  for (const auto& b : net.boxes) {
    bool nested = false;
    for (const auto& id : b.interior) {
      auto it = net.links.find(id);
      if (it == net.links.end()) continue;
      if (it->second.kind == LinkKind::Prom || it->second.kind == LinkKind::Pax) {
        report.violations.push_back({"nested-box", id, "box inside the box of " + b.prom});
        nested = true;
      }
    }
    if (nested) continue;

    ProofNet interior;
    try {
      interior = box_interior_net(net, b);
    } catch (const NetFormatError&) {
      continue;  // structural problems already reported by well_formed
    }
    bool pre_ok = true;
    for (const auto& [id, l] : interior.links) {
      if (l.kind == LinkKind::Weak || l.kind == LinkKind::Prom) {
        report.violations.push_back(
            {"pre-nearly-linear", id,
             std::string(kind_name(l.kind)) + " link inside the box of " + b.prom});
        pre_ok = false;
      }
      if (l.kind == LinkKind::Ax)
        for (const auto& e : l.conclusions) {
          auto it = interior.edges.find(e);
          if (it != interior.edges.end() && it->second.formula->kind != Formula::Kind::Atom) {
            report.violations.push_back(
                {"pre-nearly-linear", id, "axiom conclusion " + e + " is not atomic"});
            pre_ok = false;
          }
        }
    }
    auto promit = net.links.find(b.prom);
    if (promit == net.links.end() || promit->second.premises.size() != 1) continue;
    const std::string& B = promit->second.premises[0];
    auto bit = net.edges.find(B);
    if (bit != net.edges.end() && !is_linear(bit->second.formula)) {
      report.violations.push_back(
          {"pre-nearly-linear", B, "promoted conclusion must be linear"});
      pre_ok = false;
    }
    for (const auto& p : b.pax) {
      auto it = net.links.find(p);
      if (it == net.links.end() || it->second.premises.size() != 1) continue;
      auto eit = net.edges.find(it->second.premises[0]);
      if (eit == net.edges.end()) continue;
      const auto& f = eit->second.formula;
      if (f->kind != Formula::Kind::Quest || !is_linear(f->left)) {
        report.violations.push_back({"pre-nearly-linear", eit->first,
                                     "pax conclusion must be ?A with A linear"});
        pre_ok = false;
      }
    }
    if (!pre_ok) continue;

    ProofNet lp;
    try {
      lp = linear_part(interior);
    } catch (const NotPreNearlyLinearError& e) {
      report.violations.push_back({"pre-nearly-linear", b.prom, e.what()});
      continue;
    }
    std::vector<PersistentPath> paths;
    try {
      paths = persistent_paths(lp);
    } catch (const NonLinearNetError& e) {
      report.violations.push_back({"pre-nearly-linear", b.prom, e.what()});
      continue;
    }
    for (const auto& path : paths) {
      bool through_b = false;
      for (const auto& [edge, idx] : path.nodes)
        if (edge == B) {
          through_b = true;
          break;
        }
      if (!through_b) {
        std::string start = path.nodes.empty() ? "?" : path.nodes.front().first;
        report.violations.push_back(
            {"persistent-path", b.prom,
             "a persistent path starting at " + start + " avoids the promoted conclusion " + B});
      }
    }
  }

  report.shallow = report.violations.empty();
  return report;
}

}  // namespace netideal
