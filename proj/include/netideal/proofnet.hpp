#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "netideal/formula.hpp"

namespace netideal {

enum class LinkKind { Ax, Cut, Tensor, Par, Der, Prom, Pax, Ctr, Weak, Conc };

const char* kind_name(LinkKind k);
std::optional<LinkKind> kind_from_name(const std::string& name);

struct Edge {
  std::string id;
  FormulaPtr formula;
};

struct Link {
  std::string id;
  LinkKind kind = LinkKind::Ax;
  std::vector<std::string> premises;
  std::vector<std::string> conclusions;
};

struct Box {
  std::string prom;               // Prom link id
  std::vector<std::string> pax;   // Pax link ids
  std::vector<std::string> interior;  // link ids inside the box
};

struct NetFormatError : std::runtime_error {
  explicit NetFormatError(const std::string& w) : std::runtime_error(w) {}
};
struct NonLinearNetError : std::runtime_error {
  explicit NonLinearNetError(const std::string& w) : std::runtime_error(w) {}
};
struct NotPreNearlyLinearError : std::runtime_error {
  explicit NotPreNearlyLinearError(const std::string& w) : std::runtime_error(w) {}
};

struct ProofNet {
  std::map<std::string, Edge> edges;
  std::map<std::string, Link> links;
  std::vector<Box> boxes;

  const Link* producer_of(const std::string& edge_id) const;
  const Link* consumer_of(const std::string& edge_id) const;
  const Box* box_of_prom(const std::string& prom_link_id) const;
  /// Box owning the given link id (as prom, pax, or interior), or nullptr.
  const Box* box_of_link(const std::string& link_id) const;

  /// Edge ids consumed by Conc links, sorted.
  std::vector<std::string> conclusions() const;

  std::size_t cut_count() const;
  std::size_t link_count() const { return links.size(); }
  std::size_t box_count() const { return boxes.size(); }
};

ProofNet net_from_json(const std::string& text);
/// Byte-deterministic: arrays sorted by id, canonical formula strings.
std::string net_to_json(const ProofNet& net);
bool nets_equal(const ProofNet& a, const ProofNet& b);

struct Violation {
  std::string rule;     // e.g. "nested-box", "persistent-path"
  std::string subject;  // edge or link id
  std::string detail;
};

struct ValidationReport {
  bool shallow = false;
  std::vector<Violation> violations;
};

/// Structural well-formedness: producer/consumer uniqueness, link arities,
/// formula compatibility, box membership.  Returns violations (empty = ok).
std::vector<Violation> well_formed(const ProofNet& net);

/// Full shallowness check: well-formedness, shallow formulas, no nested
/// boxes, pre-nearly-linear interiors, persistent paths through B.
ValidationReport validate_shallow(const ProofNet& net);

/// Extracts a box interior as a standalone net: interior links plus Conc
/// links (ids "conc.<edge>") on the Pax premises and the Prom premise.
ProofNet box_interior_net(const ProofNet& net, const Box& box);

/// Removes Der links and everything strictly below them; Der premises and
/// other orphaned edges get fresh Conc links (ids "lp.<edge>").
/// Throws NotPreNearlyLinearError if the net contains Weak/Prom/Pax links
/// or non-atomic axiom conclusions.
ProofNet linear_part(const ProofNet& interior);

struct PersistentPath {
  std::vector<std::pair<std::string, int>> nodes;  // (edge id, atom index)
  bool cycle = false;
};

/// Maximal paths in the atom-occurrence pairing graph of a linear net
/// (links restricted to Ax/Cut/Tensor/Par/Conc; throws NonLinearNetError).
std::vector<PersistentPath> persistent_paths(const ProofNet& net);

/// The shallow Church numeral net for n.  With cut_against_zero, the
/// ?(X*~X) conclusion is cut against a promoted Church numeral 0.
ProofNet church(int n, bool cut_against_zero = false);

}  // namespace netideal
