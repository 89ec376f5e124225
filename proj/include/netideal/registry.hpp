#pragma once

#include <map>
#include <string>
#include <vector>

#include "netideal/monomial.hpp"

namespace netideal {

enum class VarClass { UnprimedAtom, PrimedAtom, ChartParameter };

const char* var_class_name(VarClass c);

struct VarInfo {
  std::string name;
  VarClass cls = VarClass::UnprimedAtom;
  std::string edge;  // owning edge id
  int index = 0;     // atom position or parameter index, 1-based
};

/// Grassmann chart of a truncated-slice subspace: which slice monomials are
/// pivots (head positions of the subspace) and which form the complement
/// basis.  Addresses enumerate the degree-(N,...,N) slice monomials of an
/// m-atom block: address = sum of a_t * (N+1)^(t-1) where a_t is the
/// unprimed exponent of atom t (the primed exponent is N - a_t).
struct ChartSelection {
  int truncation = 1;
  std::vector<long> pivots;  // ascending slice addresses
  std::vector<long> basis;   // ascending complement
  long h1() const { return static_cast<long>(basis.size()); }
  int param_count() const { return static_cast<int>(pivots.size() * basis.size()); }
  /// Row-major parameter index for (pivot position, basis position), 1-based.
  int param_index(int pivot_pos, int basis_pos) const {
    return pivot_pos * static_cast<int>(basis.size()) + basis_pos + 1;
  }
};

long slice_size(int atom_count, int truncation);
long slice_address(const std::vector<int>& unprimed_exponents, int truncation);
std::vector<int> slice_exponents(long address, int atom_count, int truncation);

/// Variable names are derived from edge ids: a 1-atom edge `a` owns `a`/`a'`,
/// an m-atom edge `g` owns `g1`/`g1'`..`gm`/`gm'`, and an exponential edge
/// `l` owns chart parameters `l1`..`lk`.
std::string atom_var_name(const std::string& edge, int t, int atom_count, bool primed);
std::string param_var_name(const std::string& edge, int k);

struct VariableRegistry {
  RingPtr ring;
  std::vector<VarInfo> vars;  // parallel to ring variable order
  std::map<std::string, int> edge_atoms;          // linear edge -> atom count
  std::map<std::string, ChartSelection> charts;   // exponential edge -> chart
  int truncation = 1;

  bool is_linear_edge(const std::string& edge) const { return edge_atoms.count(edge) > 0; }
  bool is_exponential_edge(const std::string& edge) const { return charts.count(edge) > 0; }
  int atoms_of(const std::string& edge) const;
  int params_of(const std::string& edge) const;
  std::string atom_var(const std::string& edge, int t, bool primed) const;
  std::string param_var(const std::string& edge, int k) const;
  const VarInfo* info(const std::string& var_name) const;

  /// All atom-pair blocks (unprimed name, primed name), in ring order; used
  /// for multigraded Hilbert functions.
  std::vector<std::pair<std::string, std::string>> atom_blocks() const;

  std::string to_json() const;
};

}  // namespace netideal
