#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "netideal/groebner.hpp"
#include "netideal/proofnet.hpp"
#include "netideal/registry.hpp"

namespace netideal {

/// Exponential edges tied by Ctr/Pax/Cut/Ax must share one chart; raised
/// when their boxes disagree, their atom counts differ, or the box
/// dependency graph is cyclic.
struct ChartMismatchError : std::runtime_error {
  explicit ChartMismatchError(const std::string& w) : std::runtime_error(w) {}
};

/// The truncated slice of a box ideal could not be put in chart form (a
/// pivot candidate has no unit coefficient).
struct DegenerateSliceError : std::runtime_error {
  explicit DegenerateSliceError(const std::string& w) : std::runtime_error(w) {}
};

struct InterpretOptions {
  int truncation = 1;
  GroebnerOptions groebner;
};

struct BoxInfo {
  std::string prom;       // prom link id
  std::string bang_edge;  // prom conclusion edge
  ChartSelection chart;
  std::vector<PolyQ> prom_gens;  // point equations + parameter passthroughs
};

struct Interpretation {
  VariableRegistry registry;
  std::map<std::string, std::vector<PolyQ>> link_gens;  // by link id
  std::vector<PolyQ> gens;                              // concatenated in link-id order
  std::map<std::string, int> family_of;                 // exponential edge -> family id
  std::vector<BoxInfo> box_info;
};

/// Compiles a validated shallow net: resolves chart families (edges joined
/// by Ctr/Pax/Cut/Ax share the chart of their boxes, or the default chart
/// when boxless), builds the variable registry, and emits the generators of
/// every link per the link-kind rules.
Interpretation build_interpretation(const ProofNet& net, const InterpretOptions& opts = {});

VariableRegistry build_registry(const ProofNet& net, const InterpretOptions& opts = {});

/// Chart of one box: Gaussian elimination of the truncated degree slice of
/// the box interior's eliminated ideal.
ChartSelection chart_for_box(const ProofNet& net, const Box& box,
                             const InterpretOptions& opts = {});

std::vector<PolyQ> link_ideal(const ProofNet& net, const std::string& link_id,
                              const InterpretOptions& opts = {});

std::pair<IdealQ, VariableRegistry> net_ideal(const ProofNet& net,
                                              const InterpretOptions& opts = {});

}  // namespace netideal
