#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "netideal/proofnet.hpp"

namespace netideal {

enum class RedexKind { AxCut, TensorPar, BangQuest, WeakBang, CtrBang, PromPax };

const char* redex_kind_name(RedexKind k);
std::optional<RedexKind> redex_kind_from_name(const std::string& name);

struct Redex {
  std::string cut;  // Cut link id
  RedexKind kind = RedexKind::AxCut;
};

struct UnsupportedReductionError : std::runtime_error {
  explicit UnsupportedReductionError(const std::string& w) : std::runtime_error(w) {}
};
struct StaleRedexError : std::runtime_error {
  explicit StaleRedexError(const std::string& w) : std::runtime_error(w) {}
};
struct FuelExhaustedError : std::runtime_error {
  explicit FuelExhaustedError(const std::string& w) : std::runtime_error(w) {}
};
struct NonShallowRequiredError : std::runtime_error {
  explicit NonShallowRequiredError(const std::string& w) : std::runtime_error(w) {}
};

/// How edges of the reduct relate to edges of the redex net.
/// forward: old edge id -> new edge id, or nullopt when the edge is dropped;
///   edges not listed are unchanged.
/// backward: new edge id -> old edge id, or nullopt when the edge is fresh
///   (duplication); edges not listed are unchanged.  forward(backward(e)) = e
///   whenever backward(e) is set.
/// clone_of: fresh edge id -> the edge it was copied from.
struct EdgeCorrespondence {
  std::map<std::string, std::optional<std::string>> forward;
  std::map<std::string, std::optional<std::string>> backward;
  std::map<std::string, std::string> clone_of;
};

/// Classifies the cut by the producers of its two premises; nullopt when the
/// link is not a Cut or no reduction rule applies.
std::optional<RedexKind> classify_redex(const ProofNet& net, const std::string& cut_id);

/// All reducible cuts (including PromPax ones), sorted by Cut link id.
std::vector<Redex> find_redexes(const ProofNet& net);

struct ReduceResult {
  ProofNet net;
  EdgeCorrespondence corr;
  Redex redex;
  std::vector<std::string> links;  // link ids of the redex in the input net
};

/// Applies one cut-elimination step at the given Cut.  `step` seeds the fresh
/// ids minted by duplicating kinds (CtrBang right copies use suffix ".R<step>").
/// Throws StaleRedexError if the cut is missing or unclassifiable and
/// UnsupportedReductionError for PromPax.
ReduceResult reduce_step(const ProofNet& net, const std::string& cut_id, int step = 1);

enum class Strategy { Leftmost, ByKindPriority };

struct NormalizeOptions {
  Strategy strategy = Strategy::Leftmost;
  int fuel = 1000;
};

struct TraceStep {
  int step = 0;
  Redex redex;
  std::vector<std::string> links;
  EdgeCorrespondence corr;
};

struct NormalizeResult {
  ProofNet net;
  std::vector<TraceStep> trace;
  std::vector<std::string> warnings;  // non-fatal anomalies (e.g. shallowness loss)
};

/// Reduces until cut-free.  Throws FuelExhaustedError when `fuel` steps were
/// not enough and NonShallowRequiredError when cuts remain but every redex is
/// PromPax (eliminating them needs non-shallow intermediate nets).
NormalizeResult normalize(const ProofNet& net, const NormalizeOptions& opts = {});

/// (total cut weight, box count, link count); cut weight is the sum over Cut
/// links of the premise formula size.  Strictly lexicographically decreasing
/// under AxCut/TensorPar/BangQuest/WeakBang; CtrBang may increase it.
std::tuple<long, std::size_t, std::size_t> reduction_measure(const ProofNet& net);

}  // namespace netideal
