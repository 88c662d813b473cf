#pragma once

// Longest element of the Weyl group: reduced word, exact action on the span
// of the simple roots, and the +/-1 eigenspace signature of that action.

#include <string>
#include <utility>
#include <vector>

#include "cocyclelab/root_system.hpp"

namespace cocyclelab {

struct LongestElementReport {
  std::string type_label;
  int rank = 0;
  /// Reduced word, 0-based simple-root indices in greedy-walk order. Read as
  /// a left-to-right group product it is a reduced word for w0 (w0 = w0^-1).
  std::vector<int> word;
  /// Action of w0 on the span of the simple roots, in the simple-root basis.
  RatMat action;
  std::string basis = "simple_roots";
  int s = 0;  // dim of the +1 eigenspace
  int t = 0;  // dim of the -1 eigenspace
  bool minus_one = false;
};

/// Greedy chamber walk: start at v = -rho and repeatedly reflect across the
/// lowest-index simple root pairing negatively with v. The walk reaches rho
/// in exactly |positive roots| steps and the step sequence is a reduced word
/// for w0.
LongestElementReport longest_element(const RootSystem& rs);

/// (s, t) from the exact trace of an involution; throws NotInvolution if
/// action^2 != identity.
std::pair<int, int> involution_signature(const LongestElementReport& rep);

inline bool is_minus_one(const LongestElementReport& rep) { return rep.s == 0; }

/// w0 as an exact matrix on the ambient space (product of the word's
/// reflections); used by tests and by the positive->negative root check.
RatMat ambient_action(const RootSystem& rs, const std::vector<int>& word);

}  // namespace cocyclelab
