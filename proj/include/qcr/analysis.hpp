#pragma once

#include <string>
#include <vector>

#include "qcr/state.hpp"

namespace qcr {

inline constexpr double kDefaultPptTolerance = 1e-9;

/// Bipartition of the non-environment registers.
struct CutSpec {
  std::vector<std::string> side_one;
  std::vector<std::string> side_two;

  /// side_two is the complement of side_one among non-environment registers.
  static CutSpec from_side_one(const Layout& layout, std::vector<std::string> side_one);
};

/// Throws LabelError unless the cut is a nonempty disjoint cover of the
/// non-environment registers.
void validate_cut(const Layout& layout, const CutSpec& cut);

struct PptResult {
  CutSpec cut;
  double min_eigenvalue = 0;
  bool ppt = false;
};

struct PptReport {
  std::vector<PptResult> cuts;
  bool all_ppt = true;
};

/// Minimum eigenvalue of the partial transpose over side_two. An environment
/// register, if present, is traced out first.
PptResult ppt_check(const QuantumState& s, const CutSpec& cut, double tol = kDefaultPptTolerance);

/// Cuts {dealer + P1 : P2} for every nonempty player subset P2.
PptReport all_dealer_cuts_ppt(const QuantumState& s, double tol = kDefaultPptTolerance);

/// Every register-level bipartition (each unordered cut once).
PptReport all_register_cuts_ppt(const QuantumState& s, double tol = kDefaultPptTolerance);

/// ||a - b||_1 of the density matrices, in [0, 2] for normalized states.
double trace_distance(const QuantumState& a, const QuantumState& b);

}  // namespace qcr
