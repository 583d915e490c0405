#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcr/layout.hpp"
#include "qcr/state.hpp"
#include "qcr/verify.hpp"

namespace qcr {

/// W = sum_i |i + shift><i| on Z_d.
ComplexMatrix modular_shift(int d, int shift);

/// cX = sum_{j,k} |j+k, k><j, k|: adds the second register into the first.
ComplexMatrix controlled_add(int d);

struct ReduceOptions {
  /// Selects one branch by the measured digits (in order of the measured
  /// players); all branches are returned when unset.
  std::optional<Digits> outcome;
  /// Samples one branch from the outcome distribution when set.
  std::optional<std::uint64_t> sample_seed;
  bool waive_certification = false;
  double tol = kDefaultVerifyTolerance;
};

struct ReductionOutcome {
  int announced = 0;          // beta = digit sum of measured digits mod d
  Digits measured;            // one digit per measured player
  double probability = 0;
  QuantumState state;         // on the dealer and kept players, canonical labels
  bool correction_applied = false;
  std::vector<int> kept_players;  // original indices, in order
};

/// The players in `measured_players` measure their information registers and
/// announce the digit sum; the dealer shifts its information register by it.
/// Measured players' registers are traced out; kept players are renumbered
/// 1..M in original order.
std::vector<ReductionOutcome> reduce(const QuantumState& s, const std::vector<int>& measured_players,
                                     const ReduceOptions& opts = {});

struct CompositionRecord {
  Layout first;
  Layout second;
  Layout merged;
  std::string unitary;         // "cX"
  std::string target_label;    // first input's dealer information register
  std::string control_label;   // second input's dealer information register
  /// Canonical label in the merged state of each register of the second input.
  std::vector<std::pair<std::string, std::string>> second_relabeling;
};

struct Composition {
  QuantumState state;
  CompositionRecord record;
};

struct ComposeOptions {
  bool force = false;
  double tol = kDefaultVerifyTolerance;
  Index dim_cap = kDefaultDimCap;
};

/// Tensor product, cX on (first dealer info, second dealer info), then the
/// second dealer information register is reclassified as a dealer shield and
/// the second input's players follow the first input's players.
Composition compose(const QuantumState& first, const QuantumState& second, const ComposeOptions& opts = {});

/// Left fold of compose over two-party states.
QuantumState expand_from_private(std::span<const QuantumState> privates, const ComposeOptions& opts = {});

}  // namespace qcr
