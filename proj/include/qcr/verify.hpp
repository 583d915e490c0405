#pragma once

#include <string>
#include <vector>

#include "qcr/state.hpp"

namespace qcr {

inline constexpr double kDefaultVerifyTolerance = 1e-9;
/// Recommended tolerance for states produced by protocol transformations.
inline constexpr double kProtocolVerifyTolerance = 1e-7;

/// Partition of the players into dishonest (colluding with the eavesdropper)
/// and honest. Player indices are 1-based.
struct CoalitionSpec {
  std::vector<int> dishonest;
  std::vector<int> honest;

  static CoalitionSpec from_dishonest(std::vector<int> dishonest, int players);
};

/// Size N-1 coalitions by default; with `exhaustive` every coalition leaving
/// at least one honest player, including the empty one.
std::vector<CoalitionSpec> coalitions(int players, bool exhaustive);

struct VerifyOptions {
  double tol = kDefaultVerifyTolerance;
  bool exhaustive_coalitions = false;
};

struct ConditionIReport {
  bool pass = false;
  /// max over digit-sum-0 strings of |p - 1/d^N|
  double max_deviation = 0;
  /// total probability on strings outside the digit-sum-0 set
  double off_support_mass = 0;
  std::vector<std::pair<Digits, double>> distribution;  // nonzero entries only
};

struct CoalitionReport {
  CoalitionSpec coalition;
  bool pass = false;
  /// max pairwise trace norm ||gamma_i - gamma_j||_1 over dealer outcomes
  double max_distance = 0;
  std::vector<double> dealer_probabilities;
};

struct ConditionIIReport {
  bool pass = false;
  double max_distance = 0;
  std::vector<CoalitionReport> coalitions;
};

struct VerificationReport {
  ConditionIReport condition_i;
  ConditionIIReport condition_ii;
  bool verdict = false;
  double tol = kDefaultVerifyTolerance;

  /// "none", "condition-i", "condition-ii" or "condition-i,condition-ii".
  std::string failing_conditions() const;
};

/// Measures every information register: pass iff each digit-sum-0 string has
/// probability 1/d^N within tol and the remaining mass is at most tol.
ConditionIReport check_condition_i(const QuantumState& s, double tol = kDefaultVerifyTolerance);

/// Adversary state of one coalition for each dealer outcome: purify, project
/// the dealer information register, keep dishonest registers plus the
/// environment. Outcomes with zero probability are returned as empty matrices.
std::vector<ComplexMatrix> adversary_states(const QuantumState& s, const CoalitionSpec& coalition,
                                            std::vector<double>* probabilities = nullptr);

CoalitionReport check_coalition(const QuantumState& s, const CoalitionSpec& coalition,
                                double tol = kDefaultVerifyTolerance);

ConditionIIReport check_condition_ii(const QuantumState& s, const VerifyOptions& opts = {});

VerificationReport is_qcr(const QuantumState& s, const VerifyOptions& opts = {});

}  // namespace qcr
