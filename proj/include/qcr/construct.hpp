#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcr/layout.hpp"
#include "qcr/random.hpp"
#include "qcr/state.hpp"
#include "qcr/verify.hpp"

namespace qcr {

/// Initial shield state: either a pure vector or a density matrix over the
/// shield registers (dealer first, then players in order).
class ShieldSeed {
 public:
  static ShieldSeed trivial(int parties);
  static ShieldSeed pure(std::vector<Index> dims, ComplexVector v);
  static ShieldSeed mixed(std::vector<Index> dims, ComplexMatrix sigma);
  /// |0...0> on the given shield dimensions.
  static ShieldSeed zero(std::vector<Index> dims);

  const std::vector<Index>& dims() const { return dims_; }
  Index total_dim() const;
  bool is_pure() const { return pure_.has_value(); }
  const ComplexVector& vector() const { return *pure_; }
  const ComplexMatrix& sigma() const { return sigma_; }

 private:
  std::vector<Index> dims_;
  std::optional<ComplexVector> pure_;
  ComplexMatrix sigma_;
};

/// Information-controlled unitaries. `targets` names the registers the
/// unitaries act on (empty means every shield register); keys are digit
/// strings over the controlling information registers.
struct TwistingFamily {
  std::vector<std::string> targets;
  std::map<Digits, ComplexMatrix> unitaries;
};

/// (1/d) sum_{i,j} |i,-i><j,-j| (x) U^i sigma U^j^dagger on layout D, D~, A1, A1~.
/// The twist is keyed by the single dealer digit i and acts on D~ A1~.
QuantumState build_private_state(int d, const ShieldSeed& seed, const TwistingFamily& twist,
                                 Index dim_cap = kDefaultDimCap);

/// The six-qubit pure state with amplitude 1/2 on |000>|000>, |011>|100>,
/// |101>|100>, |110>|000> (information registers D A1 A2, then shields).
QuantumState build_example_state();

/// Untwisted QCR state: uniform superposition over the digit-sum-0 strings
/// with every branch carrying the same shield state.
QuantumState build_ghz_qcr(int d, int players, const ShieldSeed& seed, Index dim_cap = kDefaultDimCap);

struct TwistedState {
  QuantumState state;
  VerificationReport report;
};

/// Applies sum_x |x><x| (x) W^x, x running over information strings of
/// (D, A1, ..., AN). Strings in the support of the base must have a key;
/// others default to identity. The result is only a candidate; its
/// verification report is attached.
TwistedState build_twisted_qcr(const QuantumState& base, const TwistingFamily& twist,
                               const VerifyOptions& verify = {});

/// Applies sum_x |x><x|_control (x) U^x on target registers. Missing keys act
/// as identity.
QuantumState apply_controlled(const QuantumState& s, const std::vector<std::string>& control,
                              const std::vector<std::string>& targets, const std::map<Digits, ComplexMatrix>& unitaries,
                              double tol = kDefaultPsdTolerance);

/// |i> -> |-i mod d> on a player's information register; converts between the
/// |i,-i> and |i,i> correlation conventions.
QuantumState negate_digit(const QuantumState& s, const std::string& label);

/// Maximally entangled two-party state in the |i,-i> convention with trivial
/// shields.
QuantumState maximally_entangled(int d);

/// Seeded private state with a random mixed seed and Haar-random twist.
QuantumState random_private_state(int d, Index shield_dim, Rng& rng);

}  // namespace qcr
