#include "qcr/construct.hpp"

#include <cmath>

#include "qcr/registers.hpp"
#include "qcr/tensor.hpp"

namespace qcr {
namespace {

Index product(const std::vector<Index>& dims) {
  Index p = 1;
  for (Index d : dims) p *= d;
  return p;
}

// Layout with information registers first (D, A1..AN) then shields (D~, A1~..AN~).
Layout info_first_layout(int d, int players, const std::vector<Index>& shield_dims) {
  std::vector<Subsystem> regs;
  for (int party = 0; party <= players; ++party) {
    regs.push_back({info_label(party), party == kDealerParty ? Role::DealerInfo : Role::PlayerInfo, party, d});
  }
  for (int party = 0; party <= players; ++party) {
    regs.push_back({shield_label(party), party == kDealerParty ? Role::DealerShield : Role::PlayerShield, party,
                    shield_dims.at(static_cast<std::size_t>(party))});
  }
  return Layout(std::move(regs));
}

// sum over support strings x of |x> (x) W^x |seed>, normalized by |support|;
// mixed seeds give sum_{x,y} |x><y| (x) W^x sigma W^y^dagger.
QuantumState assemble(int d, int players, const ShieldSeed& seed, const std::vector<Digits>& support,
                      const std::vector<ComplexMatrix>& twists, Index dim_cap) {
  const Layout layout = info_first_layout(d, players, seed.dims());
  if (layout.total_dim() > dim_cap) {
    throw DimensionError("state dimension " + std::to_string(layout.total_dim()) + " exceeds cap " +
                         std::to_string(dim_cap));
  }
  const std::vector<Index> info_dims(static_cast<std::size_t>(players + 1), d);
  const Index S = seed.total_dim();
  const double weight = 1.0 / static_cast<double>(support.size());
  QuantumState built;
  if (seed.is_pure()) {
    ComplexVector v = ComplexVector::Zero(layout.total_dim());
    for (std::size_t k = 0; k < support.size(); ++k) {
      const Index x = flat_index(support[k], info_dims);
      v.segment(x * S, S) = std::sqrt(weight) * (twists[k] * seed.vector());
    }
    built = QuantumState::pure(layout, std::move(v));
  } else {
    ComplexMatrix m = ComplexMatrix::Zero(layout.total_dim(), layout.total_dim());
    std::vector<ComplexMatrix> left;
    left.reserve(support.size());
    for (const auto& w : twists) left.push_back(w * seed.sigma());
    for (std::size_t k = 0; k < support.size(); ++k) {
      const Index x = flat_index(support[k], info_dims);
      for (std::size_t l = 0; l < support.size(); ++l) {
        const Index y = flat_index(support[l], info_dims);
        m.block(x * S, y * S, S, S) = weight * (left[k] * twists[l].adjoint());
      }
    }
    built = QuantumState::density(layout, std::move(m));
  }
  return canonicalize(built);
}

void require_unitary(const ComplexMatrix& u, Index dim, double tol) {
  if (u.rows() != dim || u.cols() != dim) {
    throw DimensionError("twist unitary is " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                         ", expected " + std::to_string(dim));
  }
  if (!is_unitary(u, tol)) throw NotUnitaryError("twist operator is not unitary within tolerance");
}

}  // namespace

Index ShieldSeed::total_dim() const { return product(dims_); }

ShieldSeed ShieldSeed::trivial(int parties) {
  return pure(std::vector<Index>(static_cast<std::size_t>(parties), 1), ComplexVector::Ones(1));
}

ShieldSeed ShieldSeed::zero(std::vector<Index> dims) {
  ComplexVector v = ComplexVector::Zero(product(dims));
  v(0) = 1;
  return pure(std::move(dims), std::move(v));
}

ShieldSeed ShieldSeed::pure(std::vector<Index> dims, ComplexVector v) {
  ShieldSeed s;
  s.dims_ = std::move(dims);
  if (v.size() != s.total_dim()) throw DimensionError("shield vector does not match shield dimensions");
  if (std::abs(v.squaredNorm() - 1.0) > kDefaultPsdTolerance) throw NotDensityError("shield vector is not normalized");
  s.sigma_ = v * v.adjoint();
  s.pure_ = std::move(v);
  return s;
}

ShieldSeed ShieldSeed::mixed(std::vector<Index> dims, ComplexMatrix sigma) {
  ShieldSeed s;
  s.dims_ = std::move(dims);
  if (sigma.rows() != s.total_dim() || sigma.cols() != s.total_dim()) {
    throw DimensionError("shield matrix does not match shield dimensions");
  }
  if (!check_density(sigma).valid) throw NotDensityError("shield seed is not a valid density matrix");
  s.sigma_ = std::move(sigma);
  return s;
}

QuantumState build_private_state(int d, const ShieldSeed& seed, const TwistingFamily& twist, Index dim_cap) {
  if (d < 2) throw DimensionError("information dimension must be >= 2");
  if (seed.dims().size() != 2) throw DimensionError("a private state has exactly two shield registers");
  if (!twist.targets.empty() && twist.targets != std::vector<std::string>{shield_label(0), shield_label(1)}) {
    throw LabelError("private-state twist must act on D~ A1~");
  }
  if (twist.unitaries.size() != static_cast<std::size_t>(d)) {
    throw LabelError("private-state twist needs exactly d unitaries keyed by the dealer digit");
  }
  std::vector<Digits> support;
  std::vector<ComplexMatrix> twists;
  for (int i = 0; i < d; ++i) {
    const auto it = twist.unitaries.find(Digits{i});
    if (it == twist.unitaries.end()) throw LabelError("twist is missing key " + std::to_string(i));
    require_unitary(it->second, seed.total_dim(), kDefaultPsdTolerance);
    support.push_back({i, mod(-i, d)});
    twists.push_back(it->second);
  }
  return assemble(d, 1, seed, support, twists, dim_cap);
}

QuantumState build_example_state() {
  const std::vector<Index> dims(6, 2);
  // D A1 A2 | D~ A1~ A2~
  const std::vector<Digits> kets{{0, 0, 0, 0, 0, 0}, {0, 1, 1, 1, 0, 0}, {1, 0, 1, 1, 0, 0}, {1, 1, 0, 0, 0, 0}};
  ComplexVector v = ComplexVector::Zero(64);
  for (const auto& k : kets) v(flat_index(k, dims)) = 0.5;
  const Layout layout = info_first_layout(2, 2, {2, 2, 2});
  return canonicalize(QuantumState::pure(layout, std::move(v)));
}

QuantumState build_ghz_qcr(int d, int players, const ShieldSeed& seed, Index dim_cap) {
  if (d < 2) throw DimensionError("information dimension must be >= 2");
  if (players < 1) throw DimensionError("need at least one player");
  if (seed.dims().size() != static_cast<std::size_t>(players + 1)) {
    throw DimensionError("shield seed needs one register per party");
  }
  const IndexSet support = index_set(players + 1, 0, d);
  const std::vector<ComplexMatrix> twists(support.size(),
                                          ComplexMatrix::Identity(seed.total_dim(), seed.total_dim()));
  return assemble(d, players, seed, support.members, twists, dim_cap);
}

QuantumState apply_controlled(const QuantumState& s, const std::vector<std::string>& control,
                              const std::vector<std::string>& targets, const std::map<Digits, ComplexMatrix>& unitaries,
                              double tol) {
  const Layout& layout = s.layout();
  const auto cpos = layout.positions(control);
  const auto tpos = layout.positions(targets);
  for (std::size_t t : tpos) {
    if (std::find(cpos.begin(), cpos.end(), t) != cpos.end()) {
      throw LabelError("register '" + layout[t].label + "' is both control and target");
    }
  }
  std::vector<Index> cdims;
  for (std::size_t c : cpos) cdims.push_back(layout[c].dim);
  const Index T = layout.dim_of(tpos);
  const Index C = layout.dim_of(cpos);

  // Block-diagonal operator over (control, target), identity on missing keys.
  ComplexMatrix op = ComplexMatrix::Identity(C * T, C * T);
  for (const auto& [key, u] : unitaries) {
    require_unitary(u, T, tol);
    const Index x = flat_index(key, cdims);
    op.block(x * T, x * T, T, T) = u;
  }
  std::vector<std::string> on = control;
  on.insert(on.end(), targets.begin(), targets.end());
  return apply_local(s, op, on);
}

TwistedState build_twisted_qcr(const QuantumState& base, const TwistingFamily& twist, const VerifyOptions& verify) {
  const QcrStructure qs = describe(base.layout());
  const auto info = qs.info_labels(base.layout());
  std::vector<std::string> targets = twist.targets;
  if (targets.empty()) {
    for (const auto& reg : base.layout()) {
      if (reg.role == Role::DealerShield || reg.role == Role::PlayerShield) targets.push_back(reg.label);
    }
  }
  // Every string carrying weight in the base must be keyed.
  const auto probs = outcome_distribution(base, info);
  const std::vector<Index> dims(info.size(), qs.d);
  for (std::size_t o = 0; o < probs.size(); ++o) {
    if (probs[o] <= kRankThreshold) continue;
    const Digits key = digits_of(static_cast<Index>(o), dims);
    if (!twist.unitaries.contains(key)) {
      std::string k;
      for (int x : key) k += std::to_string(x);
      throw LabelError("twist has no unitary for support string " + k);
    }
  }
  QuantumState out = apply_controlled(base, info, targets, twist.unitaries);
  VerificationReport report = is_qcr(out, verify);
  return {std::move(out), std::move(report)};
}

QuantumState negate_digit(const QuantumState& s, const std::string& label) {
  const Index d = s.layout()[s.layout().position(label)].dim;
  ComplexMatrix n = ComplexMatrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) n(mod(static_cast<int>(-i), static_cast<int>(d)), i) = 1;
  const std::vector<std::string> on{label};
  return apply_unitary(s, n, std::span<const std::string>(on));
}

QuantumState maximally_entangled(int d) {
  TwistingFamily id;
  for (int i = 0; i < d; ++i) id.unitaries[{i}] = ComplexMatrix::Identity(1, 1);
  return build_private_state(d, ShieldSeed::trivial(2), id);
}

QuantumState random_private_state(int d, Index shield_dim, Rng& rng) {
  const Index S = shield_dim * shield_dim;
  const ShieldSeed seed = ShieldSeed::mixed({shield_dim, shield_dim}, random_density(S, rng));
  TwistingFamily twist;
  for (int i = 0; i < d; ++i) twist.unitaries[{i}] = haar_unitary(S, rng);
  return build_private_state(d, seed, twist);
}

}  // namespace qcr
