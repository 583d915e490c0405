#include "qcr/protocols.hpp"

#include <algorithm>
#include <random>

#include "qcr/registers.hpp"
#include "qcr/tensor.hpp"

namespace qcr {
namespace {

void certify(const QuantumState& s, double tol, const char* what) {
  const VerificationReport r = is_qcr(s, {tol, false});
  if (!r.verdict) {
    throw CertificationError(std::string(what) + " is not a QCR state (failing: " + r.failing_conditions() + ")");
  }
}

}  // namespace

ComplexMatrix modular_shift(int d, int shift) {
  ComplexMatrix w = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) w(mod(i + shift, d), i) = 1;
  return w;
}

ComplexMatrix controlled_add(int d) {
  ComplexMatrix cx = ComplexMatrix::Zero(d * d, d * d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) cx(mod(j + k, d) * d + k, j * d + k) = 1;
  }
  return cx;
}

std::vector<ReductionOutcome> reduce(const QuantumState& s, const std::vector<int>& measured_players,
                                     const ReduceOptions& opts) {
  const QcrStructure qs = describe(s.layout());
  if (qs.environment) throw LabelError("reduce expects a state without an environment register");
  std::vector<int> measured = measured_players;
  std::sort(measured.begin(), measured.end());
  if (measured.empty()) throw LabelError("at least one player must measure");
  if (std::adjacent_find(measured.begin(), measured.end()) != measured.end()) {
    throw LabelError("player listed twice");
  }
  if (measured.front() < 1 || measured.back() > qs.players) throw LabelError("player index out of range");
  if (static_cast<int>(measured.size()) == qs.players) throw LabelError("at least one player must be kept");
  if (!opts.waive_certification) certify(s, opts.tol, "reduce input");

  const Layout& layout = s.layout();
  std::vector<std::string> measured_info;
  std::vector<std::string> traced;
  std::vector<int> kept;
  for (int k = 1; k <= qs.players; ++k) {
    if (std::binary_search(measured.begin(), measured.end(), k)) {
      measured_info.push_back(layout[qs.player[k - 1].info].label);
      for (const auto& l : qs.party_labels(layout, k)) traced.push_back(l);
    } else {
      kept.push_back(k);
    }
  }
  if (opts.outcome && opts.outcome->size() != measured.size()) {
    throw DimensionError("branch selection needs one digit per measured player");
  }

  auto branches = measure_computational(s, std::span<const std::string>(measured_info));
  if (opts.outcome) {
    std::erase_if(branches, [&](const auto& b) { return b.outcome != *opts.outcome; });
    if (branches.empty()) throw DimensionError("selected branch has zero probability");
  } else if (opts.sample_seed) {
    std::mt19937_64 rng(*opts.sample_seed);
    std::vector<double> weights;
    for (const auto& b : branches) weights.push_back(b.probability);
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    auto chosen = branches[pick(rng)];
    branches = {std::move(chosen)};
  }

  const std::string dealer = layout[qs.dealer.info].label;
  std::vector<ReductionOutcome> out;
  for (auto& b : branches) {
    ReductionOutcome r;
    r.measured = b.outcome;
    r.probability = b.probability;
    r.announced = digit_sum(b.outcome, qs.d);
    r.correction_applied = r.announced != 0;
    r.kept_players = kept;
    QuantumState post = b.post;
    if (r.correction_applied) {
      const std::vector<std::string> on{dealer};
      post = apply_unitary(post, modular_shift(qs.d, r.announced), std::span<const std::string>(on));
    }
    QuantumState reduced = partial_trace(post, std::span<const std::string>(traced));
    // Renumber kept players 1..M.
    std::vector<Subsystem> regs = reduced.layout().subsystems();
    for (auto& reg : regs) {
      if (reg.party >= 1) {
        reg.party = static_cast<int>(std::find(kept.begin(), kept.end(), reg.party) - kept.begin()) + 1;
      }
    }
    r.state = canonicalize(reduced.relabeled(Layout(std::move(regs))));
    out.push_back(std::move(r));
  }
  return out;
}

Composition compose(const QuantumState& first, const QuantumState& second, const ComposeOptions& opts) {
  const QcrStructure qa = describe(first.layout());
  QcrStructure qb;
  try {
    qb = describe(second.layout());
  } catch (const LabelError& e) {
    throw LabelError(std::string("second compose input is not a dealer/player layout: ") + e.what());
  }
  if (qa.environment || qb.environment) throw LabelError("compose expects states without environment registers");
  if (qa.d != qb.d) {
    throw DimensionError("information dimensions differ: " + std::to_string(qa.d) + " vs " + std::to_string(qb.d));
  }
  if (!opts.force) {
    certify(first, opts.tol, "first compose input");
    certify(second, opts.tol, "second compose input");
  }

  // Prefix the second input's labels so the concatenated layout is unique.
  std::vector<Subsystem> regs_b = second.layout().subsystems();
  for (auto& reg : regs_b) reg.label = "second:" + reg.label;
  const QuantumState b = second.relabeled(Layout(regs_b));
  const QuantumState joint = tensor_product(first, b, opts.dim_cap);

  const std::string target = first.layout()[qa.dealer.info].label;
  const std::string control = b.layout()[qb.dealer.info].label;
  const std::vector<std::string> on{target, control};
  const QuantumState mixed = apply_unitary(joint, controlled_add(qa.d), std::span<const std::string>(on));

  std::vector<Subsystem> regs = mixed.layout().subsystems();
  const std::size_t offset = first.layout().size();
  for (std::size_t i = offset; i < regs.size(); ++i) {
    auto& reg = regs[i];
    if (reg.role == Role::DealerInfo) reg.role = Role::DealerShield;
    if (reg.party >= 1) reg.party += qa.players;
  }
  const QuantumState retagged = mixed.relabeled(Layout(regs));
  const auto order = canonical_order(retagged.layout());
  const QuantumState ordered = permute(retagged, order);
  const Layout canonical = with_canonical_labels(ordered.layout());

  CompositionRecord record;
  record.first = first.layout();
  record.second = second.layout();
  record.merged = canonical;
  record.unitary = "cX";
  record.target_label = target;
  record.control_label = second.layout()[qb.dealer.info].label;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] >= offset) {
      record.second_relabeling.emplace_back(second.layout()[order[k] - offset].label, canonical[k].label);
    }
  }
  return {ordered.relabeled(canonical), std::move(record)};
}

QuantumState expand_from_private(std::span<const QuantumState> privates, const ComposeOptions& opts) {
  if (privates.empty()) throw DimensionError("expand_from_private needs at least one state");
  for (const auto& p : privates) {
    if (describe(p.layout()).players != 1) throw LabelError("expand_from_private takes two-party states");
  }
  QuantumState acc = privates.front();
  if (!opts.force) certify(acc, opts.tol, "first private state");
  ComposeOptions inner = opts;
  for (std::size_t k = 1; k < privates.size(); ++k) {
    if (!opts.force) certify(privates[k], opts.tol, "private state");
    // The accumulated state is not re-certified.
    inner.force = true;
    acc = compose(acc, privates[k], inner).state;
  }
  return acc;
}

}  // namespace qcr
