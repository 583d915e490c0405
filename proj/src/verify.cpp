#include "qcr/verify.hpp"

#include <algorithm>
#include <cmath>

#include "qcr/registers.hpp"
#include "qcr/tensor.hpp"

namespace qcr {
namespace {

// Dealer outcomes below this probability are skipped in condition (ii).
constexpr double kZeroProbability = 1e-12;

}  // namespace

CoalitionSpec CoalitionSpec::from_dishonest(std::vector<int> dishonest, int players) {
  std::sort(dishonest.begin(), dishonest.end());
  CoalitionSpec out;
  for (int k : dishonest) {
    if (k < 1 || k > players) throw LabelError("player index " + std::to_string(k) + " out of range");
    if (!out.dishonest.empty() && out.dishonest.back() == k) throw LabelError("player listed twice in coalition");
    out.dishonest.push_back(k);
  }
  for (int k = 1; k <= players; ++k) {
    if (!std::binary_search(out.dishonest.begin(), out.dishonest.end(), k)) out.honest.push_back(k);
  }
  if (out.honest.empty()) throw LabelError("a coalition must leave at least one honest player");
  return out;
}

std::vector<CoalitionSpec> coalitions(int players, bool exhaustive) {
  std::vector<CoalitionSpec> out;
  for (unsigned mask = 0; mask < (1u << players); ++mask) {
    std::vector<int> dishonest;
    for (int k = 1; k <= players; ++k) {
      if (mask & (1u << (k - 1))) dishonest.push_back(k);
    }
    const int size = static_cast<int>(dishonest.size());
    if (size == players) continue;
    if (!exhaustive && size != players - 1) continue;
    out.push_back(CoalitionSpec::from_dishonest(std::move(dishonest), players));
  }
  return out;
}

std::string VerificationReport::failing_conditions() const {
  if (condition_i.pass && condition_ii.pass) return "none";
  if (!condition_i.pass && !condition_ii.pass) return "condition-i,condition-ii";
  return condition_i.pass ? "condition-ii" : "condition-i";
}

ConditionIReport check_condition_i(const QuantumState& s, double tol) {
  const QcrStructure qs = describe(s.layout());
  const auto labels = qs.info_labels(s.layout());
  const auto probs = outcome_distribution(s, labels);
  const std::vector<Index> dims(labels.size(), qs.d);
  const IndexSet support = index_set(qs.players + 1, 0, qs.d);
  const double expected = 1.0 / static_cast<double>(support.size());

  ConditionIReport out;
  for (std::size_t o = 0; o < probs.size(); ++o) {
    const Digits digits = digits_of(static_cast<Index>(o), dims);
    if (support.contains(digits)) {
      out.max_deviation = std::max(out.max_deviation, std::abs(probs[o] - expected));
    } else {
      out.off_support_mass += std::max(probs[o], 0.0);
    }
    if (probs[o] != 0.0) out.distribution.emplace_back(digits, probs[o]);
  }
  out.pass = out.max_deviation <= tol && out.off_support_mass <= tol;
  return out;
}

std::vector<ComplexMatrix> adversary_states(const QuantumState& s, const CoalitionSpec& coalition,
                                            std::vector<double>* probabilities) {
  const QcrStructure qs = describe(s.layout());
  QuantumState pure;
  if (qs.environment) {
    if (!s.is_pure()) throw LabelError("a mixed state with an environment register cannot be purified again");
    pure = s;
  } else {
    pure = purify(s);
  }
  const Layout& layout = pure.layout();
  const std::size_t dealer_info = qs.dealer.info;
  std::vector<std::size_t> adversary;
  for (int k : coalition.dishonest) {
    const auto& p = qs.player.at(static_cast<std::size_t>(k - 1));
    adversary.push_back(p.info);
    adversary.insert(adversary.end(), p.shields.begin(), p.shields.end());
  }
  adversary.push_back(*layout.environment());

  std::vector<std::size_t> order{dealer_info};
  order.insert(order.end(), adversary.begin(), adversary.end());
  for (std::size_t i : layout.complement(order)) order.push_back(i);
  const QuantumState p = permute(pure, order);

  const Index d = qs.d;
  const Index A = layout.dim_of(adversary);
  const Index R = pure.dim() / (d * A);
  std::vector<ComplexMatrix> out;
  if (probabilities) probabilities->clear();
  for (Index i = 0; i < d; ++i) {
    // Flat index within the dealer block i is a * R + r.
    Eigen::Map<const ComplexMatrix> m(p.vector().data() + i * A * R, R, A);
    ComplexMatrix gamma = m.transpose() * m.conjugate();
    const double prob = gamma.trace().real();
    if (probabilities) probabilities->push_back(prob);
    if (prob <= kZeroProbability) {
      out.emplace_back();
      continue;
    }
    out.push_back(gamma / prob);
  }
  return out;
}

CoalitionReport check_coalition(const QuantumState& s, const CoalitionSpec& coalition, double tol) {
  CoalitionReport out;
  out.coalition = coalition;
  const auto gammas = adversary_states(s, coalition, &out.dealer_probabilities);
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (gammas[i].size() == 0) continue;
    for (std::size_t j = i + 1; j < gammas.size(); ++j) {
      if (gammas[j].size() == 0) continue;
      out.max_distance = std::max(out.max_distance, trace_norm(gammas[i] - gammas[j]));
    }
  }
  out.pass = out.max_distance <= tol;
  return out;
}

ConditionIIReport check_condition_ii(const QuantumState& s, const VerifyOptions& opts) {
  const QcrStructure qs = describe(s.layout());
  // Purify once; every coalition reads the same purification.
  const QuantumState pure = qs.environment ? s : purify(s);
  ConditionIIReport out;
  out.pass = true;
  for (const auto& c : coalitions(qs.players, opts.exhaustive_coalitions)) {
    out.coalitions.push_back(check_coalition(pure, c, opts.tol));
    out.max_distance = std::max(out.max_distance, out.coalitions.back().max_distance);
    out.pass = out.pass && out.coalitions.back().pass;
  }
  return out;
}

VerificationReport is_qcr(const QuantumState& s, const VerifyOptions& opts) {
  VerificationReport out;
  out.tol = opts.tol;
  out.condition_i = check_condition_i(s, opts.tol);
  out.condition_ii = check_condition_ii(s, opts);
  out.verdict = out.condition_i.pass && out.condition_ii.pass;
  return out;
}

}  // namespace qcr
