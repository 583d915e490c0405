#include "qcr/analysis.hpp"

#include <algorithm>

#include "qcr/registers.hpp"
#include "qcr/tensor.hpp"

namespace qcr {

CutSpec CutSpec::from_side_one(const Layout& layout, std::vector<std::string> side_one) {
  CutSpec cut;
  for (const auto& reg : layout) {
    if (reg.role == Role::Environment) continue;
    if (std::find(side_one.begin(), side_one.end(), reg.label) == side_one.end()) cut.side_two.push_back(reg.label);
  }
  cut.side_one = std::move(side_one);
  validate_cut(layout, cut);
  return cut;
}

void validate_cut(const Layout& layout, const CutSpec& cut) {
  if (cut.side_one.empty() || cut.side_two.empty()) throw LabelError("both sides of a cut must be nonempty");
  std::vector<std::string> all = cut.side_one;
  all.insert(all.end(), cut.side_two.begin(), cut.side_two.end());
  const auto pos = layout.positions(all);  // throws on unknown or repeated labels
  std::size_t non_env = 0;
  for (const auto& reg : layout) non_env += reg.role == Role::Environment ? 0 : 1;
  for (std::size_t p : pos) {
    if (layout[p].role == Role::Environment) throw LabelError("cuts may not include the environment register");
  }
  if (pos.size() != non_env) throw LabelError("cut does not cover every non-environment register");
}

PptResult ppt_check(const QuantumState& s, const CutSpec& cut, double tol) {
  validate_cut(s.layout(), cut);
  QuantumState rho = s;
  if (const auto env = s.layout().environment()) {
    const std::vector<std::string> e{s.layout()[*env].label};
    rho = partial_trace(s, std::span<const std::string>(e));
  }
  rho = rho.as_density();
  const ComplexMatrix pt = partial_transpose(rho, std::span<const std::string>(cut.side_two));
  PptResult out;
  out.cut = cut;
  out.min_eigenvalue = hermitian_eigenvalues(pt).minCoeff();
  out.ppt = out.min_eigenvalue >= -tol;
  return out;
}

PptReport all_dealer_cuts_ppt(const QuantumState& s, double tol) {
  const QcrStructure qs = describe(s.layout());
  PptReport report;
  for (unsigned mask = 1; mask < (1u << qs.players); ++mask) {
    std::vector<std::string> side_one = qs.party_labels(s.layout(), kDealerParty);
    std::vector<std::string> side_two;
    for (int k = 1; k <= qs.players; ++k) {
      auto labels = qs.party_labels(s.layout(), k);
      auto& side = (mask & (1u << (k - 1))) ? side_two : side_one;
      side.insert(side.end(), labels.begin(), labels.end());
    }
    report.cuts.push_back(ppt_check(s, {side_one, side_two}, tol));
    report.all_ppt = report.all_ppt && report.cuts.back().ppt;
  }
  return report;
}

PptReport all_register_cuts_ppt(const QuantumState& s, double tol) {
  std::vector<std::string> regs;
  for (const auto& reg : s.layout()) {
    if (reg.role != Role::Environment) regs.push_back(reg.label);
  }
  PptReport report;
  if (regs.size() < 2) return report;
  // Register 0 stays on side one so each unordered cut appears once.
  const unsigned n = static_cast<unsigned>(regs.size());
  for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
    CutSpec cut;
    cut.side_one.push_back(regs[0]);
    for (unsigned k = 1; k < n; ++k) {
      ((mask & (1u << (k - 1))) ? cut.side_two : cut.side_one).push_back(regs[k]);
    }
    report.cuts.push_back(ppt_check(s, cut, tol));
    report.all_ppt = report.all_ppt && report.cuts.back().ppt;
  }
  return report;
}

double trace_distance(const QuantumState& a, const QuantumState& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("trace distance needs equal dimensions (" + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()) + ")");
  }
  return trace_norm(a.density_matrix() - b.density_matrix());
}

}  // namespace qcr
