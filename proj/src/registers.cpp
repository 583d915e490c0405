#include "qcr/registers.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "qcr/tensor.hpp"

namespace qcr {

bool IndexSet::contains(const Digits& s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

int digit_sum(std::span<const int> digits, int modulus) {
  if (modulus < 1) throw DimensionError("modulus must be positive");
  long long sum = 0;
  for (int x : digits) {
    if (x < 0 || x >= modulus) {
      throw DimensionError("digit " + std::to_string(x) + " out of range for modulus " + std::to_string(modulus));
    }
    sum += x;
  }
  return static_cast<int>(sum % modulus);
}

IndexSet index_set(int digits, int target, int modulus) {
  if (modulus < 2) throw DimensionError("index set modulus must be >= 2");
  if (digits < 1) throw DimensionError("index set needs at least one digit");
  if (target < 0 || target >= modulus) throw DimensionError("target residue out of range");
  IndexSet out{digits, modulus, target, {}};
  // The leading digits run over Z_d^(k-1) in lexicographic order; the last
  // digit is fixed by the target.
  long long count = 1;
  for (int k = 1; k < digits; ++k) count *= modulus;
  out.members.reserve(static_cast<std::size_t>(count));
  const std::vector<Index> free_dims(static_cast<std::size_t>(digits - 1), modulus);
  for (long long c = 0; c < count; ++c) {
    Digits s = digits_of(c, free_dims);
    int partial = 0;
    for (int x : s) partial += x;
    s.push_back(mod(target - partial, modulus));
    out.members.push_back(std::move(s));
  }
  return out;
}

std::string info_label(int party) {
  return party == kDealerParty ? std::string("D") : "A" + std::to_string(party);
}

std::string shield_label(int party, int index) {
  std::string base = info_label(party) + "~";
  return index == 0 ? base : base + std::to_string(index + 1);
}

Layout standard_layout(int d, int players, std::span<const Index> shield_dims) {
  if (d < 2) throw DimensionError("information dimension must be >= 2");
  if (players < 1) throw DimensionError("a layout needs at least one player");
  if (!shield_dims.empty() && shield_dims.size() != static_cast<std::size_t>(players + 1)) {
    throw DimensionError("expected " + std::to_string(players + 1) + " shield dimensions");
  }
  std::vector<Subsystem> regs;
  for (int party = 0; party <= players; ++party) {
    const bool dealer = party == kDealerParty;
    const Index sdim = shield_dims.empty() ? 1 : shield_dims[static_cast<std::size_t>(party)];
    regs.push_back({info_label(party), dealer ? Role::DealerInfo : Role::PlayerInfo, party, d});
    regs.push_back({shield_label(party), dealer ? Role::DealerShield : Role::PlayerShield, party, sdim});
  }
  return Layout(std::move(regs));
}

std::vector<std::string> QcrStructure::info_labels(const Layout& layout) const {
  std::vector<std::string> out{layout[dealer.info].label};
  for (const auto& p : player) out.push_back(layout[p.info].label);
  return out;
}

std::vector<std::string> QcrStructure::party_labels(const Layout& layout, int party) const {
  const PartyRegisters& p = party == kDealerParty ? dealer : player.at(static_cast<std::size_t>(party - 1));
  std::vector<std::string> out{layout[p.info].label};
  for (std::size_t s : p.shields) out.push_back(layout[s].label);
  return out;
}

QcrStructure describe(const Layout& layout) {
  std::map<int, PartyRegisters> parties;
  std::map<int, int> info_count;
  QcrStructure out;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const Subsystem& s = layout[i];
    switch (s.role) {
      case Role::Environment:
        if (out.environment) throw LabelError("layout has more than one environment register");
        out.environment = i;
        continue;
      case Role::DealerInfo:
      case Role::DealerShield:
        if (s.party != kDealerParty) throw LabelError("dealer register '" + s.label + "' not owned by party 0");
        break;
      case Role::PlayerInfo:
      case Role::PlayerShield:
        if (s.party < 1) throw LabelError("player register '" + s.label + "' has invalid party index");
        break;
    }
    auto& p = parties[s.party];
    p.party = s.party;
    if (is_info_role(s.role)) {
      ++info_count[s.party];
      p.info = i;
    } else {
      p.shields.push_back(i);
    }
  }
  if (!parties.contains(kDealerParty)) throw LabelError("layout has no dealer registers");
  const int players = static_cast<int>(parties.size()) - 1;
  if (players < 1) throw LabelError("layout has no players");
  for (int k = 0; k <= players; ++k) {
    if (!parties.contains(k)) throw LabelError("player indices are not contiguous 1..N");
    if (info_count[k] != 1) {
      throw LabelError("party " + std::to_string(k) + " must own exactly one information register");
    }
  }
  out.d = static_cast<int>(layout[parties[0].info].dim);
  out.players = players;
  out.dealer = parties[0];
  for (int k = 1; k <= players; ++k) {
    if (layout[parties[k].info].dim != out.d) {
      throw LabelError("information registers must share dimension d = " + std::to_string(out.d));
    }
    out.player.push_back(parties[k]);
  }
  if (out.d < 2) throw LabelError("information dimension must be >= 2");
  return out;
}

std::vector<std::size_t> canonical_order(const Layout& layout) {
  std::vector<std::size_t> order(layout.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto key = [&](std::size_t i) {
    const Subsystem& s = layout[i];
    const int party = s.role == Role::Environment ? std::numeric_limits<int>::max() : s.party;
    return std::pair{party, is_info_role(s.role) ? 0 : 1};
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  return order;
}

Layout with_canonical_labels(const Layout& layout) {
  std::vector<Subsystem> regs = layout.subsystems();
  std::map<int, int> shield_index;
  int env_count = 0;
  for (auto& s : regs) {
    if (s.role == Role::Environment) {
      s.label = env_count++ == 0 ? "E" : "E" + std::to_string(env_count);
    } else if (is_info_role(s.role)) {
      s.label = info_label(s.party);
    } else {
      s.label = shield_label(s.party, shield_index[s.party]++);
    }
  }
  return Layout(std::move(regs));
}

QuantumState canonicalize(const QuantumState& s) {
  const auto order = canonical_order(s.layout());
  const QuantumState p = permute(s, order);
  return p.relabeled(with_canonical_labels(p.layout()));
}

}  // namespace qcr
