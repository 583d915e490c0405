#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcr/layout.hpp"
#include "qcr/state.hpp"

namespace qcr {

/// Digit strings of length `digits` over Z_modulus whose digit sum is
/// congruent to `target`. Members are sorted lexicographically.
struct IndexSet {
  int digits = 0;
  int modulus = 0;
  int target = 0;
  std::vector<Digits> members;

  std::size_t size() const { return members.size(); }
  bool contains(const Digits& s) const;
};

IndexSet index_set(int digits, int target, int modulus);

/// Sum of digits mod d, always in [0, d).
int digit_sum(std::span<const int> digits, int modulus);

inline int mod(int a, int d) { return ((a % d) + d) % d; }

/// Register labels used by canonical layouts.
std::string info_label(int party);
std::string shield_label(int party, int index = 0);

/// Canonical layout D, D~, A1, A1~, ..., AN, AN~. `shield_dims` is empty (all
/// shields trivial) or holds N+1 entries, dealer first. Trivial shields are
/// kept as dimension-1 registers.
Layout standard_layout(int d, int players, std::span<const Index> shield_dims = {});

struct PartyRegisters {
  int party = 0;
  std::size_t info = 0;
  std::vector<std::size_t> shields;
};

/// Role structure of a QCR layout: one dealer-info register and one info
/// register per player, all of dimension d, plus shields and at most one
/// environment register.
struct QcrStructure {
  int d = 0;
  int players = 0;
  PartyRegisters dealer;
  std::vector<PartyRegisters> player;  // player[k-1] is party k
  std::optional<std::size_t> environment;

  std::vector<std::string> info_labels(const Layout& layout) const;
  std::vector<std::string> party_labels(const Layout& layout, int party) const;
};

QcrStructure describe(const Layout& layout);

/// Dealer registers, players in index order, environment last; information
/// register before shields within a party, shields in their current order.
std::vector<std::size_t> canonical_order(const Layout& layout);

/// Renames registers to the canonical scheme (D, D~, D~2, A1, A1~, ..., E).
Layout with_canonical_labels(const Layout& layout);

/// Reorders into canonical order and applies canonical labels.
QuantumState canonicalize(const QuantumState& s);

}  // namespace qcr
