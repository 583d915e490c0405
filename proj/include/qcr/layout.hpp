#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcr/errors.hpp"

namespace qcr {

using Index = Eigen::Index;
using Digits = std::vector<int>;

enum class Role { DealerInfo, DealerShield, PlayerInfo, PlayerShield, Environment };

inline constexpr int kDealerParty = 0;
inline constexpr int kNoParty = -1;

inline std::string_view role_name(Role r) {
  switch (r) {
    case Role::DealerInfo: return "dealer-info";
    case Role::DealerShield: return "dealer-shield";
    case Role::PlayerInfo: return "player-info";
    case Role::PlayerShield: return "player-shield";
    case Role::Environment: return "environment";
  }
  return "unknown";
}

inline std::optional<Role> role_from_name(std::string_view name) {
  for (Role r : {Role::DealerInfo, Role::DealerShield, Role::PlayerInfo, Role::PlayerShield,
                 Role::Environment}) {
    if (role_name(r) == name) return r;
  }
  return std::nullopt;
}

inline bool is_info_role(Role r) { return r == Role::DealerInfo || r == Role::PlayerInfo; }

/// One labeled register. `party` is 0 for the dealer, k >= 1 for player k and
/// kNoParty for the environment.
struct Subsystem {
  std::string label;
  Role role = Role::DealerInfo;
  int party = kDealerParty;
  Index dim = 1;

  friend bool operator==(const Subsystem&, const Subsystem&) = default;
};

/// Ordered list of registers. The first register is the most significant
/// digit of the flat (Kronecker) index.
class Layout {
 public:
  Layout() = default;

  explicit Layout(std::vector<Subsystem> subsystems) : subsystems_(std::move(subsystems)) {
    for (std::size_t i = 0; i < subsystems_.size(); ++i) {
      if (subsystems_[i].dim < 1) {
        throw DimensionError("register '" + subsystems_[i].label + "' has dimension < 1");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (subsystems_[j].label == subsystems_[i].label) {
          throw LabelError("duplicate register label '" + subsystems_[i].label + "'");
        }
      }
    }
  }

  const std::vector<Subsystem>& subsystems() const { return subsystems_; }
  std::size_t size() const { return subsystems_.size(); }
  bool empty() const { return subsystems_.empty(); }
  const Subsystem& operator[](std::size_t i) const { return subsystems_[i]; }
  auto begin() const { return subsystems_.begin(); }
  auto end() const { return subsystems_.end(); }

  std::vector<Index> dims() const {
    std::vector<Index> out;
    out.reserve(subsystems_.size());
    for (const auto& s : subsystems_) out.push_back(s.dim);
    return out;
  }

  Index total_dim() const {
    Index total = 1;
    for (const auto& s : subsystems_) total *= s.dim;
    return total;
  }

  bool contains(std::string_view label) const {
    return std::any_of(subsystems_.begin(), subsystems_.end(),
                       [&](const Subsystem& s) { return s.label == label; });
  }

  std::size_t position(std::string_view label) const {
    for (std::size_t i = 0; i < subsystems_.size(); ++i) {
      if (subsystems_[i].label == label) return i;
    }
    throw LabelError("unknown register label '" + std::string(label) + "'");
  }

  std::vector<std::size_t> positions(std::span<const std::string> labels) const {
    std::vector<std::size_t> out;
    out.reserve(labels.size());
    for (const auto& l : labels) {
      const std::size_t p = position(l);
      if (std::find(out.begin(), out.end(), p) != out.end()) {
        throw LabelError("register label '" + l + "' listed twice");
      }
      out.push_back(p);
    }
    return out;
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& s : subsystems_) out.push_back(s.label);
    return out;
  }

  Index dim_of(std::span<const std::size_t> pos) const {
    Index total = 1;
    for (std::size_t p : pos) total *= subsystems_.at(p).dim;
    return total;
  }

  Layout select(std::span<const std::size_t> pos) const {
    std::vector<Subsystem> out;
    out.reserve(pos.size());
    for (std::size_t p : pos) out.push_back(subsystems_.at(p));
    return Layout(std::move(out));
  }

  std::vector<std::size_t> complement(std::span<const std::size_t> pos) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < subsystems_.size(); ++i) {
      if (std::find(pos.begin(), pos.end(), i) == pos.end()) out.push_back(i);
    }
    return out;
  }

  Layout concatenated(const Layout& other) const {
    std::vector<Subsystem> out = subsystems_;
    out.insert(out.end(), other.subsystems_.begin(), other.subsystems_.end());
    return Layout(std::move(out));
  }

  Layout with_subsystem(Subsystem s) const {
    std::vector<Subsystem> out = subsystems_;
    out.push_back(std::move(s));
    return Layout(std::move(out));
  }

  std::optional<std::size_t> environment() const {
    for (std::size_t i = 0; i < subsystems_.size(); ++i) {
      if (subsystems_[i].role == Role::Environment) return i;
    }
    return std::nullopt;
  }

  friend bool operator==(const Layout&, const Layout&) = default;

 private:
  std::vector<Subsystem> subsystems_;
};

inline Index flat_index(std::span<const int> digits, std::span<const Index> dims) {
  if (digits.size() != dims.size()) throw DimensionError("digit count does not match register count");
  Index flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (digits[k] < 0 || digits[k] >= dims[k]) throw DimensionError("digit out of range");
    flat = flat * dims[k] + digits[k];
  }
  return flat;
}

inline Digits digits_of(Index flat, std::span<const Index> dims) {
  Digits out(dims.size(), 0);
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = static_cast<int>(flat % dims[k]);
    flat /= dims[k];
  }
  return out;
}

}  // namespace qcr
