#pragma once

#include <string>
#include <vector>

#include "qcr/layout.hpp"
#include "qcr/state.hpp"

namespace qcr::test {

/// Plain registers R0, R1, ... without dealer/player structure.
inline Layout plain_layout(const std::vector<Index>& dims) {
  std::vector<Subsystem> regs;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    regs.push_back({"R" + std::to_string(k), Role::PlayerShield, 1, dims[k]});
  }
  return Layout(std::move(regs));
}

inline std::vector<std::string> labels(std::initializer_list<const char*> l) { return {l.begin(), l.end()}; }

}  // namespace qcr::test
