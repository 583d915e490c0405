#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qcr/analysis.hpp"
#include "qcr/protocols.hpp"
#include "qcr/state.hpp"
#include "qcr/verify.hpp"

namespace qcr {

inline constexpr int kStateFileVersion = 1;

/// Versioned JSON state document:
///
///   { "format": "qcr-state", "version": 1,
///     "layout": { "d": 2, "players": 2,
///                 "subsystems": [ {"label": "D", "role": "dealer-info", "party": 0, "dim": 2}, ... ] },
///     "representation": "pure" | "density",
///     "data": [[re, im], ...],          // row-major for density matrices
///     "note": "..." }
///
/// "d" and "players" are null for layouts without dealer/player structure.
/// Doubles are written in shortest round-trip form, so reading back a
/// written file reproduces every entry bit for bit.
nlohmann::json state_to_json(const QuantumState& s, const std::string& note = {});
QuantumState state_from_json(const nlohmann::json& doc);

void write_state_file(const std::filesystem::path& path, const QuantumState& s, const std::string& note = {});
QuantumState read_state_file(const std::filesystem::path& path);

nlohmann::json layout_to_json(const Layout& layout);
Layout layout_from_json(const nlohmann::json& doc);

// Report documents, one schema per command ("format": "qcr-<command>-report").
nlohmann::json report_to_json(const VerificationReport& r);
nlohmann::json report_to_json(const PptReport& r);
nlohmann::json report_to_json(const CompositionRecord& r);
nlohmann::json branch_to_json(const ReductionOutcome& r);

}  // namespace qcr
