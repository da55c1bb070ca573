// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gcodelab/gcode.hpp"
#include "gcodelab/sweep.hpp"

namespace gcodelab {

/// Builtin group names: cyclic:N, dihedral:M, symmetric:K, quaternion8 (or q8),
/// elemabelian:P,M, trivial, and direct products A*B (left associative).
GroupPtr parse_group_spec(std::string_view spec);

/// {"name", "order", "table", "labels"}
nlohmann::json group_to_json(const Group& g);
/// Accepts a full group object (re-audited) or a builtin name string.
GroupPtr group_from_json(const nlohmann::json& j);

/// {"group": <group object>, "p": p, "basis": [[...]]} with the canonical RREF basis.
nlohmann::json code_to_json(const GCode& c);
/// Re-reduces the basis and re-verifies ideal closure.
GCode code_from_json(const nlohmann::json& j);

/// {"checked": n, "failures": [{"check", "subject", "message"}]}
nlohmann::json report_to_json(const SweepReport& r);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace gcodelab
