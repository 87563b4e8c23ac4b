#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "latcon/lattice.hpp"

namespace latcon {

/// {"elements": [...], "covers": [[lower, upper], ...]}. Elements keep
/// index order; covers are sorted lexicographically by (lower, upper) label.
nlohmann::json to_json(const Lattice& lattice);

/// Inverse of to_json(). Unknown keys are ignored. Throws IoError on a
/// malformed document and the usual construction errors otherwise.
Lattice lattice_from_json(const nlohmann::json& document);

Lattice read_lattice_file(const std::filesystem::path& path);

/// Hasse diagram in DOT: one node per element, one edge per cover pointing
/// upward, drawn bottom-to-top.
std::string to_dot(const Lattice& lattice, const std::string& graph_name = "L");

}  // namespace latcon
