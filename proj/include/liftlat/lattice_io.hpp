#pragma once

#include <filesystem>

#include "json.hpp"
#include "liftlat/lattice.hpp"

namespace liftlat {

/// Parses the lattice JSON format:
///
///   { "elements": [names...],
///     "order": {"covers": [[lo,hi],...]}  or  {"leq": [[lo,hi],...]},
///     "mul": [[x,y,xy],...],
///     "top": name, "bot": name }
///
/// The order is closed reflexively and transitively; antisymmetry is left
/// to verify_lattice. A mul entry for (x,y) also defines (y,x). Entries
/// involving top or bot that are not given are filled as top*x = x and
/// bot*x = bot; any other missing entry is a LoadError, as is a pair given
/// twice with different products.
LatticeSpec parse_lattice(const nlohmann::json& doc);

/// Reads and parses a lattice file. Throws LoadError on I/O or parse
/// failure.
LatticeSpec load_lattice_file(const std::filesystem::path& path);

/// Inverse of parse_lattice, emitting Hasse covers and the full table.
nlohmann::json lattice_to_json(const FiniteLattice& lattice);

}  // namespace liftlat
