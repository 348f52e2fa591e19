#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sts/core.hpp"
#include "sts/invariants.hpp"

namespace sts {

// Canonical text format: optional '# key: value' comment lines, then the
// order on its own line, then one block per line as three ascending
// 0-based indices, lines sorted. Writing a parsed canonical file reproduces
// it byte for byte; comments are ignored for equality.
using Headers = std::vector<std::pair<std::string, std::string>>;

std::string to_sts_text(const SteinerTripleSystem& s, const Headers& headers = {});

// Throws ParseError (with line numbers), PointOutOfRange, WrongBlockCount,
// and everything SteinerTripleSystem::validate throws.
SteinerTripleSystem parse_sts_text(const std::string& text);

SteinerTripleSystem read_sts_file(const std::filesystem::path& path);
void write_sts_file(const std::filesystem::path& path, const SteinerTripleSystem& s,
                    const Headers& headers = {});

// Key order is part of the schema: n, blocks, alpha, beta, gamma,
// pasch_count, flags{projective, anti_pasch, strongly_anti_pasch,
// enough_pasch}, bounds_ok, degenerate.
nlohmann::ordered_json report_to_json(const InvariantReport& rep);

std::string report_to_table(const InvariantReport& rep);

}  // namespace sts
