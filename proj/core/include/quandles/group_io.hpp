#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "quandles/group.hpp"

namespace quandles {

/// Parses the textual group format.
///
/// Two layouts share one grammar. Lines whose first non-blank character is
/// '#' are comments; blank lines are ignored. The first significant line is
/// the header:
///
///   degree N        followed by any number of lines "gen <cycle-notation>"
///   table N         followed by exactly N lines of N 1-based indices each;
///                   element 1 must be the identity
///
/// Errors carry 1-based line numbers.
FiniteGroup parse_group_text(std::string_view text, std::string name,
                             std::uint64_t bound = kDefaultEnumerationBound);

/// Reads and parses a group file; the group is named after the file stem.
FiniteGroup load_group_file(const std::filesystem::path& path,
                            std::uint64_t bound = kDefaultEnumerationBound);

}  // namespace quandles
