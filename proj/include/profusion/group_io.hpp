#pragma once

#include <string>
#include <string_view>

#include "profusion/perm_group.hpp"

namespace profusion {

/// Parses the group text format:
///
///     # comment
///     degree: 4
///     (0 1)
///     (0 1 2 3)
///
/// A single constructor line such as `dihedral(2^4)` may replace the
/// degree and generator lines. Throws ParseError.
PermGroup parse_group_text(std::string_view text);

/// Reads a group file when `spec` names an existing file, otherwise treats
/// `spec` as a constructor name.
PermGroup load_group(const std::string& spec);

/// Writes a group in the text format accepted by parse_group_text.
std::string format_group(const PermGroup& g);

/// Trims surrounding whitespace and drops `#` comments.
std::string strip_line(std::string_view line);

}  // namespace profusion
