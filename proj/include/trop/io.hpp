#pragma once

#include <string>
#include <string_view>

#include "trop/matrix.hpp"

namespace trop {

/// Parses either supported matrix text form:
///   plain  — first line `m n`, then m rows of n whitespace-separated
///            scalar tokens (`p/q`, ghost suffix `g`, `-inf`);
///   json   — {"rows": [[{"v": "p/q", "g": bool} | {"neginf": true}, ...]]}.
/// Dispatch is on the first non-space character.  Throws ParseError with a
/// line/column position for plain text.
Matrix parse_matrix(std::string_view text);

/// Canonical plain rendering; parse(format(A)) == A and the round trip is
/// byte-identical on canonical output.
std::string format_matrix_plain(const Matrix& a);

/// Canonical structured rendering of the same payload.
std::string format_matrix_json(const Matrix& a);

/// Reads a whole file; throws Error when the file cannot be opened.
std::string read_file(const std::string& path);

}  // namespace trop
