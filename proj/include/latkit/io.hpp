#pragma once

// Matrix files. Two interchangeable forms:
//   text:  first line "k n", then k lines of n space-separated integers
//   JSON:  {"rows": k, "cols": n, "entries": ["...", ...]} row-major,
//          entries as decimal strings so nothing is ever rounded
// Parsing is exact in both directions.

#include <string>

#include "latkit/int_matrix.hpp"

namespace latkit {

// Sniffs the format: leading '{' means JSON, anything else text.
IntMatrix parse_matrix(const std::string& content);

IntMatrix parse_matrix_text(const std::string& content);
IntMatrix parse_matrix_json(const std::string& content);

// Throws parse_error when the file cannot be read.
IntMatrix read_matrix_file(const std::string& path);

std::string to_text(const IntMatrix& M);
std::string to_json_string(const IntMatrix& M);

// Single-line form like [[1,2],[3,4]] for messages and reports.
std::string to_inline_string(const IntMatrix& M);

}  // namespace latkit
