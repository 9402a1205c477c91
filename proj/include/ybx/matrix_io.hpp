#pragma once

#include <string>

#include "ybx/types.hpp"

namespace ybx {

// On-disk matrix formats.
//
// JSON (canonical, always written):
//   {"n": rows, "m": cols, "data": [[re, im], ...]}   row-major, n*m pairs.
//
// Plain text (accepted on input): first line "n m", then n whitespace-
// separated rows of complex entries written as "a", "a+bi", "a-bi", "bi" or
// "i". load_matrix sniffs the format from the first non-space character.
//
// All parsers throw ParseError with a human-readable reason; non-finite
// entries are rejected.

ComplexMatrix parse_matrix_json(const std::string& text);
ComplexMatrix parse_matrix_text(const std::string& text);
ComplexMatrix parse_matrix(const std::string& text);

std::string matrix_to_json(const ComplexMatrix& A);

ComplexMatrix load_matrix(const std::string& path);
void save_matrix_json(const std::string& path, const ComplexMatrix& A);

}  // namespace ybx
