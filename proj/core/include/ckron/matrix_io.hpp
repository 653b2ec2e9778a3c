#pragma once

#include <iosfwd>
#include <string>

#include "ckron/cmatrix.hpp"

namespace ckron {

/// Reads the JSON interchange format
///
///   {"rows": m, "cols": n, "data": [[re, im], ...]}
///
/// with row-major data and exactly these field names. Throws ParseError with
/// positional context on malformed input, field mismatches, entry-count
/// mismatches, and non-finite entries.
CMatrix read_matrix(std::istream& in, const std::string& source_name = "<stream>");

CMatrix read_matrix(const std::string& text, const std::string& source_name = "<string>");

/// Throws ParseError when the file cannot be opened.
CMatrix read_matrix_file(const std::string& path);

/// Compact single-line interchange document; floating-point values carry
/// 17 significant digits so doubles round-trip bit-exactly.
std::string matrix_to_json(const CMatrix& m);

void write_matrix(std::ostream& out, const CMatrix& m);
void write_matrix_file(const std::string& path, const CMatrix& m);

/// 17-significant-digit decimal rendering used for every floating-point
/// value this library serializes.
std::string format_double(double value);

}  // namespace ckron
