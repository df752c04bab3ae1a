#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qgv/symplectic.hpp"

namespace qgv {

// Text format "sympcode v1":
//   sympcode v1
//   q=<int> [modulus=<c0,c1,...>]
//   n=<int>
//   k=<int>
//   k rows of 2n space-separated symbols, a-part then b-part
// Rows need not be in RREF; they are canonicalized on load.

void write_code(std::ostream& os, const SympCode& code);
std::string format_code(const SympCode& code);

/// Throws ParseError on malformed headers, wrong row counts or lengths,
/// out-of-range symbols, and linearly dependent rows.
SympCode read_code(std::istream& is);
SympCode parse_code(const std::string& text);

/// Codes separated by blank lines, as written by the enumerate subcommand.
void write_code_list(std::ostream& os, const std::vector<SympCode>& codes);
std::vector<SympCode> read_code_list(std::istream& is);

/// Parses "a1,..,an|b1,..,bn".
SympVector parse_symp_vector(const std::string& text, const Field& f);
std::string format_symp_vector(const SympVector& v);

}  // namespace qgv
