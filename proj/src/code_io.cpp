#include "qgv/code_io.hpp"

#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "qgv/errors.hpp"

namespace qgv {

namespace {

std::uint64_t parse_uint(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::uint32_t> parse_list(std::string_view s, const char* what) {
  std::vector<std::uint32_t> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const auto piece = s.substr(start, comma == std::string_view::npos ? s.size() - start : comma - start);
    out.push_back(static_cast<std::uint32_t>(parse_uint(piece, what)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::uint64_t parse_keyed(const std::string& line, std::string_view key) {
  std::string_view s = strip(line);
  if (s.substr(0, key.size()) != key || s.size() <= key.size() || s[key.size()] != '=') {
    throw ParseError("expected '" + std::string(key) + "=<int>', got '" + line + "'");
  }
  return parse_uint(s.substr(key.size() + 1), key.data());
}

bool next_line(std::istream& is, std::string& line) {
  if (!std::getline(is, line)) return false;
  line = std::string(strip(line));
  return true;
}

// Reads one code whose magic line has already been consumed.
SympCode read_body(std::istream& is) {
  std::string line;
  if (!next_line(is, line)) throw ParseError("missing field line");
  std::istringstream field_line(line);
  std::string q_tok, mod_tok, extra;
  field_line >> q_tok >> mod_tok >> extra;
  if (!extra.empty()) throw ParseError("unexpected content on field line: '" + line + "'");
  if (q_tok.rfind("q=", 0) != 0) throw ParseError("expected 'q=<int>', got '" + line + "'");
  const auto q = parse_uint(std::string_view(q_tok).substr(2), "q");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (!mod_tok.empty()) {
    if (mod_tok.rfind("modulus=", 0) != 0) throw ParseError("expected 'modulus=<c0,c1,...>', got '" + mod_tok + "'");
    modulus = parse_list(std::string_view(mod_tok).substr(8), "modulus coefficient");
  }
  if (q > std::numeric_limits<std::uint32_t>::max()) throw ParseError("q out of range");
  Field f = [&] {
    try {
      return Field::of_order(static_cast<std::uint32_t>(q), modulus);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }();

  if (!next_line(is, line)) throw ParseError("missing 'n=' line");
  const auto n = parse_keyed(line, "n");
  if (n == 0) throw ParseError("n must be positive");
  if (!next_line(is, line)) throw ParseError("missing 'k=' line");
  const auto k = parse_keyed(line, "k");
  if (k > 2 * n) throw ParseError("k exceeds 2n");

  Matrix rows(0, 2 * n);
  std::vector<Element> row;
  for (std::uint64_t r = 0; r < k; ++r) {
    if (!next_line(is, line) || line.empty()) {
      throw ParseError("expected " + std::to_string(k) + " generator rows, found " + std::to_string(r));
    }
    std::istringstream toks(line);
    row.clear();
    std::string tok;
    while (toks >> tok) {
      const auto v = parse_uint(tok, "symbol");
      if (v >= f.q()) throw ParseError("symbol " + tok + " outside [0, " + std::to_string(f.q()) + ")");
      row.push_back(static_cast<Element>(v));
    }
    if (row.size() != 2 * n) {
      throw ParseError("row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) +
                       " symbols, expected " + std::to_string(2 * n));
    }
    rows.append_row(row);
  }
  SympCode code = code_from_rows(f, n, rows);
  if (code.k() != k) throw ParseError("generator rows are linearly dependent");
  return code;
}

}  // namespace

void write_code(std::ostream& os, const SympCode& code) {
  const Field& f = code.field();
  os << "sympcode v1\n";
  os << "q=" << f.q();
  if (f.m() > 1) {
    os << " modulus=";
    for (std::size_t i = 0; i < f.modulus().size(); ++i) os << (i ? "," : "") << f.modulus()[i];
  }
  os << "\nn=" << code.n() << "\nk=" << code.k() << "\n";
  for (std::size_t r = 0; r < code.k(); ++r) {
    auto row = code.generators().row(r);
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << "\n";
  }
}

std::string format_code(const SympCode& code) {
  std::ostringstream os;
  write_code(os, code);
  return os.str();
}

SympCode read_code(std::istream& is) {
  std::string line;
  if (!next_line(is, line) || line != "sympcode v1") throw ParseError("missing 'sympcode v1' header");
  SympCode code = read_body(is);
  while (next_line(is, line)) {
    if (!line.empty()) throw ParseError("trailing content after code: '" + line + "'");
  }
  return code;
}

SympCode parse_code(const std::string& text) {
  std::istringstream is(text);
  return read_code(is);
}

void write_code_list(std::ostream& os, const std::vector<SympCode>& codes) {
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) os << "\n";
    write_code(os, codes[i]);
  }
}

std::vector<SympCode> read_code_list(std::istream& is) {
  std::vector<SympCode> out;
  std::string line;
  while (next_line(is, line)) {
    if (line.empty()) continue;
    if (line != "sympcode v1") throw ParseError("expected 'sympcode v1', got '" + line + "'");
    out.push_back(read_body(is));
  }
  return out;
}

SympVector parse_symp_vector(const std::string& text, const Field& f) {
  const auto bar = text.find('|');
  if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos) {
    throw ParseError("vector must look like 'a1,..,an|b1,..,bn'");
  }
  auto a = parse_list(strip(std::string_view(text).substr(0, bar)), "vector entry");
  auto b = parse_list(strip(std::string_view(text).substr(bar + 1)), "vector entry");
  if (a.size() != b.size()) throw ParseError("vector halves differ in length");
  for (auto x : a) if (!f.contains(x)) throw ParseError("vector entry outside [0, q)");
  for (auto x : b) if (!f.contains(x)) throw ParseError("vector entry outside [0, q)");
  return SympVector(a, b);
}

std::string format_symp_vector(const SympVector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.n(); ++i) os << (i ? "," : "") << v.a()[i];
  os << "|";
  for (std::size_t i = 0; i < v.n(); ++i) os << (i ? "," : "") << v.b()[i];
  return os.str();
}

}  // namespace qgv
