#pragma once

// Text formats: polynomials, ideal files.
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := int ['/' int] | var ['^' int]
//
// An ideal file has one `ring` line listing variable names, an optional
// `order degrevlex|lex` line, and one `gen <poly>` line per generator.
// `#` starts a comment.

#include "lietoric/poly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lietoric {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg);
  int line;
  int column;
};

/// Columns in errors are 1-based; `line` is only used for messages.
Poly<Rational> parse_poly(std::string_view text, const RingPtr& ring, int line = 1, int column_offset = 0);

struct IdealFile {
  RingPtr ring;
  std::vector<Poly<Rational>> gens;
};

IdealFile parse_ideal_file(std::string_view text);
IdealFile load_ideal_file(const std::string& path);
std::string format_ideal_file(const IdealFile& f);

}  // namespace lietoric
