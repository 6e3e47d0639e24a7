#include "lietoric/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace lietoric {

ParseError::ParseError(int l, int c, const std::string& msg)
    : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg), line(l), column(c) {}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, const RingPtr& ring, int line, int off) : s_(s), ring_(ring), line_(line), off_(off) {}

  Poly<Rational> run() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    std::vector<Term<Rational>> terms;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term<Rational> t = term();
      if (sign < 0) t.c = -t.c;
      terms.push_back(std::move(t));
      skip();
    }
    return Poly<Rational>(ring_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, off_ + static_cast<int>(pos_) + 1, msg);
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  BigInt integer() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  Term<Rational> term() {
    Term<Rational> t{Monomial{}, Rational(1)};
    bool any = false;
    for (;;) {
      skip();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        BigInt num = integer();
        BigInt den = 1;
        skip();
        if (peek() == '/') {
          ++pos_;
          skip();
          size_t at = pos_;
          den = integer();
          if (den == 0) {
            pos_ = at;
            fail("zero denominator");
          }
        }
        t.c *= Rational(num, den);
      } else if (ident_start(c)) {
        size_t start = pos_;
        while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
        std::string name(s_.substr(start, pos_ - start));
        int idx = ring_->index_of(name);
        if (idx < 0) {
          pos_ = start;
          fail("unknown variable '" + name + "'");
        }
        skip();
        unsigned long e = 1;
        if (peek() == '^') {
          ++pos_;
          skip();
          size_t at = pos_;
          BigInt k = integer();
          if (k > 60000) {
            pos_ = at;
            fail("exponent too large");
          }
          e = k.get_ui();
        }
        unsigned long cur = t.m.e[static_cast<size_t>(idx)];
        if (cur + e > 60000) fail("exponent too large");
        t.m.set(static_cast<size_t>(idx), static_cast<std::uint16_t>(cur + e));
      } else {
        if (!any) fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
        return t;
      }
      any = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        char n = peek();
        if (!std::isdigit(static_cast<unsigned char>(n)) && !ident_start(n)) fail("expected a factor after '*'");
      }
    }
  }

  std::string_view s_;
  const RingPtr& ring_;
  int line_;
  int off_;
  size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Poly<Rational> parse_poly(std::string_view text, const RingPtr& ring, int line, int column_offset) {
  return PolyParser(text, ring, line, column_offset).run();
}

IdealFile parse_ideal_file(std::string_view text) {
  IdealFile out;
  std::vector<std::string> names;
  MonomialOrder order = MonomialOrder::degrevlex();
  bool have_ring = false, have_order = false;
  struct Pending {
    std::string body;
    int line;
    int col;
  };
  std::vector<Pending> gens;
  int lineno = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++lineno;
    start = end + 1;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    std::string_view t = trim(line);
    if (t.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const int indent = static_cast<int>(line.find_first_not_of(" \t"));
    size_t sp = t.find_first_of(" \t");
    std::string_view kw = t.substr(0, sp);
    std::string_view rest = sp == std::string_view::npos ? std::string_view{} : t.substr(sp);
    const int rest_col = indent + static_cast<int>(sp == std::string_view::npos ? t.size() : sp);
    if (kw == "ring") {
      if (have_ring) throw ParseError(lineno, indent + 1, "duplicate ring line");
      have_ring = true;
      std::string buf;
      for (char c : rest) buf += (c == ',' ? ' ' : c);
      std::istringstream is(buf);
      std::string nm;
      while (is >> nm) {
        bool ok = std::isalpha(static_cast<unsigned char>(nm[0])) || nm[0] == '_';
        for (char c : nm) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
        if (!ok) throw ParseError(lineno, indent + 1, "invalid variable name '" + nm + "'");
        names.push_back(nm);
      }
      if (names.empty()) throw ParseError(lineno, indent + 1, "ring line declares no variables");
    } else if (kw == "order") {
      if (have_order) throw ParseError(lineno, indent + 1, "duplicate order line");
      have_order = true;
      std::string_view o = trim(rest);
      if (o == "degrevlex") order = MonomialOrder::degrevlex();
      else if (o == "lex") order = MonomialOrder::lex();
      else throw ParseError(lineno, rest_col + 2, "unknown monomial order '" + std::string(o) + "'");
    } else if (kw == "gen") {
      gens.push_back({std::string(rest), lineno, rest_col});
    } else {
      throw ParseError(lineno, indent + 1, "unknown keyword '" + std::string(kw) + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_ring) throw ParseError(lineno, 1, "missing ring line");
  if (gens.empty()) throw ParseError(lineno, 1, "no generators");
  try {
    out.ring = Ring::make(names, order);
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, 1, e.what());
  }
  for (const auto& g : gens) out.gens.push_back(parse_poly(g.body, out.ring, g.line, g.col));
  return out;
}

IdealFile load_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ideal_file(ss.str());
}

std::string format_ideal_file(const IdealFile& f) {
  std::string s = "ring";
  for (const auto& n : f.ring->names()) s += " " + n;
  s += "\n";
  if (f.ring->order().kind == OrderKind::Lex) s += "order lex\n";
  for (const auto& g : f.gens) s += "gen " + g.to_string() + "\n";
  return s;
}

}  // namespace lietoric
