#include "hpga/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include <json.hpp>

namespace hpga {
namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t line_start = 0;

  std::size_t column() const { return pos - line_start + 1; }
  bool eof() const { return pos >= text.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos + ahead < text.size() ? text[pos + ahead] : '\0';
  }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      line_start = pos + 1;
    }
    ++pos;
  }
  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
  }
  [[noreturn]] void fail_here(errc code, const std::string& msg) const {
    throw parse_error(code, msg + " at line " + std::to_string(line) + ", column " +
                                std::to_string(column()),
                      line, column());
  }
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Reads digits [. digits] [e SIGN digits]. A bare 'e' followed by a digit is
// left in place for the blade that follows.
double read_number(Cursor& cur) {
  std::size_t start = cur.pos;
  while (is_digit(cur.peek())) cur.advance();
  if (cur.peek() == '.') {
    cur.advance();
    while (is_digit(cur.peek())) cur.advance();
  }
  if ((cur.peek() == 'e' || cur.peek() == 'E') &&
      (cur.peek(1) == '+' || cur.peek(1) == '-') && is_digit(cur.peek(2))) {
    cur.advance();
    cur.advance();
    while (is_digit(cur.peek())) cur.advance();
  }
  double value = 0.0;
  auto first = cur.text.data() + start;
  auto last = cur.text.data() + cur.pos;
  auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last)
    cur.fail_here(errc::syntax_error, "malformed number");
  return value;
}

bool starts_integer(const Cursor& cur) { return is_digit(cur.peek()); }

bool starts_blade(const Cursor& cur) {
  return cur.peek() == 'e' && is_digit(cur.peek(1));
}

// Reads 'e' digit+ and folds the written generator order to canonical,
// counting transpositions for the sign.
std::pair<unsigned, double> read_blade(Cursor& cur, const Algebra& alg) {
  cur.advance();  // 'e'
  int gens[8];
  int len = 0;
  while (is_digit(cur.peek())) {
    int g = cur.peek() - '0';
    if (g > alg.dim)
      cur.fail_here(errc::unknown_generator,
                    "generator e" + std::string(1, cur.peek()) + " does not exist in " +
                        space_name(alg.space));
    if (len >= 8) cur.fail_here(errc::syntax_error, "blade has too many factors");
    gens[len++] = g;
    cur.advance();
  }
  double sign = 1.0;
  for (int i = 1; i < len; ++i)  // insertion sort, counting swaps
    for (int j = i; j > 0 && gens[j - 1] > gens[j]; --j) {
      std::swap(gens[j - 1], gens[j]);
      sign = -sign;
    }
  unsigned mask = 0;
  for (int i = 0; i < len; ++i) {
    if (mask & (1u << gens[i]))
      cur.fail_here(errc::duplicate_generator_in_blade,
                    "generator repeated within one blade");
    mask |= 1u << gens[i];
  }
  return {mask, sign};
}

// One term: [coef ['*']] blade | coef | blade. Adds into out.
void read_term(Cursor& cur, const Algebra& alg, double sign, Multivector& out) {
  double coef = 1.0;
  bool have_coef = false;
  if (starts_integer(cur) || cur.peek() == '.') {
    std::size_t num_start = cur.pos;
    coef = read_number(cur);
    have_coef = true;
    cur.skip_ws();
    if (cur.peek() == '/') {
      // Rational p/q: both sides plain integers.
      std::string_view num = cur.text.substr(num_start, cur.pos - num_start);
      if (num.find('.') != std::string_view::npos ||
          num.find('e') != std::string_view::npos || num.find('E') != std::string_view::npos)
        cur.fail_here(errc::syntax_error, "rational numerator must be an integer");
      cur.advance();
      cur.skip_ws();
      if (!starts_integer(cur))
        cur.fail_here(errc::syntax_error, "expected denominator after '/'");
      std::size_t den_start = cur.pos;
      while (is_digit(cur.peek())) cur.advance();
      double den = 0.0;
      std::from_chars(cur.text.data() + den_start, cur.text.data() + cur.pos, den);
      if (den == 0.0) cur.fail_here(errc::syntax_error, "zero denominator");
      coef /= den;
    }
    cur.skip_ws();
    if (cur.peek() == '*') {
      cur.advance();
      cur.skip_ws();
      if (!starts_blade(cur)) cur.fail_here(errc::syntax_error, "expected blade after '*'");
    }
  }
  if (starts_blade(cur)) {
    auto [mask, bsign] = read_blade(cur, alg);
    out[mask] += sign * coef * bsign;
    return;
  }
  if (!have_coef) cur.fail_here(errc::syntax_error, "expected a term");
  out[0] += sign * coef;
}

Multivector parse_mv_at(Cursor& cur, const Algebra& alg, bool full_line) {
  Multivector out(alg);
  cur.skip_ws();
  double sign = 1.0;
  if (cur.peek() == '+' || cur.peek() == '-') {
    if (cur.peek() == '-') sign = -1.0;
    cur.advance();
    cur.skip_ws();
  }
  read_term(cur, alg, sign, out);
  cur.skip_ws();
  while (cur.peek() == '+' || cur.peek() == '-') {
    sign = (cur.peek() == '-') ? -1.0 : 1.0;
    cur.advance();
    cur.skip_ws();
    read_term(cur, alg, sign, out);
    cur.skip_ws();
  }
  if (full_line && !cur.eof() && cur.peek() != '\n' && cur.peek() != '#')
    cur.fail_here(errc::syntax_error, "unexpected trailing input");
  return out;
}

// Shortest decimal that round-trips; exponents always carry a sign so the
// text never collides with a blade suffix.
std::string format_double(double v) {
  char buf[64];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  std::string s = buf;
  auto e = s.find_first_of("eE");
  if (e != std::string::npos && e + 1 < s.size() && is_digit(s[e + 1]))
    s.insert(e + 1, "+");
  return s;
}

// Small exact rational if the double is literally p/q; "" otherwise.
std::string try_rational(double v) {
  if (v == std::floor(v) && std::fabs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.0f", v);
    return buf;
  }
  for (int q = 2; q <= 64; ++q) {
    double p = std::round(v * q);
    if (std::fabs(p) <= 1e6 && p / q == v) {
      char buf[48];
      std::snprintf(buf, sizeof(buf), "%.0f/%d", p, q);
      return buf;
    }
  }
  return {};
}

std::string format_coef(double v) {
  std::string r = try_rational(v);
  return r.empty() ? format_double(v) : r;
}

}  // namespace

Multivector parse_mv(std::string_view text, const Algebra& alg) {
  Cursor cur{text};
  cur.skip_ws();
  if (cur.eof()) cur.fail_here(errc::syntax_error, "empty multivector literal");
  Multivector out = parse_mv_at(cur, alg, false);
  cur.skip_ws();
  if (!cur.eof()) cur.fail_here(errc::syntax_error, "unexpected trailing input");
  return out;
}

std::string serialize_mv(const Multivector& A, SerializeStyle style) {
  const Algebra& alg = A.alg();
  if (style == SerializeStyle::json) {
    nlohmann::json j;
    j["space"] = space_name(alg.space);
    std::vector<double> coeffs;
    coeffs.reserve(alg.size);
    for (unsigned mask : alg.canonical_order) coeffs.push_back(A[mask]);
    j["coeffs"] = coeffs;
    return j.dump();
  }

  std::string out;
  for (const DisplayBlade& b : alg.display) {
    double c = A[b.mask] * b.sign;
    if (c == 0.0) continue;
    bool negative = std::signbit(c) && c != 0.0;
    double mag = std::fabs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (b.mask == 0) {
      out += format_coef(mag);
    } else {
      if (mag != 1.0) out += format_coef(mag);
      out += b.name;
    }
  }
  return out.empty() ? "0" : out;
}

Multivector parse_mv_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("space") || !j.contains("coeffs"))
    throw parse_error(errc::syntax_error, "malformed multivector JSON", 1, 1);
  Space s;
  if (!space_from_name(j["space"].get<std::string>(), s))
    throw parse_error(errc::syntax_error, "unknown space tag", 1, 1);
  const Algebra& alg = algebra(s);
  auto coeffs = j["coeffs"].get<std::vector<double>>();
  if (static_cast<int>(coeffs.size()) != alg.size)
    throw parse_error(errc::syntax_error, "coefficient count mismatch", 1, 1);
  Multivector m(alg);
  for (int i = 0; i < alg.size; ++i) m[alg.canonical_order[i]] = coeffs[i];
  return m;
}

const Multivector* SceneDocument::find(const std::string& name) const {
  for (const SceneBinding& b : bindings)
    if (b.name == name) return &b.value;
  return nullptr;
}

SceneDocument parse_scene(std::string_view text) {
  SceneDocument doc;
  bool have_space = false;
  Cursor cur{text};

  auto read_ident = [&]() -> std::string {
    std::string s;
    if (!(std::isalpha(static_cast<unsigned char>(cur.peek())) || cur.peek() == '_'))
      cur.fail_here(errc::syntax_error, "expected an identifier");
    while (std::isalnum(static_cast<unsigned char>(cur.peek())) || cur.peek() == '_') {
      s += cur.peek();
      cur.advance();
    }
    return s;
  };

  while (!cur.eof()) {
    cur.skip_ws();
    if (cur.eof()) break;
    if (cur.peek() == '\n') {
      cur.advance();
      continue;
    }
    if (cur.peek() == '#') {
      while (!cur.eof() && cur.peek() != '\n') cur.advance();
      continue;
    }
    std::size_t line_no = cur.line;
    if (cur.peek() == '?') {
      if (!have_space) cur.fail_here(errc::syntax_error, "space header must come first");
      cur.advance();
      cur.skip_ws();
      SceneQuery q;
      q.line = line_no;
      q.op = read_ident();
      cur.skip_ws();
      while (!cur.eof() && cur.peek() != '\n' && cur.peek() != '#') {
        std::string arg = read_ident();
        if (!doc.find(arg))
          cur.fail_here(errc::unbound_name, "name '" + arg + "' is not bound");
        q.args.push_back(std::move(arg));
        cur.skip_ws();
      }
      doc.queries.push_back(std::move(q));
      continue;
    }

    std::string ident = read_ident();
    cur.skip_ws();
    if (cur.peek() == ':') {
      if (ident != "space") cur.fail_here(errc::syntax_error, "expected 'space:' header");
      if (have_space) cur.fail_here(errc::syntax_error, "duplicate space header");
      cur.advance();
      cur.skip_ws();
      std::string name = read_ident();
      if (!space_from_name(name, doc.space))
        cur.fail_here(errc::syntax_error, "unknown space '" + name + "'");
      have_space = true;
    } else if (cur.peek() == '=') {
      if (!have_space) cur.fail_here(errc::syntax_error, "space header must come first");
      if (doc.find(ident))
        cur.fail_here(errc::duplicate_name, "name '" + ident + "' is already bound");
      cur.advance();
      Multivector value = parse_mv_at(cur, algebra(doc.space), true);
      doc.bindings.push_back({std::move(ident), std::move(value), line_no});
    } else {
      cur.fail_here(errc::syntax_error, "expected ':' or '=' after identifier");
    }
  }
  return doc;
}

}  // namespace hpga
