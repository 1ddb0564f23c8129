#include "sepform/system_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sepform {

namespace {

constexpr unsigned kMaxExponent = 1000;
const VarSet kXY{Var::X, Var::Y};

class ExprParser {
 public:
  ExprParser(std::string_view s, std::size_t line, std::size_t col0) : s_(s), line_(line), col0_(col0) {}

  IntPoly parse() {
    IntPoly f = expr();
    skip_ws();
    if (pos_ < s_.size()) error(std::string("unexpected character '") + s_[pos_] + "'");
    return f;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const { throw ParseError(line_, col0_ + pos_, msg); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  IntPoly expr() {
    IntPoly f = term();
    for (;;) {
      if (accept('+')) {
        f = f + term();
      } else if (accept('-')) {
        f = f - term();
      } else {
        return f;
      }
    }
  }

  IntPoly term() {
    IntPoly f = unary();
    while (accept('*')) f = f * unary();
    return f;
  }

  IntPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  IntPoly power() {
    IntPoly base = atom();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected a nonnegative integer exponent");
    if (pos_ - start > 4) error("exponent too large");
    const unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
    if (e > kMaxExponent) error("exponent too large");
    return base.pow(e);
  }

  IntPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) error("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      IntPoly f = expr();
      if (!accept(')')) error("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return IntPoly::constant(IntegerRing{}, kXY, BigInt::from_string(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const auto name = s_.substr(start, pos_ - start);
      if (name == "X") return IntPoly::variable(IntegerRing{}, kXY, Var::X);
      if (name == "Y") return IntPoly::variable(IntegerRing{}, kXY, Var::Y);
      pos_ = start;
      error("unknown variable '" + std::string(name) + "'");
    }
    error(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

void finish(SystemFile& sys) {
  if (sys.p.is_zero()) throw ParseError(1, 1, "polynomial P is zero");
  if (sys.q.is_zero()) throw ParseError(1, 1, "polynomial Q is zero");
  sys.d = std::max(sys.p.total_degree(), sys.q.total_degree());
  sys.tau = std::max(bitsize(sys.p), bitsize(sys.q));
}

IntPoly json_terms(const nlohmann::json& terms, const char* name) {
  if (!terms.is_array()) throw ParseError(1, 1, std::string(name) + " must be an array of [ex, ey, coeff] terms");
  IntPoly f(IntegerRing{}, kXY);
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned()) {
      throw ParseError(1, 1, std::string(name) + ": each term must be [ex, ey, coeff] with nonnegative exponents");
    }
    const auto ex = t[0].get<std::uint64_t>();
    const auto ey = t[1].get<std::uint64_t>();
    if (ex > kMaxExponent || ey > kMaxExponent) throw ParseError(1, 1, std::string(name) + ": exponent too large");
    BigInt c;
    if (t[2].is_string()) {
      c = BigInt::from_string(t[2].get<std::string>());
    } else if (t[2].is_number_integer()) {
      c = BigInt(t[2].get<std::int64_t>());
    } else {
      throw ParseError(1, 1, std::string(name) + ": coefficient must be an integer or a decimal string");
    }
    f.add_term({static_cast<std::uint32_t>(ex), static_cast<std::uint32_t>(ey), 0, 0}, c);
  }
  return f;
}

SystemFile parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, e.byte, e.what());
  }
  if (!j.is_object() || !j.contains("P") || !j.contains("Q")) throw ParseError(1, 1, "JSON system needs keys \"P\" and \"Q\"");
  for (const auto& [k, v] : j.items()) {
    if (k != "P" && k != "Q") throw ParseError(1, 1, "unknown key \"" + k + "\"");
  }
  SystemFile sys{json_terms(j["P"], "P"), json_terms(j["Q"], "Q"), {}, 0, 0};
  return sys;
}

}  // namespace

IntPoly parse_polynomial(std::string_view expr) { return ExprParser(expr, 1, 1).parse(); }

SystemFile parse_system(std::string_view text, std::string source_path) {
  const auto first = text.find_first_not_of(" \t\r\n");
  SystemFile sys{IntPoly(IntegerRing{}, kXY), IntPoly(IntegerRing{}, kXY), std::move(source_path), 0, 0};
  if (first != std::string_view::npos && text[first] == '{') {
    auto parsed = parse_json(text);
    parsed.source_path = sys.source_path;
    finish(parsed);
    return parsed;
  }
  bool have_p = false;
  bool have_q = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto lhs = line.find_first_not_of(" \t\r");
    if (lhs != std::string_view::npos) {
      const char name = line[lhs];
      if (name != 'P' && name != 'Q') throw ParseError(line_no, lhs + 1, "expected 'P =' or 'Q ='");
      const auto eq = line.find_first_not_of(" \t", lhs + 1);
      if (eq == std::string_view::npos || line[eq] != '=') throw ParseError(line_no, lhs + 2, "expected '='");
      bool& seen = name == 'P' ? have_p : have_q;
      if (seen) throw ParseError(line_no, lhs + 1, std::string("duplicate definition of ") + name);
      seen = true;
      std::string_view rhs = line.substr(eq + 1);
      while (!rhs.empty() && (rhs.back() == '\r' || rhs.back() == ' ' || rhs.back() == '\t')) rhs.remove_suffix(1);
      if (rhs.find_first_not_of(" \t") == std::string_view::npos) throw ParseError(line_no, eq + 2, "empty polynomial");
      IntPoly f = ExprParser(rhs, line_no, eq + 2).parse();
      if (f.is_zero()) throw ParseError(line_no, eq + 2, std::string("polynomial ") + name + " is zero");
      (name == 'P' ? sys.p : sys.q) = std::move(f);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (!have_p || !have_q) throw ParseError(line_no, 1, "system needs both P and Q");
  finish(sys);
  return sys;
}

SystemFile load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str(), path);
}

std::string format_system(const SystemFile& sys) { return "P = " + sys.p.to_string() + "\nQ = " + sys.q.to_string() + "\n"; }

}  // namespace sepform
