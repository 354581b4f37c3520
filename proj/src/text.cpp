#include "gsvkit/text.hpp"

#include <cctype>
#include <set>

#include "gsvkit/error.hpp"

namespace gsvkit {

Variables::Variables(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n.front())))
      throw Error(Reason::invalid_data, "invalid variable name '" + n + "'");
    for (char c : n)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw Error(Reason::invalid_data, "invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw Error(Reason::invalid_data, "duplicate variable '" + n + "'");
  }
}

Variables Variables::defaults(std::size_t nvars) {
  std::vector<std::string> names;
  if (nvars <= 3) {
    const char* xyz[] = {"x", "y", "z"};
    names.assign(xyz, xyz + nvars);
  } else {
    for (std::size_t i = 1; i <= nvars; ++i) names.push_back("z" + std::to_string(i));
  }
  return Variables(std::move(names));
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Variables& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, Reason r = Reason::parse_error) const {
    throw ParseError(r, msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  // expression := ['+'|'-'] product (('+'|'-') product)*
  Polynomial expression() {
    Polynomial acc(vars_.size());
    bool first = true;
    for (;;) {
      skip_ws();
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        return acc;
      }
      Polynomial t = product();
      if (sign < 0) acc -= t; else acc += t;
      first = false;
    }
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  // product := power (['*'] power)*
  Polynomial product() {
    Polynomial acc = power();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * power();
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  // power := primary ('^' uint)?
  Polynomial power() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent", Reason::negative_exponent);
      std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      if (digits.size() > 6) fail("exponent too large");
      return pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // primary := int ('/' uint)? | var | '(' expression ')'
  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(read_digits());
      Integer den = 1;
      if (peek('/')) {
        ++pos_;
        skip_ws();
        std::string d = read_digits();
        if (d.empty()) fail("expected denominator");
        den = Integer(d);
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(vars_.size(), q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Polynomial variable() {
    std::size_t best = vars_.size();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const auto& n = vars_[i];
      if (n.size() > best_len && text_.substr(pos_, n.size()) == n) {
        best = i;
        best_len = n.size();
      }
    }
    if (best == vars_.size()) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      fail("unknown variable '" + std::string(text_.substr(pos_, end - pos_)) + "'",
           Reason::unknown_variable);
    }
    pos_ += best_len;
    return Polynomial::variable(vars_.size(), best);
  }

  std::string_view text_;
  const Variables& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const Variables& vars) {
  return Parser(text, vars).parse();
}

std::string format_rational(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  Polynomial c = parse_poly(text, Variables());
  Rational q = c.constant_term();
  // Reject anything that is not literally `int` or `int/uint` with optional sign.
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/' && !std::isspace(static_cast<unsigned char>(ch)))
      throw ParseError(Reason::parse_error, "not a rational literal", i);
  }
  return q;
}

std::string format_poly(const Polynomial& p, const Variables& vars) {
  if (vars.size() != p.nvars()) throw Error(Reason::arity_mismatch, "variable list does not match polynomial");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    const bool unit = t.exponent.is_one();
    if (c != 1 || unit) out += format_rational(c);
    for (std::size_t i = 0; i < t.exponent.size(); ++i) {
      if (t.exponent[i] == 0) continue;
      out += vars[i];
      if (t.exponent[i] > 1) out += "^" + std::to_string(t.exponent[i]);
    }
    first = false;
  }
  return out;
}

}  // namespace gsvkit
