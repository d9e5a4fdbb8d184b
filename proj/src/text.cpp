#include "cherednik/text.hpp"

#include <cctype>

namespace cherednik {

namespace {

std::string coefficient_text(const Scalar& c, bool has_monomial) {
  if (c.is_rational()) {
    const Rational q = c.to_rational();
    if (has_monomial && (q == 1 || q == -1)) return q == 1 ? "" : "-";
    return cherednik::to_string(q);
  }
  return "(" + c.to_string() + ")";
}

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  unsigned long integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'E')) fail("floating point values are not accepted");
    return std::stoul(text_.substr(start, pos_ - start));
  }
  Rational rational() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'E')) fail("floating point values are not accepted");
    return parse_rational(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at position " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

// term := [rational] ['*'] ['e' ['^' int]]
Scalar scalar_term(Cursor& in, int order) {
  Scalar coefficient(1);
  bool any = false;
  if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
    coefficient = Scalar(in.rational());
    any = true;
    if (!in.accept('*')) return coefficient;
  }
  if (in.accept('e')) {
    long power = 1;
    if (in.accept('^')) power = static_cast<long>(in.integer());
    return coefficient * Scalar::root_of_unity(order, power);
  }
  if (!any) in.fail("expected a scalar term");
  in.fail("expected 'e' after '*'");
}

Scalar scalar_sum(Cursor& in, int order, char stop) {
  Scalar total;
  bool first = true;
  while (true) {
    const char c = in.peek();
    if (c == stop || c == '\0') break;
    bool negative = false;
    if (in.accept('-')) {
      negative = true;
    } else if (!in.accept('+') && !first) {
      in.fail("expected '+' or '-'");
    }
    Scalar term = scalar_term(in, order);
    total += negative ? -term : term;
    first = false;
  }
  if (first) in.fail("empty scalar");
  return total;
}

}  // namespace

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool has_monomial = total_degree(e) > 0;
    std::string coeff = coefficient_text(c, has_monomial);
    std::string sign;
    if (!coeff.empty() && coeff[0] == '-' && c.is_rational()) {
      sign = "-";
      coeff.erase(0, 1);
    } else {
      sign = "+";
    }
    if (first) {
      out += sign == "-" ? "-" : "";
    } else {
      out += " " + sign + " ";
    }
    first = false;
    out += coeff;
    bool need_star = !coeff.empty();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out += "*";
      out += "x" + std::to_string(i + 1);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
      need_star = true;
    }
  }
  return out;
}

Scalar parse_scalar(const std::string& text, int order) {
  Cursor in(text);
  Scalar out = scalar_sum(in, order, '\0');
  if (!in.done()) in.fail("trailing characters");
  return out;
}

std::vector<Scalar> parse_scalar_list(const std::string& text, int order) {
  std::vector<Scalar> out;
  std::size_t start = 0;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_scalar(text.substr(start, comma - start), order));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Polynomial parse_polynomial(const std::string& text, std::size_t nvars, int order) {
  Cursor in(text);
  Polynomial out(nvars);
  bool first = true;
  while (!in.done()) {
    bool negative = false;
    if (in.accept('-')) {
      negative = true;
    } else if (!in.accept('+') && !first) {
      in.fail("expected '+' or '-'");
    }
    first = false;
    Scalar coefficient(1);
    Exponents e(nvars, 0);
    bool expect_factor = true;
    while (expect_factor) {
      const char c = in.peek();
      if (c == '(') {
        in.expect('(');
        coefficient *= scalar_sum(in, order, ')');
        in.expect(')');
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        coefficient *= Scalar(in.rational());
      } else if (in.accept('x')) {
        const auto index = in.integer();
        if (index < 1 || index > nvars) in.fail("variable index out of range");
        unsigned power = 1;
        if (in.accept('^')) power = static_cast<unsigned>(in.integer());
        e[index - 1] += power;
      } else {
        in.fail("expected a coefficient or a variable");
      }
      expect_factor = in.accept('*');
    }
    out.add_term(std::move(e), negative ? -coefficient : coefficient);
  }
  if (first) in.fail("empty polynomial");
  return out;
}

}  // namespace cherednik
