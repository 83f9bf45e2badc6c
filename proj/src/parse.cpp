#include "mahler/parse.hpp"

#include <cctype>
#include <map>

#include "mahler/error.hpp"

namespace mahler {

namespace {

// Value carried through the expression parser: a polynomial part plus one
// polynomial coefficient per f-token index. Multiplication is only defined
// when at least one operand is a pure polynomial, which keeps the result
// linear in the f tokens.
struct LinearValue {
  Polynomial scalar;
  std::map<unsigned long, Polynomial> terms;

  bool pure() const { return terms.empty(); }
};

class Parser {
 public:
  Parser(const std::string& text, bool allow_series_tokens)
      : text_(text), allow_f_(allow_series_tokens) {}

  LinearValue run() {
    LinearValue v = parse_expr();
    skip_ws();
    if (pos_ != text_.size())
      fail(ErrorKind::SyntaxError, trailer("unexpected character"));
    return v;
  }

 private:
  [[noreturn]] void die(const std::string& what) {
    fail(ErrorKind::SyntaxError, trailer(what));
  }

  std::string trailer(const std::string& what) const {
    return what + " at byte " + std::to_string(pos_) + " in \"" + text_ + "\"";
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) die("expected digits");
    return text_.substr(start, pos_ - start);
  }

  LinearValue parse_expr() {
    bool negate = false;
    skip_ws();
    if (eat('-'))
      negate = true;
    else
      eat('+');
    LinearValue acc = parse_term();
    if (negate) acc = negated(acc);
    while (true) {
      if (eat('-'))
        acc = add(acc, negated(parse_term()));
      else if (eat('+'))
        acc = add(acc, parse_term());
      else
        break;
    }
    return acc;
  }

  LinearValue parse_term() {
    LinearValue acc = parse_factor();
    while (eat('*')) acc = multiply(acc, parse_factor());
    return acc;
  }

  LinearValue parse_factor() {
    LinearValue base = parse_primary();
    if (!eat('^')) return base;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) die("expected integer exponent");
    Int e(digits());
    if (!e.fits_ulong_p()) die("exponent too large");
    unsigned long exp = e.get_ui();
    if (!base.pure()) {
      if (exp == 1) return base;
      die("series token raised to a power");
    }
    LinearValue out;
    out.scalar = Polynomial::one();
    for (unsigned long i = 0; i < exp; ++i) out.scalar = out.scalar * base.scalar;
    return out;
  }

  LinearValue parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) die("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LinearValue inner = parse_expr();
      if (!eat(')')) die("expected ')'");
      return inner;
    }
    if (c == 'z') {
      ++pos_;
      LinearValue v;
      v.scalar = Polynomial::monomial(Rat(1), 1);
      return v;
    }
    if (c == 'f' && allow_f_) {
      ++pos_;
      Int idx(digits());
      if (!idx.fits_ulong_p()) die("series token index too large");
      LinearValue v;
      v.terms[idx.get_ui()] = Polynomial::one();
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num(digits());
      LinearValue v;
      if (peek() == '/') {
        ++pos_;
        std::size_t den_at = pos_;
        Int den(digits());
        if (den == 0) {
          pos_ = den_at;
          die("zero denominator");
        }
        v.scalar = Polynomial(make_rat(num, den));
      } else {
        v.scalar = Polynomial(Rat(num));
      }
      return v;
    }
    die("unexpected character");
  }

  LinearValue negated(const LinearValue& v) {
    LinearValue out;
    out.scalar = -v.scalar;
    for (const auto& [i, p] : v.terms) out.terms[i] = -p;
    return out;
  }

  LinearValue add(const LinearValue& a, const LinearValue& b) {
    LinearValue out = a;
    out.scalar = out.scalar + b.scalar;
    for (const auto& [i, p] : b.terms) {
      auto it = out.terms.find(i);
      if (it == out.terms.end())
        out.terms[i] = p;
      else
        it->second = it->second + p;
    }
    return out;
  }

  LinearValue multiply(const LinearValue& a, const LinearValue& b) {
    if (!a.pure() && !b.pure()) die("product of series tokens");
    const LinearValue& poly = a.pure() ? a : b;
    const LinearValue& other = a.pure() ? b : a;
    LinearValue out;
    out.scalar = poly.scalar * other.scalar;
    for (const auto& [i, p] : other.terms) out.terms[i] = poly.scalar * p;
    return out;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  bool allow_f_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
  return Parser(text, false).run().scalar;
}

std::vector<Polynomial> parse_equation_expr(const std::string& text) {
  LinearValue v = Parser(text, true).run();
  if (!v.scalar.is_zero())
    fail(ErrorKind::SyntaxError,
         "equation expression has a nonzero polynomial part: " + v.scalar.to_string());
  if (v.terms.empty())
    fail(ErrorKind::SyntaxError, "equation expression uses no series token");
  std::vector<Polynomial> out(v.terms.rbegin()->first + 1);
  for (const auto& [i, p] : v.terms) out[i] = p;
  return out;
}

}  // namespace mahler
