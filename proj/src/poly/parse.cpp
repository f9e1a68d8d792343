#include "germ/poly/parse.hpp"

#include <cctype>

namespace germ {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Variables& vars, bool complex_mode, std::size_t offset)
      : text_(text), vars_(vars), complex_(complex_mode), offset_(offset) {}

  Polynomial parse_all() {
    Polynomial p = sum();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, offset_ + pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '.' || c == '_' || std::isalnum(static_cast<unsigned char>(c));
  }

  Polynomial sum() {
    Polynomial acc(vars_);
    bool first = true;
    for (;;) {
      bool negative = false;
      if (accept('-')) {
        negative = true;
      } else if (!accept('+') && !first) {
        break;
      }
      Polynomial t = product();
      acc += negative ? -t : t;
      first = false;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = power();
    for (;;) {
      if (accept('*')) {
        acc *= power();
      } else if (peek('/')) {
        std::size_t at = pos_;
        ++pos_;
        Polynomial d = power();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division only by a nonzero constant");
        }
        acc *= d.constant_term().inverse();
      } else if (starts_factor()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return Polynomial(vars_, number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      if (complex_ && name == "i") return Polynomial(vars_, Scalar::imaginary_unit());
      auto idx = vars_.index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(vars_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Scalar number() {
    std::size_t start = pos_;
    std::string digits;
    std::size_t decimals = 0;
    bool seen_point = false;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (seen_point) ++decimals;
      } else if (c == '.' && !seen_point) {
        seen_point = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) {
      pos_ = start;
      fail("malformed number");
    }
    mpz_class num(digits, 10);
    mpz_class den = 1;
    for (std::size_t k = 0; k < decimals; ++k) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return Scalar(q);
  }

  std::string_view text_;
  const Variables& vars_;
  bool complex_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Variables& vars, bool complex_mode) {
  if (complex_mode && vars.index_of("i")) throw Error("'i' is reserved for the imaginary unit");
  return Parser(text, vars, complex_mode, 0).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const Variables& vars,
                                              bool complex_mode) {
  if (complex_mode && vars.index_of("i")) throw Error("'i' is reserved for the imaginary unit");
  std::vector<Polynomial> out;
  std::size_t first_non_space = text.find_first_not_of(" \t\r\n");
  if (first_non_space == std::string_view::npos) return out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k < text.size() && text[k] == '(') ++depth;
    if (k < text.size() && text[k] == ')') --depth;
    if (k == text.size() || (text[k] == ',' && depth == 0)) {
      out.push_back(Parser(text.substr(start, k - start), vars, complex_mode, start).parse_all());
      start = k + 1;
    }
  }
  return out;
}

}  // namespace germ
