#include "severi/poly/parse.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace severi {

namespace {

// Sparse rational polynomial over a growing variable list; the parser's
// working value type.
struct Sparse {
  std::map<std::vector<int>, Rational> terms;  // exponent vectors, trailing zeros trimmed

  static Sparse constant(const Rational& c) {
    Sparse s;
    if (c != 0) s.terms[{}] = c;
    return s;
  }
};

std::vector<int> trimmed(std::vector<int> e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  return e;
}

void add_into(Sparse& acc, const std::vector<int>& e, const Rational& c) {
  if (c == 0) return;
  std::vector<int> key = trimmed(e);
  Rational& slot = acc.terms[key];
  slot += c;
  if (slot == 0) acc.terms.erase(key);
}

Sparse add(const Sparse& a, const Sparse& b, int sign) {
  Sparse r = a;
  for (const auto& [e, c] : b.terms) add_into(r, e, sign > 0 ? Rational(c) : Rational(-c));
  return r;
}

Sparse mul(const Sparse& a, const Sparse& b) {
  Sparse r;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      add_into(r, e, ca * cb);
    }
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedPoly run() {
    Sparse value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    ParsedPoly out;
    out.vars = vars_;
    for (const auto& [e, c] : value.terms) {
      Exponents full = e;
      full.resize(vars_.size(), 0);
      out.terms.emplace(std::move(full), c);
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("invalid polynomial '" + std::string(text_) + "' at position " +
                                std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_atom() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Sparse expr() {
    int sign = 1;
    if (peek('-') || peek('+')) sign = text_[pos_++] == '-' ? -1 : 1;
    Sparse acc = add(Sparse{}, term(), sign);
    while (peek('+') || peek('-')) {
      int s = text_[pos_++] == '-' ? -1 : 1;
      acc = add(acc, term(), s);
    }
    return acc;
  }

  Sparse term() {
    Sparse acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = mul(acc, factor());
      } else if (starts_atom()) {
        acc = mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Sparse factor() {
    Sparse base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    std::string digits = read_digits();
    if (digits.empty()) fail("expected an exponent");
    if (digits.size() > 4) fail("exponent too large");
    Sparse r = Sparse::constant(1);
    for (int k = std::stoi(digits); k > 0; --k) r = mul(r, base);
    return r;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Sparse atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Sparse inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::string den = read_digits();
        if (den.empty()) fail("expected a denominator");
        num += "/" + den;
      }
      try {
        return Sparse::constant(parse_rational(num));
      } catch (const std::invalid_argument&) {
        fail("bad number " + num);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      std::size_t index = static_cast<std::size_t>(it - vars_.begin());
      if (it == vars_.end()) vars_.push_back(name);
      std::vector<int> e(index + 1, 0);
      e[index] = 1;
      Sparse s;
      s.terms[e] = 1;
      return s;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> vars_;
};

}  // namespace

ParsedPoly parse_poly(std::string_view text) { return Parser(text).run(); }

MultiPoly ParsedPoly::to_multi() const {
  MultiPoly::Terms t;
  for (const auto& [e, c] : terms) {
    if (c.get_den() != 1) throw std::invalid_argument("polynomial coefficient " + c.get_str() + " is not an integer");
    t.emplace(e, c.get_num());
  }
  return MultiPoly(vars, std::move(t));
}

UniPoly<Rational> ParsedPoly::to_uni(const std::string& fallback) const {
  if (vars.size() > 1) throw std::invalid_argument("expected a polynomial in one variable");
  std::string var = vars.empty() ? fallback : vars.front();
  int top = 0;
  for (const auto& [e, c] : terms) top = std::max(top, e.empty() ? 0 : e[0]);
  std::vector<Rational> coeffs(static_cast<std::size_t>(top) + 1, Rational(0));
  for (const auto& [e, c] : terms) coeffs[static_cast<std::size_t>(e.empty() ? 0 : e[0])] = c;
  return UniPoly<Rational>(std::move(coeffs), var);
}

}  // namespace severi
