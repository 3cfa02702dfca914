#include "acalg/symbolic.hpp"

#include <cctype>

namespace acalg {

MultiPoly MultiPoly::constant(const mpq_class& c) {
  MultiPoly p;
  p.add_term({}, c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p;
  p.add_term({{name, 1}}, 1);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::set<std::string> MultiPoly::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) out.insert(v);
  return out;
}

unsigned MultiPoly::degree_in(const std::string& var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(var);
    if (it != m.end()) d = std::max(d, it->second);
  }
  return d;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    unsigned s = 0;
    for (const auto& [v, e] : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly p = a;
  for (const auto& [m, c] : b.terms_) p.add_term(m, c);
  return p;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly p;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      MultiPoly::Monomial m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      p.add_term(m, ca * cb);
    }
  return p;
}

FieldElement MultiPoly::eval(const std::map<std::string, FieldElement>& values, Field field) const {
  FieldElement acc = FieldElement::zero(field);
  for (const auto& [m, c] : terms_) {
    FieldElement term(field, c);
    for (const auto& [v, e] : m) {
      const FieldElement& x = values.at(v);
      for (unsigned k = 0; k < e; ++k) term *= x;
    }
    acc += term;
  }
  return acc;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (const auto& [v, e] : m) {
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    }
    mpq_class mag = c < 0 ? mpq_class(-c) : c;
    std::string term = mono.empty() ? mag.get_str() : (mag == 1 ? mono : mag.get_str() + "*" + mono);
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

std::set<std::string> RationalFunction::variables() const {
  auto v = num.variables();
  auto w = den.variables();
  v.insert(w.begin(), w.end());
  return v;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num * b.num, a.den * b.den};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.num.is_zero()) throw DivisionByZero();
  return {a.num * b.den, a.den * b.num};
}

FieldElement RationalFunction::eval(const std::map<std::string, FieldElement>& values, Field field) const {
  FieldElement d = den.eval(values, field);
  if (d.is_zero()) throw DivisionByZero();
  return num.eval(values, field) / d;
}

std::string RationalFunction::to_string() const {
  if (den == MultiPoly::constant(1)) return num.to_string();
  return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("expression '" + std::string(s_) + "': " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction r = term();
    while (true) {
      if (accept('+')) r = r + term();
      else if (accept('-')) r = r - term();
      else return r;
    }
  }

  RationalFunction term() {
    RationalFunction r = factor();
    while (true) {
      if (accept('*')) {
        r = r * factor();
      } else if (accept('/')) {
        RationalFunction d = factor();
        if (d.is_zero()) fail("division by zero");
        r = r / d;
      } else {
        return r;
      }
    }
  }

  RationalFunction factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    RationalFunction base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a non-negative integer");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      RationalFunction r = RationalFunction::constant(1);
      for (int k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  RationalFunction primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!accept(')')) fail("missing ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFunction::constant(mpq_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return {MultiPoly::variable(std::string(s_.substr(start, pos_ - start))), MultiPoly::constant(1)};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expression(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace acalg
