#include "severi/poly/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace severi {

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const std::string& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

}  // namespace

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(std::vector<std::string> vars, Terms terms) : vars_(std::move(vars)) {
  for (auto& [e, c] : terms) {
    if (e.size() != vars_.size()) throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
    add_term(e, c);
  }
}

MultiPoly MultiPoly::constant(const BigCount& c, std::vector<std::string> vars) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p({name});
  p.add_term({1}, 1);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const BigCount& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

BigCount MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? BigCount(0) : it->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponents& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int MultiPoly::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

int MultiPoly::degree_in(const std::string& name) const {
  if (terms_.empty()) return -1;
  int i = index_of(name);
  if (i < 0) return 0;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
  return d;
}

MultiPoly MultiPoly::coefficient_in(const std::string& name, int k) const {
  MultiPoly out(vars_);
  int i = index_of(name);
  for (const auto& [e, c] : terms_) {
    int ek = i < 0 ? 0 : e[static_cast<std::size_t>(i)];
    if (ek != k) continue;
    Exponents f = e;
    if (i >= 0) f[static_cast<std::size_t>(i)] = 0;
    out.add_term(f, c);
  }
  return out;
}

MultiPoly MultiPoly::derivative(const std::string& name) const {
  MultiPoly out(vars_);
  int i = index_of(name);
  if (i < 0) return out;
  for (const auto& [e, c] : terms_) {
    int ek = e[static_cast<std::size_t>(i)];
    if (ek == 0) continue;
    Exponents f = e;
    --f[static_cast<std::size_t>(i)];
    out.add_term(f, c * ek);
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::string& name, const MultiPoly& value) const {
  int i = index_of(name);
  if (i < 0) return *this;
  std::vector<std::string> out_vars = merged(vars_, value.vars_);
  MultiPoly out(out_vars);
  const int top = degree_in(name);
  std::vector<MultiPoly> powers{constant(1, out_vars)};
  for (int k = 1; k <= top; ++k) powers.push_back(powers.back() * value);
  for (int k = 0; k <= top; ++k) {
    MultiPoly coeff = coefficient_in(name, k);
    if (!coeff.is_zero()) out = out + coeff * powers[static_cast<std::size_t>(k)];
  }
  return out;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& values) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = values.find(vars_[i]);
      if (it == values.end()) throw std::invalid_argument("evaluate: no value for variable " + vars_[i]);
      term *= severi::pow(it->second, static_cast<unsigned>(e[i]));
    }
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
  std::vector<int> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    where[i] = it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
  }
  MultiPoly out(vars);
  for (const auto& [e, c] : terms_) {
    Exponents f(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] < 0) throw std::invalid_argument("with_vars: variable " + vars_[i] + " is in use");
      f[static_cast<std::size_t>(where[i])] = e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

MultiPoly MultiPoly::compact() const {
  std::vector<std::string> used;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (const auto& [e, c] : terms_)
      if (e[i] != 0) {
        used.push_back(vars_[i]);
        break;
      }
  return with_vars(used);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  std::vector<std::string> vars = merged(vars_, o.vars_);
  MultiPoly out = with_vars(vars);
  for (const auto& [e, c] : o.with_vars(vars).terms_) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  std::vector<std::string> vars = merged(vars_, o.vars_);
  MultiPoly a = with_vars(vars), b = o.with_vars(vars);
  MultiPoly out(vars);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(vars.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::operator*(const BigCount& s) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * s);
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(1, vars_), b = *this;
  for (; e; e >>= 1, b = b * b)
    if (e & 1) r = r * b;
  return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
  if (d.is_zero()) throw std::domain_error("MultiPoly division by zero");
  std::vector<std::string> vars = merged(vars_, d.vars_);
  MultiPoly rem = with_vars(vars), div = d.with_vars(vars);
  MultiPoly quot(vars);
  const auto& [lead_e, lead_c] = *div.terms_.begin();
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms_.begin();
    Exponents q(vars.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] = e[i] - lead_e[i];
      if (q[i] < 0) return std::nullopt;
    }
    if (!mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    MultiPoly step(vars);
    step.add_term(q, c / lead_c);
    quot = quot + step;
    rem = rem - step * div;
  }
  return quot;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  std::vector<std::string> vars = merged(vars_, o.vars_);
  return with_vars(vars).terms_ == o.with_vars(vars).terms_;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    bool neg = c < 0;
    BigCount a = abs(c);
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      s += a.get_str();
    else if (a == 1)
      s += mono;
    else
      s += a.get_str() + "*" + mono;
  }
  return s;
}

std::optional<int> quasi_degree(const MultiPoly& f, const std::map<std::string, int>& weights) {
  if (f.is_zero()) throw std::invalid_argument("quasi_degree: zero polynomial");
  std::optional<int> degree;
  for (const auto& [e, c] : f.terms()) {
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = weights.find(f.vars()[i]);
      if (it == weights.end()) throw std::invalid_argument("quasi_degree: no weight for variable " + f.vars()[i]);
      w += it->second * e[i];
    }
    if (degree && *degree != w) return std::nullopt;
    degree = w;
  }
  return degree;
}

}  // namespace severi
