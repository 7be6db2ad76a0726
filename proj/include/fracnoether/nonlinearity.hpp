#pragma once

// Polynomial nonlinearities f(u) given as expression strings, e.g. "1 + 0.1*u"
// or "(1-u)^2". The alias "const1" means f = 1.

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "fracnoether/errors.hpp"

namespace fracnoether {

class Nonlinearity {
 public:
  Nonlinearity() : Nonlinearity("1") {}

  explicit Nonlinearity(std::string expr) : expr_(std::move(expr)) {
    const std::string body = expr_ == "const1" ? "1" : expr_;
    Parser p{body, 0};
    coeffs_ = p.parse_sum();
    p.skip();
    if (p.pos != body.size()) throw InvalidInput("unexpected '" + body.substr(p.pos) + "' in f(u) expression");
    trim(coeffs_);
  }

  const std::string& expression() const noexcept { return expr_; }
  /// Monomial coefficients, coeffs()[k] multiplies u^k.
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }

  double operator()(double u) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
    return acc;
  }

  double derivative(double u) const {
    double acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 1;) acc = acc * u + static_cast<double>(k) * coeffs_[k];
    return acc;
  }

 private:
  using Poly = std::vector<double>;

  static void trim(Poly& p) {
    while (p.size() > 1 && p.back() == 0.0) p.pop_back();
    if (p.empty()) p.push_back(0.0);
  }
  static Poly add(Poly a, const Poly& b, double sign) {
    if (a.size() < b.size()) a.resize(b.size(), 0.0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
    return a;
  }
  static Poly mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
  }

  struct Parser {
    const std::string& s;
    std::size_t pos;

    void skip() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
      skip();
      if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }
    Poly parse_sum() {
      Poly acc = parse_product();
      for (;;) {
        if (eat('+')) acc = add(acc, parse_product(), 1.0);
        else if (eat('-')) acc = add(acc, parse_product(), -1.0);
        else return acc;
      }
    }
    Poly parse_product() {
      Poly acc = parse_power();
      while (eat('*')) acc = mul(acc, parse_power());
      return acc;
    }
    Poly parse_power() {
      Poly base = parse_unary();
      if (eat('^')) {
        skip();
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw InvalidInput("exponent must be a non-negative integer");
        const int e = std::stoi(s.substr(start, pos - start));
        if (e > 32) throw InvalidInput("exponent too large");
        Poly out{1.0};
        for (int i = 0; i < e; ++i) out = mul(out, base);
        return out;
      }
      return base;
    }
    Poly parse_unary() {
      if (eat('-')) {
        Poly p = parse_unary();
        for (double& c : p) c = -c;
        return p;
      }
      if (eat('+')) return parse_unary();
      return parse_atom();
    }
    Poly parse_atom() {
      skip();
      if (eat('(')) {
        Poly p = parse_sum();
        if (!eat(')')) throw InvalidInput("missing ')' in f(u) expression");
        return p;
      }
      if (pos < s.size() && s[pos] == 'u') {
        ++pos;
        return {0.0, 1.0};
      }
      const char* begin = s.c_str() + pos;
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin) throw InvalidInput("cannot parse f(u) expression at '" + s.substr(pos) + "'");
      pos += static_cast<std::size_t>(end - begin);
      return {v};
    }
  };

  std::string expr_;
  Poly coeffs_;
};

}  // namespace fracnoether
