#pragma once

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include "mst/rational.hpp"

namespace mst {

using Complex = std::complex<double>;

/// Dense univariate polynomial over Rational, coefficients stored lowest
/// degree first. The zero polynomial has no coefficients and degree -1;
/// otherwise the leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  /// c * z^deg
  static Polynomial monomial(const Rational& c, int deg);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of z^k; zero outside the stored range.
  Rational coeff(int k) const;
  const Rational& leading() const;

  Rational eval(const Rational& x) const;
  Complex eval(const Complex& z) const;
  Polynomial derivative() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  bool operator==(const Polynomial&) const = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Exact long division: a = q*b + r with deg r < deg b. Throws InputError
/// when b is the zero polynomial.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (1 for coprime inputs, 0 iff both zero).
Polynomial poly_gcd(Polynomial a, Polynomial b);

std::string to_string(const Polynomial& p);

}  // namespace mst
