#pragma once

#include <vector>

#include "mst/polynomial.hpp"

namespace mst {

/// Quotient of two exact polynomials, kept in canonical form: numerator and
/// denominator coprime, denominator monic. Carrier for truncated Weyl
/// functions and other rational Herglotz--Nevanlinna functions.
class RationalFunction {
 public:
  /// The zero function 0/1.
  RationalFunction() : num_(), den_(Polynomial::constant(Rational(1))) {}
  /// Reduces to canonical form; throws InputError when den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction from_polynomial(Polynomial p) {
    return RationalFunction(std::move(p), Polynomial::constant(Rational(1)));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// deg num < deg den, i.e. f(z) -> 0 as z -> infinity.
  bool vanishes_at_infinity() const { return num_.degree() < den_.degree(); }

  Complex eval(const Complex& z) const;
  Rational eval(const Rational& x) const;

  /// Coefficients c_1..c_n of f(z) = sum_k c_k z^{-k} + O(z^{-n-1}).
  /// Requires vanishes_at_infinity(); exact.
  std::vector<Rational> series_at_infinity(int n_terms) const;

  RationalFunction reciprocal() const { return RationalFunction(den_, num_); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;

  bool operator==(const RationalFunction&) const = default;

 private:
  Polynomial num_, den_;
};

/// Canonical form of num/den (free-function spelling of the constructor).
inline RationalFunction ratfun_reduce(const Polynomial& num, const Polynomial& den) {
  return RationalFunction(num, den);
}

}  // namespace mst
