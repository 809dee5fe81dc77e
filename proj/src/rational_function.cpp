#include "mst/rational_function.hpp"

namespace mst {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InputError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(Rational(1));
    return;
  }
  Polynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = poly_divmod(num_, g).first;
    den_ = poly_divmod(den_, g).first;
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

Complex RationalFunction::eval(const Complex& z) const {
  return num_.eval(z) / den_.eval(z);
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (is_zero(d)) throw InputError("rational function evaluated at a pole");
  return num_.eval(x) / d;
}

std::vector<Rational> RationalFunction::series_at_infinity(int n_terms) const {
  if (n_terms < 0) throw InputError("series term count must be non-negative");
  if (!vanishes_at_infinity())
    throw InputError("series at infinity requires deg(num) < deg(den)");
  std::vector<Rational> out(n_terms, Rational(0));
  if (num_.is_zero()) return out;
  // Substitute t = 1/z. With d = deg den, num(z)/den(z) becomes
  //   (sum_i a_i t^{d-i}) / (sum_i b_i t^{d-i}),
  // a power series in t with nonzero constant term downstairs; divide term
  // by term. The coefficient of t^k is c_k.
  const int d = den_.degree();
  auto rev_num = [&](int k) { return num_.coeff(d - k); };  // a_{d-k}
  auto rev_den = [&](int k) { return den_.coeff(d - k); };  // b_{d-k}
  const Rational b0 = rev_den(0);                           // leading den coeff, nonzero
  std::vector<Rational> c(n_terms + 1, Rational(0));
  for (int m = 0; m <= n_terms; ++m) {
    Rational acc = rev_num(m);
    for (int j = 1; j <= m; ++j) acc -= rev_den(j) * c[m - j];
    c[m] = acc / b0;
  }
  for (int k = 1; k <= n_terms; ++k) out[k - 1] = c[k];
  return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

}  // namespace mst
