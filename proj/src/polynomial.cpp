#include "mst/polynomial.hpp"

#include <sstream>

namespace mst {

void Polynomial::trim() {
  while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, int deg) {
  if (is_zero(c)) return {};
  std::vector<Rational> v(deg + 1, Rational(0));
  v[deg] = c;
  return Polynomial(std::move(v));
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[k];
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw InputError("leading coefficient of the zero polynomial");
  return c_.back();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex Polynomial::eval(const Complex& z) const {
  Complex acc(0.0, 0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + to_double(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (is_zero(c)) return {};
  std::vector<Rational> v(p.c_.size());
  for (size_t i = 0; i < p.c_.size(); ++i) v[i] = c * p.c_[i];
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const Rational& lead = b.leading();
  std::vector<Rational> quo(a.degree() - db + 1, Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    if (is_zero(rem[k])) continue;
    Rational f = rem[k] / lead;
    quo[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeff(j);
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (Rational(1) / a.leading()) * a;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (is_zero(c)) continue;
    if (!first) out << (sgn(c) > 0 ? " + " : " - ");
    if (first && sgn(c) < 0) out << "-";
    first = false;
    Rational ac = abs(c);
    if (k == 0 || ac != 1) out << ac.get_str();
    if (k > 0) out << (k == 1 ? "z" : "z^" + std::to_string(k));
  }
  return out.str();
}

}  // namespace mst
