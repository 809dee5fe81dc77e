#include "mst/moments.hpp"

#include "mst/hankel.hpp"

namespace mst {

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  for (size_t i = 0; i < atoms_.size(); ++i) {
    if (sgn(atoms_[i].weight) <= 0)
      throw InputError("measure weights must be strictly positive");
    for (size_t j = 0; j < i; ++j)
      if (atoms_[i].position == atoms_[j].position)
        throw InputError("measure positions must be pairwise distinct");
  }
}

MomentSequence moments_from_measure(const DiscreteMeasure& mu, int count) {
  if (mu.size() == 0) throw InputError("moments of an empty measure");
  if (count < 1) throw InputError("moment count must be at least 1");
  std::vector<Rational> s(count, Rational(0));
  for (const Atom& a : mu.atoms()) {
    Rational power(1);
    for (int k = 0; k < count; ++k) {
      s[k] += a.weight * power;
      power *= a.position;
    }
  }
  return MomentSequence(std::move(s));
}

MomentSequence scale(const MomentSequence& s, const Rational& c) {
  if (sgn(c) <= 0) throw InputError("moment scale factor must be positive");
  std::vector<Rational> v = s.values();
  for (Rational& x : v) x *= c;
  return MomentSequence(std::move(v));
}

Classification classify(const MomentSequence& s) {
  HankelLedger ledger = HankelLedger::compute_auto(s);
  Classification cls;
  cls.examined_delta0 = ledger.max_n(0);
  cls.examined_delta1 = ledger.max_n(1);

  // Delta_{0,n} scan: positivity, strictness, finite rank.
  std::optional<int> first_zero;
  for (int n = 0; n <= cls.examined_delta0; ++n) {
    const Rational& d = ledger.delta(0, n);
    const int sg = sgn(d);
    if (sg < 0)
      throw ClassError("not a positive sequence: Delta_{0," + std::to_string(n) +
                       "} = " + to_string(d) + " < 0");
    if (sg == 0 && !first_zero) first_zero = n;
    if (sg > 0 && first_zero)
      throw ClassError("not a moment sequence: Delta_{0," + std::to_string(*first_zero) +
                       "} = 0 but Delta_{0," + std::to_string(n) + "} = " + to_string(d));
  }
  cls.positive = true;
  cls.strictly_positive_through = first_zero ? *first_zero - 1 : cls.examined_delta0;
  cls.finite_rank = first_zero;

  // Delta_{1,n} scan. Negative entries are legitimate for Hamburger data;
  // they just rule the sequence out of the double positive class.
  bool all_nonneg = true;
  int strict1 = cls.examined_delta1;
  for (int n = 1; n <= cls.examined_delta1; ++n) {
    const int sg = sgn(ledger.delta(1, n));
    if (sg < 0) all_nonneg = false;
    if (sg <= 0 && strict1 == cls.examined_delta1) strict1 = n - 1;
  }
  cls.double_positive = all_nonneg;
  cls.strictly_double_positive_through =
      std::min(strict1, cls.strictly_positive_through);
  return cls;
}

}  // namespace mst
