#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mst/rational.hpp"

namespace mst {

/// Finite prefix s_0..s_M of a moment sequence; s_0 > 0.
class MomentSequence {
 public:
  explicit MomentSequence(std::vector<Rational> s) : s_(std::move(s)) {
    if (s_.empty()) throw InputError("moment sequence must be nonempty");
    if (sgn(s_[0]) <= 0) throw InputError("moment sequence requires s_0 > 0");
  }

  int count() const { return static_cast<int>(s_.size()); }
  int max_order() const { return count() - 1; }
  bool has(int k) const { return k >= 0 && k < count(); }
  /// Throws ClassError naming s_k when the prefix is too short.
  const Rational& at(int k) const {
    if (!has(k)) throw insufficient_moments(k);
    return s_[k];
  }
  const std::vector<Rational>& values() const { return s_; }

  bool operator==(const MomentSequence&) const = default;

 private:
  std::vector<Rational> s_;
};

struct Atom {
  Rational position;
  Rational weight;
  bool operator==(const Atom&) const = default;
};

/// Finitely many atoms with strictly positive weights at distinct positions.
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;
  explicit DiscreteMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  int size() const { return static_cast<int>(atoms_.size()); }

  bool operator==(const DiscreteMeasure&) const = default;

 private:
  std::vector<Atom> atoms_;
};

/// s_k = sum_i w_i lambda_i^k for k = 0..count-1, exact.
MomentSequence moments_from_measure(const DiscreteMeasure& mu, int count);

/// Componentwise positive rescaling s~_k = c s_k. Jacobi coefficients are
/// invariant under it; Stieltjes string data transforms as omega~ = c omega,
/// l~ = l / c.
MomentSequence scale(const MomentSequence& s, const Rational& c);

struct Classification {
  bool positive = false;
  /// Largest n with Delta_{0,m} > 0 for all m <= n.
  int strictly_positive_through = -1;
  bool double_positive = false;
  int strictly_double_positive_through = -1;
  /// N with Delta_{0,n} > 0 for n < N and Delta_{0,n} = 0 for n >= N, when a
  /// zero was actually observed within the examined depth.
  std::optional<int> finite_rank;
  /// Depths actually examined; all statements hold "as far as data allows".
  int examined_delta0 = -1;
  int examined_delta1 = -1;
};

/// Classifies positivity from the Hankel ledger over the whole available
/// prefix. Throws ClassError naming the first failing determinant when some
/// Delta_{0,n} < 0, or when a zero is followed by a nonzero (not a moment
/// sequence of a positive measure).
Classification classify(const MomentSequence& s);

}  // namespace mst
