#pragma once

#include <array>
#include <vector>

#include "mst/moments.hpp"

namespace mst {

/// Determinant of a dense rational matrix (row-major, n x n) by
/// fraction-free Bareiss elimination after clearing denominators row by
/// row. The parallel variant distributes the elimination rows with OpenMP
/// and returns the identical exact value.
Rational det_serial(std::vector<Rational> m, int n);
Rational det_parallel(std::vector<Rational> m, int n);

/// The Hankel determinant family of a moment prefix:
///   Delta_{0,n} = det[s_{i+j}],                    i,j = 0..n
///   Delta'_{0,n}: last column advanced to s_{i+n+1}
///   Delta_{1,n} = det[s_{1+i+j}], Delta_{2,n} = det[s_{2+i+j}],  i,j = 0..n-1
///   Delta_{-1,n}, Delta_{-2,n}: bordered layouts with s_k := 0 for k < 0
/// with the declared base values Delta_{0,-1} = Delta_{1,0} = Delta_{2,0} = 1,
/// Delta_{-1,0} = Delta_{-2,0} = 0, Delta'_{0,-1} = 0, Delta'_{0,0} = s_1.
class HankelLedger {
 public:
  /// All shifts through n_max; throws ClassError naming the first missing
  /// moment when the prefix is too short for a requested determinant.
  static HankelLedger compute(const MomentSequence& s, int n_max, bool parallel = false);
  /// Every shift to its own data limit (never throws for depth reasons).
  static HankelLedger compute_auto(const MomentSequence& s, bool parallel = false);

  /// Delta_{shift,n}; supports the base indices (n = -1 for shift 0).
  const Rational& delta(int shift, int n) const;
  /// Delta'_{0,n}; supports n = -1.
  const Rational& primed(int n) const;

  /// Largest n with Delta_{shift,n} available.
  int max_n(int shift) const;
  int max_primed() const { return static_cast<int>(primed_.size()) - 2; }

  /// Moment order needed by Delta_{shift,n}.
  static int required_order(int shift, int n);

 private:
  // values_[shift + 2][n + 1] = Delta_{shift, n}, n from -1 (shift 0 keeps a
  // base slot for every shift; unused ones hold the declared values).
  std::array<std::vector<Rational>, 5> values_;
  std::vector<Rational> primed_;  // primed_[n + 1] = Delta'_{0,n}
};

/// Convenience wrapper for the strict ledger (spec operation surface).
inline HankelLedger hankel_ledger(const MomentSequence& s, int n_max, bool parallel = false) {
  return HankelLedger::compute(s, n_max, parallel);
}

}  // namespace mst
