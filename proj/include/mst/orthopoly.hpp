#pragma once

#include <optional>
#include <vector>

#include "mst/hankel.hpp"
#include "mst/polynomial.hpp"

namespace mst {

/// Jacobi matrix data: diagonal a_0..a_n and squared off-diagonal
/// b_0^2..b_{n-1}^2. Only the squares are stored; b_n > 0 is the chosen
/// normalization and floating b_n = sqrt(b_n^2) is computed on demand.
struct JacobiModel {
  std::vector<Rational> a;
  std::vector<Rational> b2;

  int depth() const { return static_cast<int>(a.size()) - 1; }
  bool operator==(const JacobiModel&) const = default;
};

/// a_n = Delta'_{0,n}/Delta_{0,n} - Delta'_{0,n-1}/Delta_{0,n-1},
/// b_n^2 = Delta_{0,n-1} Delta_{0,n+1} / Delta_{0,n}^2, through a_depth.
/// Requires strict positivity through depth; for finite rank N the depth is
/// capped at N-1 (ClassError past it).
JacobiModel jacobi_from_moments(const MomentSequence& s, int depth);

/// Largest admissible depth for jacobi_from_moments given data and rank.
int max_jacobi_depth(const MomentSequence& s);

/// Monic rescalings p_n of the orthonormal P_n together with the matching
/// rescalings q_n of the second-kind Q_n and the squared rescaling factors
/// norms2_n = Delta_{0,n}/Delta_{0,n-1}. Both the three-term recurrence and
/// the bordered-determinant formulas are evaluated and asserted equal.
struct OrthoPolyPair {
  std::vector<Polynomial> p;
  std::vector<Polynomial> q;
  std::vector<Rational> norms2;
};

OrthoPolyPair ortho_polys(const MomentSequence& s, int n_max);

Polynomial first_kind(const MomentSequence& s, int n);
Polynomial second_kind(const MomentSequence& s, int n);

/// Values of P_n and Q_n at zero, kept in exact squared/ratio form:
///   P0sq_n = Delta_{1,n}^2  / (Delta_{0,n-1} Delta_{0,n})
///   Q0sq_n = Delta_{-1,n}^2 / (Delta_{0,n-1} Delta_{0,n})
///   ratio_n = Q_n(0)/P_n(0) = Delta_{-1,n}/Delta_{1,n}   (absent when P_n(0) = 0)
///   sign_P_n = (-1)^n sgn(Delta_{1,n})
struct BoundaryValuesZero {
  std::vector<Rational> P0sq;
  std::vector<Rational> Q0sq;
  std::vector<std::optional<Rational>> ratio;
  std::vector<int> sign_P;
};

BoundaryValuesZero boundary_values_zero(const MomentSequence& s, int n_max);

/// b_n^2 (P_n Q_{n+1} - P_{n+1} Q_n)^2 - 1, computed exactly through the
/// monic rescalings; identically zero.
Rational wronskian_residual(const MomentSequence& s, int n);

}  // namespace mst
