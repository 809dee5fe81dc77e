#include "mst/orthopoly.hpp"

namespace mst {

namespace {

// Depth through which Delta_{0,n} is known positive; throws on negatives or
// a broken zero pattern. Returns the rank when a zero is visible.
struct PositivityScan {
  int strict_through;            // Delta_{0,n} > 0 for all n <= strict_through
  std::optional<int> rank;       // first zero index, when observed
};

PositivityScan scan_delta0(const HankelLedger& ledger) {
  PositivityScan scan{-1, std::nullopt};
  for (int n = 0; n <= ledger.max_n(0); ++n) {
    const int sg = sgn(ledger.delta(0, n));
    if (sg < 0)
      throw ClassError("not a positive sequence: Delta_{0," + std::to_string(n) + "} < 0");
    if (sg == 0) {
      scan.rank = n;
      break;
    }
    scan.strict_through = n;
  }
  return scan;
}

void require_strict(const PositivityScan& scan, int depth, const char* what) {
  if (scan.rank && depth > *scan.rank - 1)
    throw ClassError(std::string(what) + ": depth " + std::to_string(depth) +
                     " exceeds finite rank " + std::to_string(*scan.rank));
  if (depth > scan.strict_through)
    throw insufficient_moments(2 * (scan.strict_through + 1));
}

// Bordered determinant for the monic p_n: Hankel rows s_0.. through
// s_{n-1}..s_{2n-1}, last row 1, z, ..., z^n; expanded along the last row
// and divided by Delta_{0,n-1}.
Polynomial first_kind_determinant(const MomentSequence& s, int n, const Rational& delta_prev) {
  if (n == 0) return Polynomial::constant(Rational(1));
  const int size = n + 1;
  Polynomial acc;
  for (int col = 0; col < size; ++col) {
    // Minor of the (1, z, ..., z^n) row at column col.
    std::vector<Rational> minor;
    minor.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < size; ++j)
        if (j != col) minor.push_back(s.at(i + j));
    Rational cof = det_serial(std::move(minor), n);
    if ((n + col) % 2 != 0) cof = -cof;
    acc += Polynomial::monomial(cof, col);
  }
  return (Rational(1) / delta_prev) * acc;
}

// Same layout with the last row replaced by R_{n,0}(z), ..., R_{n,n}(z),
// R_{n,k}(z) = sum_{m=0}^{k-1} s_{k-1-m} z^m.
Polynomial second_kind_determinant(const MomentSequence& s, int n, const Rational& delta_prev) {
  if (n == 0) return {};
  const int size = n + 1;
  Polynomial acc;
  for (int col = 1; col < size; ++col) {  // R_{n,0} is identically zero
    std::vector<Rational> minor;
    minor.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < size; ++j)
        if (j != col) minor.push_back(s.at(i + j));
    Rational cof = det_serial(std::move(minor), n);
    if ((n + col) % 2 != 0) cof = -cof;
    std::vector<Rational> r(col);
    for (int m = 0; m < col; ++m) r[m] = s.at(col - 1 - m);
    acc += Polynomial(std::move(r)) * Polynomial::monomial(cof, 0);
  }
  return (Rational(1) / delta_prev) * acc;
}

}  // namespace

int max_jacobi_depth(const MomentSequence& s) {
  HankelLedger ledger = HankelLedger::compute_auto(s);
  PositivityScan scan = scan_delta0(ledger);
  int cap = scan.rank ? *scan.rank - 1 : scan.strict_through;
  // a_n additionally needs Delta'_{0,n}, i.e. s_{2n+1}.
  return std::min(cap, ledger.max_primed());
}

JacobiModel jacobi_from_moments(const MomentSequence& s, int depth) {
  if (depth < 0) throw InputError("jacobi depth must be non-negative");
  HankelLedger ledger = HankelLedger::compute_auto(s);
  PositivityScan scan = scan_delta0(ledger);
  require_strict(scan, depth, "jacobi_from_moments");
  if (ledger.max_primed() < depth) throw insufficient_moments(2 * depth + 1);

  JacobiModel J;
  J.a.resize(depth + 1);
  J.b2.resize(depth);
  for (int n = 0; n <= depth; ++n) {
    J.a[n] = ledger.primed(n) / ledger.delta(0, n) -
             ledger.primed(n - 1) / ledger.delta(0, n - 1);
    if (n < depth) {
      Rational d = ledger.delta(0, n);
      J.b2[n] = ledger.delta(0, n - 1) * ledger.delta(0, n + 1) / (d * d);
    }
  }
  return J;
}

OrthoPolyPair ortho_polys(const MomentSequence& s, int n_max) {
  if (n_max < 0) throw InputError("polynomial index must be non-negative");
  HankelLedger ledger = HankelLedger::compute_auto(s);
  PositivityScan scan = scan_delta0(ledger);
  // p_n and q_n exist through n = rank (the last polynomial of an exactly
  // determinate family); coefficients need a_0..a_{n-1} only.
  if (scan.rank) {
    if (n_max > *scan.rank)
      throw ClassError("orthogonal polynomials: index " + std::to_string(n_max) +
                       " exceeds finite rank " + std::to_string(*scan.rank));
  } else if (n_max > scan.strict_through + 1) {
    throw insufficient_moments(2 * (scan.strict_through + 1));
  }
  if (n_max > 0 && ledger.max_primed() < n_max - 1) throw insufficient_moments(2 * n_max - 1);

  OrthoPolyPair pair;
  pair.p.resize(n_max + 1);
  pair.q.resize(n_max + 1);
  // The rescaling factor norms2_n needs s_{2n}; one entry short of p_n when
  // the prefix ends on an odd order.
  pair.norms2.resize(std::min(n_max, ledger.max_n(0)) + 1);
  pair.p[0] = Polynomial::constant(Rational(1));
  pair.q[0] = {};
  pair.norms2[0] = ledger.delta(0, 0);
  if (n_max == 0) return pair;

  pair.p[1] = Polynomial({-s.at(1) / s.at(0), Rational(1)});
  pair.q[1] = Polynomial::constant(s.at(0));
  if (pair.norms2.size() > 1) pair.norms2[1] = ledger.delta(0, 1) / ledger.delta(0, 0);
  for (int n = 1; n < n_max; ++n) {
    Rational a_n = ledger.primed(n) / ledger.delta(0, n) -
                   ledger.primed(n - 1) / ledger.delta(0, n - 1);
    Rational d = ledger.delta(0, n - 1);
    Rational b2_prev = ledger.delta(0, n - 2) * ledger.delta(0, n) / (d * d);
    Polynomial shift({-a_n, Rational(1)});
    pair.p[n + 1] = shift * pair.p[n] - b2_prev * pair.p[n - 1];
    pair.q[n + 1] = shift * pair.q[n] - b2_prev * pair.q[n - 1];
    if (n + 1 < static_cast<int>(pair.norms2.size()))
      pair.norms2[n + 1] = ledger.delta(0, n + 1) / ledger.delta(0, n);
  }

  // Cross-check against the bordered-determinant formulas.
  for (int n = 0; n <= n_max; ++n) {
    if (pair.p[n] != first_kind_determinant(s, n, ledger.delta(0, n - 1)))
      throw NumericError("first-kind determinant formula disagrees with the recurrence at n = " +
                         std::to_string(n));
    if (pair.q[n] != second_kind_determinant(s, n, ledger.delta(0, n - 1)))
      throw NumericError("second-kind determinant formula disagrees with the recurrence at n = " +
                         std::to_string(n));
  }
  return pair;
}

Polynomial first_kind(const MomentSequence& s, int n) { return ortho_polys(s, n).p[n]; }

Polynomial second_kind(const MomentSequence& s, int n) { return ortho_polys(s, n).q[n]; }

BoundaryValuesZero boundary_values_zero(const MomentSequence& s, int n_max) {
  if (n_max < 0) throw InputError("boundary depth must be non-negative");
  HankelLedger ledger = HankelLedger::compute_auto(s);
  PositivityScan scan = scan_delta0(ledger);
  require_strict(scan, n_max, "boundary_values_zero");
  if (ledger.max_n(1) < n_max) throw insufficient_moments(2 * n_max - 1);

  BoundaryValuesZero bv;
  bv.P0sq.resize(n_max + 1);
  bv.Q0sq.resize(n_max + 1);
  bv.ratio.resize(n_max + 1);
  bv.sign_P.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    Rational denom = ledger.delta(0, n - 1) * ledger.delta(0, n);
    const Rational& d1 = ledger.delta(1, n);
    const Rational& dm1 = ledger.delta(-1, n);
    bv.P0sq[n] = d1 * d1 / denom;
    bv.Q0sq[n] = dm1 * dm1 / denom;
    if (is_zero(d1)) {
      bv.ratio[n] = std::nullopt;
      bv.sign_P[n] = 0;
    } else {
      bv.ratio[n] = dm1 / d1;
      bv.sign_P[n] = (n % 2 == 0 ? 1 : -1) * sgn(d1);
    }
  }
  return bv;
}

Rational wronskian_residual(const MomentSequence& s, int n) {
  if (n < 0) throw InputError("wronskian index must be non-negative");
  OrthoPolyPair pair = ortho_polys(s, n + 1);
  HankelLedger ledger = HankelLedger::compute_auto(s);
  Polynomial w = pair.p[n] * pair.q[n + 1] - pair.p[n + 1] * pair.q[n];
  if (w.degree() > 0)
    throw NumericError("wronskian is not constant at n = " + std::to_string(n));
  Rational w0 = w.coeff(0);
  Rational d = ledger.delta(0, n);
  Rational b2 = ledger.delta(0, n - 1) * ledger.delta(0, n + 1) / (d * d);
  // (P_n Q_{n+1} - P_{n+1} Q_n)^2 = w0^2 Delta_{0,n-1} / Delta_{0,n+1}.
  return b2 * w0 * w0 * ledger.delta(0, n - 1) / ledger.delta(0, n + 1) - 1;
}

}  // namespace mst
