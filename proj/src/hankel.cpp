#include "mst/hankel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mst {

namespace {

// Fraction-free Bareiss elimination on an integer matrix. Every interior
// division is exact. Column pivoting is by row swap; a fully zero column
// means a zero determinant.
Integer bareiss(std::vector<Integer>& a, int n, bool parallel) {
  int sign = 1;
  Integer prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i * n + k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return Integer(0);
      for (int j = k; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    const Integer& pivot = a[k * n + k];
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && n - k > 24)
#endif
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer t = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = std::move(t);
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  Integer d = a[(n - 1) * n + (n - 1)];
  if (sign < 0) d = -d;
  return d;
}

Rational det_impl(std::vector<Rational> m, int n, bool parallel) {
  if (n <= 0) return Rational(1);
  std::vector<Integer> a(static_cast<size_t>(n) * n);
  Integer scale(1);
  for (int i = 0; i < n; ++i) {
    Integer l(1);
    for (int j = 0; j < n; ++j) l = lcm(l, m[i * n + j].get_den());
    for (int j = 0; j < n; ++j) {
      const Rational& v = m[i * n + j];
      a[i * n + j] = v.get_num() * (l / v.get_den());
    }
    scale *= l;
  }
  return rat(bareiss(a, n, parallel), scale);
}

// Entry layouts per shift; s_k := 0 for k < 0 in the bordered families.
Rational entry(const MomentSequence& s, int k) {
  return k < 0 ? Rational(0) : s.at(k);
}

std::vector<Rational> shifted_matrix(const MomentSequence& s, int shift, int n, int& size) {
  switch (shift) {
    case 0: size = n + 1; break;
    case 1:
    case 2: size = n; break;
    case -1: size = n + 1; break;
    case -2: size = n + 2; break;
    default: throw InputError("hankel shift must be in {-2,...,2}");
  }
  std::vector<Rational> m(static_cast<size_t>(size) * size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) m[i * size + j] = entry(s, i + j + shift);
  return m;
}

std::vector<Rational> primed_matrix(const MomentSequence& s, int n) {
  const int size = n + 1;
  std::vector<Rational> m(static_cast<size_t>(size) * size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < n; ++j) m[i * size + j] = s.at(i + j);
    m[i * size + n] = s.at(i + n + 1);
  }
  return m;
}

struct Job {
  int shift;  // -2..2, or the sentinel 3 for the primed family
  int n;
};

}  // namespace

Rational det_serial(std::vector<Rational> m, int n) { return det_impl(std::move(m), n, false); }

Rational det_parallel(std::vector<Rational> m, int n) { return det_impl(std::move(m), n, true); }

int HankelLedger::required_order(int shift, int n) {
  switch (shift) {
    case 0:
    case 2:
    case -2: return 2 * n;
    case 1:
    case -1: return 2 * n - 1;
    default: throw InputError("hankel shift must be in {-2,...,2}");
  }
}

HankelLedger HankelLedger::compute(const MomentSequence& s, int n_max, bool parallel) {
  if (n_max < 0) throw InputError("ledger depth must be non-negative");
  // The full family through n_max consumes every order up to 2 n_max + 1
  // (the primed determinant is the deepest consumer).
  if (s.max_order() < (n_max == 0 ? 1 : 2 * n_max + 1))
    throw insufficient_moments(s.max_order() + 1);

  HankelLedger ledger;
  std::vector<Job> jobs;
  for (int shift = -2; shift <= 2; ++shift) {
    ledger.values_[shift + 2].assign(n_max + 2, Rational(0));
    for (int n = 1; n <= n_max; ++n) jobs.push_back({shift, n});
  }
  ledger.primed_.assign(n_max + 2, Rational(0));
  for (int n = 1; n <= n_max; ++n) jobs.push_back({3, n});

  // Base values.
  ledger.values_[2][0] = Rational(1);                       // Delta_{0,-1}
  if (n_max >= 0) ledger.values_[2][1] = s.at(0);           // Delta_{0,0}
  ledger.values_[1 + 2][1] = Rational(1);                   // Delta_{1,0}
  ledger.values_[2 + 2][1] = Rational(1);                   // Delta_{2,0}
  ledger.values_[-1 + 2][1] = Rational(0);                  // Delta_{-1,0}
  ledger.values_[-2 + 2][1] = Rational(0);                  // Delta_{-2,0}
  ledger.primed_[0] = Rational(0);                          // Delta'_{0,-1}
  ledger.primed_[1] = s.at(1);                              // Delta'_{0,0}

  const int total = static_cast<int>(jobs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int t = 0; t < total; ++t) {
    const Job& job = jobs[t];
    if (job.shift == 3) {
      ledger.primed_[job.n + 1] = det_serial(primed_matrix(s, job.n), job.n + 1);
    } else {
      int size = 0;
      std::vector<Rational> m = shifted_matrix(s, job.shift, job.n, size);
      ledger.values_[job.shift + 2][job.n + 1] = det_serial(std::move(m), size);
    }
  }
  return ledger;
}

HankelLedger HankelLedger::compute_auto(const MomentSequence& s, bool parallel) {
  const int M = s.max_order();
  // Deepest n per family given orders through M, never below the base index.
  const int cap0 = M / 2;
  const int cap1 = (M + 1) / 2;
  const int cap_primed = M >= 1 ? (M - 1) / 2 : -1;

  HankelLedger ledger;
  std::vector<Job> jobs;
  auto plan = [&](int shift, int cap) {
    ledger.values_[shift + 2].assign(cap + 2, Rational(0));
    for (int n = 1; n <= cap; ++n) jobs.push_back({shift, n});
  };
  plan(0, cap0);
  plan(1, cap1);
  plan(2, cap0);
  plan(-1, cap1);
  plan(-2, cap0);
  ledger.primed_.assign(cap_primed + 2, Rational(0));
  for (int n = 1; n <= cap_primed; ++n) jobs.push_back({3, n});

  ledger.values_[2][0] = Rational(1);
  ledger.values_[2][1] = s.at(0);
  ledger.values_[1 + 2][1] = Rational(1);
  ledger.values_[2 + 2][1] = Rational(1);
  ledger.values_[-1 + 2][1] = Rational(0);
  ledger.values_[-2 + 2][1] = Rational(0);
  ledger.primed_[0] = Rational(0);
  if (cap_primed >= 0) ledger.primed_[1] = s.at(1);

  const int total = static_cast<int>(jobs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int t = 0; t < total; ++t) {
    const Job& job = jobs[t];
    if (job.shift == 3) {
      ledger.primed_[job.n + 1] = det_serial(primed_matrix(s, job.n), job.n + 1);
    } else {
      int size = 0;
      std::vector<Rational> m = shifted_matrix(s, job.shift, job.n, size);
      ledger.values_[job.shift + 2][job.n + 1] = det_serial(std::move(m), size);
    }
  }
  return ledger;
}

const Rational& HankelLedger::delta(int shift, int n) const {
  if (shift < -2 || shift > 2) throw InputError("hankel shift must be in {-2,...,2}");
  const int min_n = shift == 0 ? -1 : 0;
  if (n < min_n) throw InputError("hankel index below base");
  const auto& v = values_[shift + 2];
  if (n + 1 >= static_cast<int>(v.size()))
    throw insufficient_moments(required_order(shift, n));
  return v[n + 1];
}

const Rational& HankelLedger::primed(int n) const {
  if (n < -1) throw InputError("hankel index below base");
  if (n + 1 >= static_cast<int>(primed_.size())) throw insufficient_moments(2 * n + 1);
  return primed_[n + 1];
}

int HankelLedger::max_n(int shift) const {
  if (shift < -2 || shift > 2) throw InputError("hankel shift must be in {-2,...,2}");
  return static_cast<int>(values_[shift + 2].size()) - 2;
}

}  // namespace mst
