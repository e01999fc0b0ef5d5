#include "gairy/recurrence.hpp"

#include <stdexcept>
#include <string>

namespace gairy {
namespace {

// sum_{i,j} a_i b_j mu_{i+j+shift}
Real bilinear(const std::vector<Real>& a, const std::vector<Real>& b, const std::vector<Real>& mu,
              int shift) {
  Real total(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Real row(0);
    for (std::size_t j = 0; j < b.size(); ++j) row += b[j] * mu[i + j + shift];
    total += a[i] * row;
  }
  return total;
}

[[noreturn]] void not_positive(int n) {
  throw PrecisionError("moment table not positive definite at this precision (n = " +
                       std::to_string(n) + ")");
}

}  // namespace

std::vector<Real> RecurrenceTable::log_hankel() const {
  PrecisionScope scope(digits);
  std::vector<Real> out{Real(0)};
  for (int j = 0; j <= nmax; ++j) out.push_back(out.back() + log(h[j]));
  return out;
}

Real HankelSequence::beta(int n) const {
  if (n < 1 || n + 1 >= static_cast<int>(log_d.size())) {
    throw std::out_of_range("HankelSequence::beta index out of range");
  }
  PrecisionScope scope(digits);
  return pivots[n] / pivots[n - 1];
}

RecurrenceTable build_recurrence(const MomentTable& moments, int nmax,
                                 const PrecisionContext& ctx) {
  if (nmax < 0) throw std::invalid_argument("nmax must be non-negative");
  if (moments.jmax() < 2 * nmax + 2) {
    throw std::invalid_argument("moment table too short: need jmax >= 2 nmax + 2");
  }
  PrecisionScope scope(ctx.working_digits);
  const auto& mu = moments.mu;
  Real t = moments.params.t();

  RecurrenceTable table{moments.params, nmax, ctx.working_digits, {}, {}, {}, {}, {}, {}};
  table.p.push_back(Real(0));

  std::vector<Real> prev;          // P_{n-1}
  std::vector<Real> cur{Real(1)};  // P_n
  for (int n = 0; n <= nmax; ++n) {
    Real hn = bilinear(cur, cur, mu, 0);
    if (!(hn > 0)) not_positive(n);
    Real an = bilinear(cur, cur, mu, 1) / hn;
    Real bn = n == 0 ? Real(0) : hn / table.h.back();

    table.h.push_back(hn);
    table.alpha.push_back(an);
    table.beta.push_back(bn);
    table.coeffs.push_back(cur);
    table.p.push_back(table.p.back() - an);

    // P_{n+1} = (x - alpha_n) P_n - beta_n P_{n-1}
    std::vector<Real> next(cur.size() + 1);
    for (std::size_t k = 0; k < cur.size(); ++k) {
      next[k + 1] += cur[k];
      next[k] -= an * cur[k];
    }
    for (std::size_t k = 0; k < prev.size(); ++k) next[k] -= bn * prev[k];
    prev = std::move(cur);
    cur = std::move(next);
  }

  table.sum_R.push_back(Real(0));
  for (int j = 0; j < nmax; ++j) {
    Real rj = table.alpha[j] * table.alpha[j] + table.beta[j] + table.beta[j + 1] - t;
    table.sum_R.push_back(table.sum_R.back() + rj);
  }
  return table;
}

HankelSequence hankel_determinants_direct(const MomentTable& moments, int nmax,
                                          const PrecisionContext& ctx) {
  if (moments.jmax() < 2 * nmax) throw std::invalid_argument("moment table too short");
  PrecisionScope scope(ctx.working_digits);
  const auto& mu = moments.mu;
  const int size = nmax + 1;

  // Column k of L, stored below the diagonal: l[i][k] for i > k.
  std::vector<std::vector<Real>> l(size);
  HankelSequence out;
  out.digits = ctx.working_digits;
  out.log_d.push_back(Real(0));
  for (int k = 0; k < size; ++k) {
    Real dk = mu[2 * k];
    for (int m = 0; m < k; ++m) dk -= l[k][m] * l[k][m] * out.pivots[m];
    if (!(dk > 0)) not_positive(k);
    l[k].resize(k);
    for (int i = k + 1; i < size; ++i) {
      Real s = mu[i + k];
      for (int m = 0; m < k; ++m) s -= l[i][m] * l[k][m] * out.pivots[m];
      if (l[i].size() < static_cast<std::size_t>(i)) l[i].resize(i);
      l[i][k] = s / dk;
    }
    out.log_d.push_back(out.log_d.back() + log(dk));
    out.pivots.push_back(std::move(dk));
  }
  return out;
}

PolyValue polynomial_eval(const RecurrenceTable& table, int n, const Real& x) {
  if (n < 0 || n > table.nmax + 1) throw std::out_of_range("polynomial_eval: n out of range");
  PrecisionScope scope(table.digits);
  Real p0(1), d0(0), s0(0);  // P_{k-1} and derivatives
  Real p1(1), d1(0), s1(0);  // P_k
  if (n == 0) return {p1, d1, s1};
  p1 = x - table.alpha[0];
  d1 = Real(1);
  for (int k = 1; k < n; ++k) {
    Real xa = x - table.alpha[k];
    const Real& b = table.beta[k];
    Real p2 = xa * p1 - b * p0;
    Real d2 = p1 + xa * d1 - b * d0;
    Real s2 = 2 * d1 + xa * s1 - b * s0;
    p0 = std::move(p1), d0 = std::move(d1), s0 = std::move(s1);
    p1 = std::move(p2), d1 = std::move(d2), s1 = std::move(s2);
  }
  return {p1, d1, s1};
}

}  // namespace gairy
