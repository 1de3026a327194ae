// Copyright 2026 The slgt Authors
// SPDX-License-Identifier: Apache-2.0

#include "slgt/wigner.hpp"

#include <cmath>
#include <map>

namespace slgt {

namespace {

constexpr int kMaxFactorial = 400;

const long double* factorial_table() {
  static const std::vector<long double> table = [] {
    std::vector<long double> t(kMaxFactorial + 1);
    t[0] = 1.0L;
    for (int k = 1; k <= kMaxFactorial; ++k) t[k] = t[k - 1] * k;
    return t;
  }();
  return table.data();
}

long double fact(int n) {
  if (n < 0 || n > kMaxFactorial) {
    throw DegreeExceeded("factorial argument out of range");
  }
  return factorial_table()[n];
}

}  // namespace

double clebsch_gordan(int tj1, int tm1, int tj2, int tm2, int tj, int tm) {
  if (tm1 + tm2 != tm) return 0.0;
  if ((tj1 + tm1) % 2 != 0 || (tj2 + tm2) % 2 != 0 || (tj + tm) % 2 != 0) return 0.0;
  if (tj < std::abs(tj1 - tj2) || tj > tj1 + tj2 || (tj1 + tj2 + tj) % 2 != 0) return 0.0;
  if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm) > tj) return 0.0;

  // Racah's closed form; all factorial arguments are integers because the
  // doubled quantum numbers share parity.
  auto f2 = [](int twice) { return fact(twice / 2); };
  long double pref = (tj + 1.0L) * f2(tj1 + tj2 - tj) * f2(tj1 - tj2 + tj) *
                     f2(-tj1 + tj2 + tj) / f2(tj1 + tj2 + tj + 2);
  pref *= f2(tj + tm) * f2(tj - tm) * f2(tj1 + tm1) * f2(tj1 - tm1) * f2(tj2 + tm2) *
          f2(tj2 - tm2);
  long double sum = 0.0L;
  int kmin = std::max(0, std::max(tj2 - tj - tm1, tj1 + tm2 - tj)) / 2;
  int kmax = std::min(tj1 + tj2 - tj, std::min(tj1 - tm1, tj2 + tm2)) / 2;
  for (int k = kmin; k <= kmax; ++k) {
    long double denom = fact(k) * f2(tj1 + tj2 - tj - 2 * k) * f2(tj1 - tm1 - 2 * k) *
                        f2(tj2 + tm2 - 2 * k) * f2(tj - tj2 + tm1 + 2 * k) *
                        f2(tj - tj1 - tm2 + 2 * k);
    long double term = 1.0L / denom;
    sum += (k % 2 == 0) ? term : -term;
  }
  return static_cast<double>(std::sqrt(pref) * sum);
}

Eigen::MatrixXd cg_isometry(int tj1, int tj2, int tj) {
  const int d1 = tj1 + 1;
  const int d2 = tj2 + 1;
  const int d = tj + 1;
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d1 * d2, d);
  for (int col = 0; col < d; ++col) {
    int tm = -tj + 2 * col;
    for (int r1 = 0; r1 < d1; ++r1) {
      int tm1 = -tj1 + 2 * r1;
      int tm2 = tm - tm1;
      if (std::abs(tm2) > tj2 || (tj2 + tm2) % 2 != 0) continue;
      int r2 = (tm2 + tj2) / 2;
      // row layout: first factor slowest
      c(r1 * d2 + r2, col) = clebsch_gordan(tj1, tm1, tj2, tm2, tj, tm);
    }
  }
  return c;
}

std::vector<int> clebsch_range(int tj1, int tj2) {
  std::vector<int> out;
  for (int tj = std::abs(tj1 - tj2); tj <= tj1 + tj2; tj += 2) out.push_back(tj);
  return out;
}

long multiplicity(const std::vector<int>& tjs, int tj) {
  std::map<int, long> mult{{0, 1}};
  for (int t : tjs) {
    std::map<int, long> next;
    for (const auto& [k, m] : mult) {
      for (int r : clebsch_range(k, t)) next[r] += m;
    }
    mult = std::move(next);
  }
  auto it = mult.find(tj);
  return it == mult.end() ? 0 : it->second;
}

long invariant_dimension(const std::vector<int>& tjs) {
  std::map<int, long> mult{{0, 1}};
  for (int t : tjs) {
    std::map<int, long> next;
    for (const auto& [k, m] : mult) {
      for (int r : clebsch_range(k, t)) next[r] += m;
    }
    mult = std::move(next);
  }
  long dim = 0;
  for (const auto& [k, m] : mult) dim += m * m;
  return dim;
}

MatX irrep_matrix(int tj, const Mat2& g) {
  const int n = tj;  // polynomial degree
  const int d = n + 1;
  MatX out = MatX::Zero(d, d);
  const Complex a = g(0, 0), b = g(0, 1), c = g(1, 0), dd = g(1, 1);

  // powers up to n
  std::vector<Complex> pa(n + 1), pb(n + 1), pc(n + 1), pd(n + 1);
  pa[0] = pb[0] = pc[0] = pd[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    pa[k] = pa[k - 1] * a;
    pb[k] = pb[k - 1] * b;
    pc[k] = pc[k - 1] * c;
    pd[k] = pd[k - 1] * dd;
  }
  std::vector<long double> binom(n + 1);
  for (int k = 0; k <= n; ++k) {
    binom[k] = fact(n) / (fact(k) * fact(n - k));
  }
  // column r: image of x^{n-r} y^r under x -> a x + c y, y -> b x + d y,
  // expanded in y-degree s; normalization sqrt(binom(r)/binom(s)).
  for (int r = 0; r <= n; ++r) {
    for (int p = 0; p <= n - r; ++p) {
      for (int q = 0; q <= r; ++q) {
        int s = p + q;
        long double comb = fact(n - r) / (fact(p) * fact(n - r - p)) * fact(r) /
                           (fact(q) * fact(r - q));
        double norm = static_cast<double>(comb * std::sqrt(binom[r] / binom[s]));
        out(s, r) += norm * pa[n - r - p] * pc[p] * pb[r - q] * pd[q];
      }
    }
  }
  return out;
}

Complex irrep_character(int tj, const Mat2& g) {
  return irrep_matrix(tj, g).trace();
}

}  // namespace slgt
