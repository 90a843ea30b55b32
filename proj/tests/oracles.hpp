// Copyright 2026 The wavebayes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Slow, independent reference implementations used to check the library.

#ifndef WAVEBAYES_TESTS_ORACLES_HPP
#define WAVEBAYES_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

using Real = long double;

inline Real simpson_step(const std::function<Real(Real)>& f, Real a, Real b, Real fa,
                         Real fm, Real fb, Real whole, Real eps, int depth) {
  const Real m = (a + b) / 2;
  const Real lm = (a + m) / 2;
  const Real rm = (m + b) / 2;
  const Real flm = f(lm);
  const Real frm = f(rm);
  const Real left = (m - a) / 6 * (fa + 4 * flm + fm);
  const Real right = (b - m) / 6 * (fm + 4 * frm + fb);
  const Real diff = left + right - whole;
  if (depth <= 0 || std::fabs(diff) <= 15 * eps) return left + right + diff / 15;
  return simpson_step(f, a, m, fa, flm, fm, left, eps / 2, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, eps / 2, depth - 1);
}

// Adaptive Simpson quadrature on [a, b] to absolute tolerance eps.
inline Real integrate(const std::function<Real(Real)>& f, Real a, Real b, Real eps,
                      int depth = 50) {
  const Real fa = f(a);
  const Real fb = f(b);
  const Real fm = f((a + b) / 2);
  const Real whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, eps, depth);
}

// Sum of integrals over consecutive breakpoints.
inline Real integrate_pieces(const std::function<Real(Real)>& f,
                             const std::vector<Real>& cuts, Real eps) {
  Real total = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    if (cuts[i + 1] > cuts[i]) total += integrate(f, cuts[i], cuts[i + 1], eps);
  return total;
}

inline Real logistic_pdf(Real theta, Real tau) {
  const Real e = std::exp(-std::fabs(theta) / tau);
  return e / (tau * (1 + e) * (1 + e));
}

// Posterior mean of theta given z ~ N(theta, sigma^2) under the prior
// alpha * delta_0 + (1 - alpha) * logistic(tau). The prior is even, so both
// integrals fold onto theta >= 0 without cancellation.
inline double posterior_mean(double z_in, double sigma_in, double alpha_in,
                             double tau_in) {
  const Real z = std::fabs(static_cast<Real>(z_in));
  const Real sigma = sigma_in;
  const Real alpha = alpha_in;
  const Real tau = tau_in;
  if (z == 0) return 0.0;
  // Common factor exp(-z^2 / (2 sigma^2)) / (sigma sqrt(2 pi)) cancels.
  auto kernel_plus = [&](Real t) {  // phi((z - t)/sigma) / phi(z/sigma)
    return std::exp((2 * z * t - t * t) / (2 * sigma * sigma));
  };
  auto kernel_minus = [&](Real t) {
    return std::exp((-2 * z * t - t * t) / (2 * sigma * sigma));
  };
  const Real upper = z + 45 * sigma + 60 * tau;
  const std::vector<Real> cuts{0, z / 2, z, z + 5 * sigma, z + 15 * sigma, upper};
  auto num = [&](Real t) {
    const Real kp = kernel_plus(t);
    // kp - km = kp * (1 - exp(-2 z t / sigma^2))
    return t * logistic_pdf(t, tau) * kp * -std::expm1(-2 * z * t / (sigma * sigma));
  };
  auto den = [&](Real t) {
    return logistic_pdf(t, tau) * (kernel_plus(t) + kernel_minus(t));
  };
  const Real scale = std::exp(z * z / (2 * sigma * sigma));
  const Real n = integrate_pieces(num, cuts, 1e-16L * (1 + z) * scale);
  const Real d = integrate_pieces(den, cuts, 1e-16L * scale);
  const Real value = (1 - alpha) * n / (alpha + (1 - alpha) * d);
  return static_cast<double>(z_in < 0 ? -value : value);
}

// Regularized upper incomplete gamma Q(a, x): series below a + 1, Lentz
// continued fraction above.
inline double gamma_q(double a_in, double x_in) {
  const Real a = a_in;
  const Real x = x_in;
  if (x <= 0) return 1.0;
  const Real log_prefix = -x + a * std::log(x) - std::lgamma(a);
  if (x < a + 1) {
    Real term = 1 / a;
    Real sum = term;
    for (int n = 1; n < 100000; ++n) {
      term *= x / (a + n);
      sum += term;
      if (std::fabs(term) < std::fabs(sum) * 1e-19L) break;
    }
    return static_cast<double>(1 - sum * std::exp(log_prefix));
  }
  const Real tiny = 1e-300L;
  Real b = x + 1 - a;
  Real c = 1 / tiny;
  Real d = 1 / b;
  Real h = d;
  for (int i = 1; i < 100000; ++i) {
    const Real an = -i * (i - a);
    b += 2;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1 / d;
    const Real delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1) < 1e-19L) break;
  }
  return static_cast<double>(std::exp(log_prefix) * h);
}

inline double chi_square_upper_tail(double x, double dof) {
  return gamma_q(dof / 2, x / 2);
}

// Textbook O(n^2) periodic analysis step, written independently of the
// library's indexing.
inline void periodic_analysis(const std::vector<double>& x, const std::vector<double>& h,
                              std::vector<double>& approx, std::vector<double>& detail) {
  const std::size_t n = x.size();
  const std::size_t half = n / 2;
  const std::size_t L = h.size();
  approx.assign(half, 0.0);
  detail.assign(half, 0.0);
  for (std::size_t k = 0; k < half; ++k) {
    long double a = 0, d = 0;
    for (std::size_t l = 0; l < L; ++l) {
      const double g = ((l % 2) ? -1.0 : 1.0) * h[L - 1 - l];
      const double xv = x[(2 * k + l) % n];
      a += h[l] * xv;
      d += g * xv;
    }
    approx[k] = static_cast<double>(a);
    detail[k] = static_cast<double>(d);
  }
}

// Seeded source of random test cases.
class Cases {
 public:
  explicit Cases(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  double normal() { return std::normal_distribution<double>()(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::vector<double> normals(std::size_t n, double scale = 1.0) {
    std::vector<double> v(n);
    for (auto& x : v) x = scale * normal();
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace oracle

#endif  // WAVEBAYES_TESTS_ORACLES_HPP
