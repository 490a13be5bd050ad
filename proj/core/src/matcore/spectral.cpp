#include "lyap/matcore/spectral.hpp"

#include <cmath>

#include "lyap/errors.hpp"

namespace lyap::matcore {

double spectral_radius(const Mat& a, double tol) {
  if (tol <= 0) throw contract_error("spectral_radius: tol must be positive");
  double nrm = norm(a);
  if (nrm == 0.0) return 0.0;
  if (!std::isfinite(nrm)) throw numeric_error("spectral_radius: non-finite input");

  // log ||A^(2^m)|| / 2^m  ==  acc after m squarings
  Mat b = (1.0 / nrm) * a;
  double acc = std::log(nrm);
  double prev = acc;
  double weight = 1.0;
  for (int m = 1; m <= 60; ++m) {
    b = b * b;
    double nb = norm(b);
    if (nb == 0.0) return 0.0;  // nilpotent
    if (!std::isfinite(nb)) throw numeric_error("spectral_radius: non-finite intermediate");
    weight *= 0.5;
    acc += weight * std::log(nb);
    b = (1.0 / nb) * b;
    if (std::abs(acc - prev) < tol && m >= 3) break;
    prev = acc;
  }
  return std::exp(acc);
}

namespace {

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double sum(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

// one power-iteration run on (B + eps I); returns the converged positive
// eigenvector and the shifted eigenvalue estimate
std::pair<std::vector<double>, double> power_positive(const Mat& b, double eps,
                                                      double tol) {
  const int n = b.n;
  std::vector<double> x(n, 1.0 / n), y(n);
  double lam = 0.0;
  const int max_iter = 500000;
  for (int it = 0; it < max_iter; ++it) {
    for (int i = 0; i < n; ++i) {
      double s = eps * x[i];
      const double* row = &b.a[static_cast<size_t>(i) * n];
      for (int j = 0; j < n; ++j) s += row[j] * x[j];
      y[i] = s;
    }
    double s1 = sum(y);
    if (s1 <= 0.0 || !std::isfinite(s1))
      throw contract_error("perron_pair: iterate left the positive cone (input not positively irreducible?)");
    double diff = 0.0;
    for (int i = 0; i < n; ++i) {
      y[i] /= s1;
      diff = std::max(diff, std::abs(y[i] - x[i]));
    }
    lam = s1;
    x.swap(y);
    if (diff < tol && it >= 2) return {x, lam};
  }
  throw numeric_error("perron_pair: power iteration did not converge");
}

}  // namespace

PerronData perron_pair(const Mat& b, double tol) {
  if (tol <= 0) throw contract_error("perron_pair: tol must be positive");
  if (!b.is_nonnegative()) throw contract_error("perron_pair: matrix has negative entries");
  const int n = b.n;

  // the shift breaks periodicity; eigenvectors of B + eps I equal those of B
  const double eps = std::max(tol, 1e-13) * std::max(1.0, norm(b));
  const double itol = std::min(tol * 1e-2, 1e-12);

  auto [u, lam_u] = power_positive(b, eps, itol);
  auto [v, lam_v] = power_positive(transpose(b), eps, itol);

  double rho = 0.5 * (lam_u + lam_v) - eps;
  if (rho < 0.0) rho = 0.0;

  for (double x : u)
    if (x <= 0.0) throw contract_error("perron_pair: eigenvector hit a zero coordinate");
  for (double x : v)
    if (x <= 0.0) throw contract_error("perron_pair: eigenvector hit a zero coordinate");

  double p = dot(v, u);
  for (double& x : v) x /= p;

  PerronData out;
  out.rho = rho;
  out.u = std::move(u);
  out.v = std::move(v);

  // residual check against the contract
  const double scale = std::max(1.0, norm(b));
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    double bu = 0.0, vb = 0.0;
    for (int j = 0; j < n; ++j) {
      bu += b.at(i, j) * out.u[j];
      vb += out.v[j] * b.at(j, i);
    }
    res = std::max(res, std::abs(bu - rho * out.u[i]));
    res = std::max(res, std::abs(vb - rho * out.v[i]));
  }
  if (res > tol * scale)
    throw numeric_error("perron_pair: residual above tolerance");
  return out;
}

}  // namespace lyap::matcore
