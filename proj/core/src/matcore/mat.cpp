#include "lyap/matcore/mat.hpp"

#include <cmath>
#include <cstdlib>

#include "lyap/errors.hpp"

namespace lyap::matcore {

Mat::Mat(int dim, std::vector<double> entries) : n(dim), a(std::move(entries)) {
  if (n < 1 || a.size() != static_cast<size_t>(n) * n)
    throw contract_error("Mat: entry count does not match dimension");
  for (double x : a)
    if (!std::isfinite(x)) throw contract_error("Mat: non-finite entry");
}

Mat Mat::identity(int dim) {
  Mat m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

bool Mat::is_nonnegative() const {
  for (double x : a)
    if (x < 0.0) return false;
  return true;
}

bool Mat::is_zero() const {
  for (double x : a)
    if (x != 0.0) return false;
  return true;
}

Mat operator*(const Mat& x, const Mat& y) {
  const int n = x.n;
  Mat r(n);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      const double xv = x.at(i, l);
      if (xv == 0.0) continue;
      const double* yrow = &y.a[static_cast<size_t>(l) * n];
      double* rrow = &r.a[static_cast<size_t>(i) * n];
      for (int j = 0; j < n; ++j) rrow[j] += xv * yrow[j];
    }
  return r;
}

Mat operator+(const Mat& x, const Mat& y) {
  Mat r(x.n);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

Mat operator*(double c, const Mat& x) {
  Mat r(x.n);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = c * x.a[i];
  return r;
}

Mat transpose(const Mat& x) {
  Mat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

bool BoolMat::any() const {
  for (uint8_t x : a)
    if (x) return true;
  return false;
}

BoolMat support(const Mat& x) {
  BoolMat r(x.n);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] != 0.0;
  return r;
}

BoolMat support(const RatMat& x) {
  BoolMat r(x.n);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] != 0;
  return r;
}

BoolMat bool_product(const BoolMat& x, const BoolMat& y) {
  const int n = x.n;
  BoolMat r(n);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      if (!x.at(i, l)) continue;
      for (int j = 0; j < n; ++j)
        if (y.at(l, j)) r.at(i, j) = 1;
    }
  return r;
}

BoolMat bool_or(const BoolMat& x, const BoolMat& y) {
  BoolMat r(x.n);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] | y.a[i];
  return r;
}

MatTuple::MatTuple(std::vector<Mat> ms) : mats(std::move(ms)) {
  if (mats.empty()) throw contract_error("MatTuple: needs at least one matrix");
  d = mats[0].n;
  k = static_cast<int>(mats.size());
  bool all_zero = true;
  for (const Mat& m : mats) {
    if (m.n != d) throw contract_error("MatTuple: unequal dimensions");
    if (!m.is_zero()) all_zero = false;
  }
  if (all_zero) throw contract_error("MatTuple: all matrices are zero");
}

MatTuple::MatTuple(std::vector<RatMat> ms) {
  if (ms.empty()) throw contract_error("MatTuple: needs at least one matrix");
  d = ms[0].n;
  k = static_cast<int>(ms.size());
  bool all_zero = true;
  mats.reserve(ms.size());
  for (const RatMat& m : ms) {
    if (m.n != d) throw contract_error("MatTuple: unequal dimensions");
    if (!is_zero(m)) all_zero = false;
    Mat f(d);
    for (size_t i = 0; i < m.a.size(); ++i) f.a[i] = to_double(m.a[i]);
    mats.push_back(std::move(f));
  }
  if (all_zero) throw contract_error("MatTuple: all matrices are zero");
  exact = std::move(ms);
}

bool MatTuple::is_nonnegative() const {
  if (exact) {
    for (const RatMat& m : *exact)
      for (const Rat& x : m.a)
        if (x < 0) return false;
    return true;
  }
  for (const Mat& m : mats)
    if (!m.is_nonnegative()) return false;
  return true;
}

MatTuple scale(const MatTuple& m, double c) {
  std::vector<Mat> ms;
  ms.reserve(m.mats.size());
  for (const Mat& x : m.mats) ms.push_back(c * x);
  return MatTuple(std::move(ms));
}

MatTuple scale_exact(const MatTuple& m, const Rat& c) {
  if (!m.exact) throw contract_error("scale_exact: tuple has no exact entries");
  std::vector<RatMat> ms;
  ms.reserve(m.exact->size());
  for (const RatMat& x : *m.exact) ms.push_back(c * x);
  return MatTuple(std::move(ms));
}

double norm(const Mat& x) {
  double s = 0.0;
  for (double v : x.a) s += std::abs(v);
  return s;
}

Rat norm(const RatMat& x) {
  Rat s = 0;
  for (const Rat& v : x.a) s += abs(v);
  return s;
}

Mat word_product(const MatTuple& m, const Word& w) {
  if (w.empty()) throw contract_error("word_product: empty word");
  Mat p = m.mats.at(w[0]);
  for (size_t i = 1; i < w.size(); ++i) p = p * m.mats.at(w[i]);
  return p;
}

RatMat word_product_exact(const MatTuple& m, const Word& w) {
  if (!m.exact) throw contract_error("word_product_exact: tuple has no exact entries");
  if (w.empty()) throw contract_error("word_product: empty word");
  RatMat p = m.exact->at(w[0]);
  for (size_t i = 1; i < w.size(); ++i) p = p * m.exact->at(w[i]);
  return p;
}

Mat kron(const Mat& x, const Mat& y) {
  const int nx = x.n, ny = y.n;
  Mat r(nx * ny);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < nx; ++j) {
      const double v = x.at(i, j);
      if (v == 0.0) continue;
      for (int p = 0; p < ny; ++p)
        for (int q = 0; q < ny; ++q)
          r.at(i * ny + p, j * ny + q) = v * y.at(p, q);
    }
  return r;
}

Mat kron_power(const Mat& x, int q, long cap) {
  if (q < 1) throw contract_error("kron_power: q must be positive");
  double dim = 1.0;
  for (int i = 0; i < q; ++i) {
    dim *= x.n;
    if (dim > static_cast<double>(cap))
      throw resource_error("kron_power: dimension " + std::to_string(dim) +
                           " exceeds cap " + std::to_string(cap));
  }
  Mat r = x;
  for (int i = 1; i < q; ++i) r = kron(r, x);
  return r;
}

}  // namespace lyap::matcore
