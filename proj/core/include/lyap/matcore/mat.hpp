#ifndef LYAP_MATCORE_MAT_HPP
#define LYAP_MATCORE_MAT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lyap/matcore/rational.hpp"

namespace lyap::matcore {

// dense square matrix, row-major
struct Mat {
  int n = 0;
  std::vector<double> a;

  Mat() = default;
  explicit Mat(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0.0) {}
  Mat(int dim, std::vector<double> entries);

  double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const double& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static Mat identity(int dim);
  bool is_nonnegative() const;
  bool is_zero() const;
};

Mat operator*(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat operator*(double c, const Mat& x);
Mat transpose(const Mat& x);

// boolean support pattern of a square matrix
struct BoolMat {
  int n = 0;
  std::vector<uint8_t> a;

  BoolMat() = default;
  explicit BoolMat(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0) {}

  uint8_t& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const uint8_t& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  bool any() const;
  bool operator==(const BoolMat& o) const { return n == o.n && a == o.a; }
};

BoolMat support(const Mat& x);
BoolMat support(const RatMat& x);
BoolMat bool_product(const BoolMat& x, const BoolMat& y);
BoolMat bool_or(const BoolMat& x, const BoolMat& y);

// word over the implied alphabet {0..k-1}; reports print symbols 1-based
using Word = std::vector<int>;

// tuple of k real d x d matrices; `exact` carries the same entries as
// rationals when the input was given exactly
struct MatTuple {
  int d = 0;
  int k = 0;
  std::vector<Mat> mats;
  std::optional<std::vector<RatMat>> exact;

  MatTuple() = default;
  MatTuple(std::vector<Mat> ms);              // validates shapes, not-all-zero
  MatTuple(std::vector<RatMat> ms);           // exact entries, floats derived

  bool is_nonnegative() const;
  bool has_exact() const { return exact.has_value(); }
};

MatTuple scale(const MatTuple& m, double c);
MatTuple scale_exact(const MatTuple& m, const Rat& c);

// entrywise absolute sum
double norm(const Mat& x);
Rat norm(const RatMat& x);

// left-to-right product over a nonempty word
Mat word_product(const MatTuple& m, const Word& w);
RatMat word_product_exact(const MatTuple& m, const Word& w);

// q-fold Kronecker power; dims above `cap` raise resource_error
Mat kron(const Mat& x, const Mat& y);
Mat kron_power(const Mat& x, int q, long cap = 20000);

}  // namespace lyap::matcore

#endif
