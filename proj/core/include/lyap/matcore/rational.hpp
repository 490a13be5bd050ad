#ifndef LYAP_MATCORE_RATIONAL_HPP
#define LYAP_MATCORE_RATIONAL_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lyap::matcore {

using Rat = mpq_class;

// square matrix with exact rational entries, row-major
struct RatMat {
  int n = 0;
  std::vector<Rat> a;

  RatMat() = default;
  explicit RatMat(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, Rat(0)) {}

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static RatMat identity(int dim);
};

RatMat operator*(const RatMat& x, const RatMat& y);
RatMat operator+(const RatMat& x, const RatMat& y);
RatMat operator*(const Rat& c, const RatMat& x);
bool operator==(const RatMat& x, const RatMat& y);

bool is_zero(const RatMat& x);

// parses "p/q", "p", or "-p/q"; rejects anything else (decimal points included)
std::optional<Rat> parse_rational(const std::string& text);

// nearest rational with denominator <= max_den within tol of x, by continued
// fractions; nullopt when no candidate fits
std::optional<Rat> rationalize(double x, unsigned long max_den, double tol);

double to_double(const Rat& r);

// basis of the right nullspace of m, via exact Gaussian elimination
std::vector<std::vector<Rat>> nullspace(const RatMat& m);

// rank of the given row vectors (they are consumed)
int rank_of_rows(std::vector<std::vector<Rat>> rows);

}  // namespace lyap::matcore

#endif
