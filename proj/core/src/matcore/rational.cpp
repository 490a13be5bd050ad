#include "lyap/matcore/rational.hpp"

#include <cctype>
#include <cmath>

#include "lyap/errors.hpp"

namespace lyap::matcore {

RatMat RatMat::identity(int dim) {
  RatMat m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

RatMat operator*(const RatMat& x, const RatMat& y) {
  const int n = x.n;
  RatMat r(n);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      const Rat& xv = x.at(i, l);
      if (xv == 0) continue;
      for (int j = 0; j < n; ++j) {
        const Rat& yv = y.at(l, j);
        if (yv != 0) r.at(i, j) += xv * yv;
      }
    }
  return r;
}

RatMat operator+(const RatMat& x, const RatMat& y) {
  RatMat r(x.n);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

RatMat operator*(const Rat& c, const RatMat& x) {
  RatMat r(x.n);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = c * x.a[i];
  return r;
}

bool operator==(const RatMat& x, const RatMat& y) {
  return x.n == y.n && x.a == y.a;
}

bool is_zero(const RatMat& x) {
  for (const Rat& v : x.a)
    if (v != 0) return false;
  return true;
}

std::optional<Rat> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  size_t slash = text.find('/');
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!is_int(text)) return std::nullopt;
    Rat r(text);
    r.canonicalize();
    return r;
  }
  std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  if (mpz_class(den) == 0) return std::nullopt;
  Rat r(text);
  r.canonicalize();
  return r;
}

std::optional<Rat> rationalize(double x, unsigned long max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  const double bound = tol * std::max(1.0, std::abs(x));
  // continued-fraction convergents
  double v = x;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    if (fl > 9e17 || fl < -9e17) return std::nullopt;
    long long ai = static_cast<long long>(fl);
    long long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 < 0 || static_cast<unsigned long long>(q2) > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(approx - x) <= bound) {
      Rat r(static_cast<long>(p1), static_cast<long>(q1));
      r.canonicalize();
      return r;
    }
    double rem = v - fl;
    if (rem < 1e-18) break;
    v = 1.0 / rem;
  }
  return std::nullopt;
}

double to_double(const Rat& r) { return r.get_d(); }

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(std::vector<std::vector<Rat>>& rows, int ncols) {
  std::vector<int> pivots;
  size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Rat inv = 1 / rows[r][c];
    for (int j = c; j < ncols; ++j) rows[r][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (int j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Rat>> nullspace(const RatMat& m) {
  const int n = m.n;
  std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
  std::vector<int> pivots = rref(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank_of_rows(std::vector<std::vector<Rat>> rows) {
  if (rows.empty()) return 0;
  int ncols = static_cast<int>(rows[0].size());
  return static_cast<int>(rref(rows, ncols).size());
}

}  // namespace lyap::matcore
