#ifndef LYAP_MATCORE_SPECTRAL_HPP
#define LYAP_MATCORE_SPECTRAL_HPP

#include <vector>

#include "lyap/matcore/mat.hpp"

namespace lyap::matcore {

// spectral radius by scaled repeated squaring (Gelfand): track
// (1/2^m) log ||A^(2^m)|| in log space, stop when successive estimates differ
// by less than tol or after 60 squarings; returns 0 for nilpotent input
double spectral_radius(const Mat& a, double tol);

// Perron eigendata of a positively irreducible nonnegative matrix:
// rho with right/left positive eigenvectors, v normalized so v.u = 1
struct PerronData {
  double rho = 0.0;
  std::vector<double> u;
  std::vector<double> v;
};

PerronData perron_pair(const Mat& b, double tol);

}  // namespace lyap::matcore

#endif
