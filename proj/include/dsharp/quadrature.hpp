#pragma once

#include <functional>
#include <vector>

namespace dsharp::quad {

struct Rule01 {
  std::vector<double> nodes;    // in (0,1)
  std::vector<double> weights;  // sum to 1
};

// Gauss-Legendre rule mapped to [0,1]; rules are computed once and cached.
const Rule01& gauss_legendre(int n);

// integral of f over [0,1] with an n-point Gauss-Legendre rule
double integrate(const std::function<double(double)>& f, int n = 2048);

// adaptive Simpson; used where integrands have kinks or as a test oracle
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol = 1e-10);

}  // namespace dsharp::quad
