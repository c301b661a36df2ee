#include "dsharp/divergence.hpp"

#include <cmath>
#include <stdexcept>

#include "dsharp/quadrature.hpp"
#include "dsharp/special.hpp"

namespace dsharp {

std::string psi_name(Psi psi) {
  switch (psi) {
    case Psi::KL: return "kl";
    case Psi::TV: return "tv";
    case Psi::Hellinger: return "hellinger";
    case Psi::ChiSq: return "chisq";
  }
  throw std::logic_error("unknown psi");
}

Psi psi_from_name(std::string_view name) {
  if (name == "kl") return Psi::KL;
  if (name == "tv") return Psi::TV;
  if (name == "hellinger") return Psi::Hellinger;
  if (name == "chisq") return Psi::ChiSq;
  throw std::invalid_argument("unknown divergence: " + std::string(name));
}

double eval_psi(Psi psi, double x) {
  switch (psi) {
    case Psi::KL: return x <= 0.0 ? 0.0 : x * std::log(x);  // 0*log0 = 0
    case Psi::TV: return std::fabs(x - 1.0);
    case Psi::Hellinger: {
      const double r = 1.0 - std::sqrt(std::max(0.0, x));
      return r * r;
    }
    case Psi::ChiSq: return (x - 1.0) * (x - 1.0);
  }
  throw std::logic_error("unknown psi");
}

namespace {

double checked(double v) {
  if (std::isnan(v)) {
    throw std::runtime_error("csiszar: ratio evaluated to NaN");
  }
  return v;
}

}  // namespace

double csiszar(const std::function<double(double)>& d, Psi psi, int nodes) {
  return quad::integrate(
      [&](double u) { return eval_psi(psi, checked(d(u))); }, nodes);
}

double csiszar_adaptive(const std::function<double(double)>& d, Psi psi,
                        double tol) {
  return quad::integrate_adaptive(
      [&](double u) { return eval_psi(psi, checked(d(u))); }, 0.0, 1.0, tol);
}

DivergenceReport chisq_index(std::span<const double> coeffs, std::size_t n) {
  if (coeffs.empty()) throw std::invalid_argument("chisq_index: empty input");
  if (n < 2) throw std::invalid_argument("chisq_index: n must be >= 2");
  DivergenceReport rep;
  rep.kind = Psi::ChiSq;
  rep.dof = static_cast<int>(coeffs.size());
  for (double c : coeffs) rep.value += c * c;
  const double stat = static_cast<double>(n) * rep.value;
  rep.p_value = special::chisq_upper_tail(rep.dof, stat);
  return rep;
}

double renyi(const std::function<double(double)>& d, double alpha, int nodes) {
  if (alpha == 0.0 || alpha == 1.0 || !std::isfinite(alpha)) {
    throw std::invalid_argument("renyi: alpha must be finite and not 0 or 1");
  }
  const double moment = quad::integrate(
      [&](double u) { return std::pow(std::max(0.0, checked(d(u))), alpha); },
      nodes);
  const double value = (1.0 - moment) / (alpha * (1.0 - alpha));
  if (value < -1e-9) {
    throw std::runtime_error("renyi: negative divergence beyond tolerance");
  }
  return std::max(0.0, value);
}

}  // namespace dsharp
