#include "dsharp/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "dsharp/rng.hpp"
#include "dsharp/special.hpp"

namespace dsharp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
  return v;
}

double require_positive(double v, const char* what) {
  require_finite(v, what);
  if (v <= 0.0) {
    throw std::invalid_argument(std::string(what) + " must be positive");
  }
  return v;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Normal: return "normal";
    case Family::LogNormal: return "lognormal";
    case Family::Exponential: return "exp";
    case Family::Uniform: return "uniform";
    case Family::Laplace: return "laplace";
    case Family::Logistic: return "logistic";
    case Family::Mixture: return "mix";
  }
  throw std::logic_error("unknown family");
}

Family family_from_name(std::string_view name) {
  if (name == "normal") return Family::Normal;
  if (name == "lognormal") return Family::LogNormal;
  if (name == "exp" || name == "exponential") return Family::Exponential;
  if (name == "uniform") return Family::Uniform;
  if (name == "laplace") return Family::Laplace;
  if (name == "logistic") return Family::Logistic;
  if (name == "mix" || name == "mixture") return Family::Mixture;
  throw std::invalid_argument("unknown family name: " + std::string(name));
}

Sample::Sample(std::vector<double> v) : values(std::move(v)) {
  if (values.empty()) throw std::invalid_argument("Sample: n must be >= 1");
  for (double x : values) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("Sample: values must be finite");
    }
  }
}

double Sample::mean() const {
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double Sample::min() const {
  return *std::min_element(values.begin(), values.end());
}

double Sample::max() const {
  return *std::max_element(values.begin(), values.end());
}

BaseModel::BaseModel(Family f, std::vector<double> params)
    : family_(f), params_(std::move(params)) {}

BaseModel::BaseModel(std::vector<BaseModel> components,
                     std::vector<double> weights)
    : family_(Family::Mixture),
      components_(std::move(components)),
      weights_(std::move(weights)) {}

BaseModel BaseModel::normal(double mean, double sd) {
  require_finite(mean, "normal mean");
  require_positive(sd, "normal sd");
  return BaseModel(Family::Normal, {mean, sd});
}

BaseModel BaseModel::lognormal(double mu, double sigma) {
  require_finite(mu, "lognormal mu");
  require_positive(sigma, "lognormal sigma");
  return BaseModel(Family::LogNormal, {mu, sigma});
}

BaseModel BaseModel::exponential(double mean) {
  require_positive(mean, "exponential mean");
  return BaseModel(Family::Exponential, {mean});
}

BaseModel BaseModel::uniform(double a, double b) {
  require_finite(a, "uniform a");
  require_finite(b, "uniform b");
  if (!(a < b)) throw std::invalid_argument("uniform: requires a < b");
  return BaseModel(Family::Uniform, {a, b});
}

BaseModel BaseModel::laplace(double loc, double scale) {
  require_finite(loc, "laplace loc");
  require_positive(scale, "laplace scale");
  return BaseModel(Family::Laplace, {loc, scale});
}

BaseModel BaseModel::logistic(double loc, double scale) {
  require_finite(loc, "logistic loc");
  require_positive(scale, "logistic scale");
  return BaseModel(Family::Logistic, {loc, scale});
}

BaseModel BaseModel::mixture(std::vector<BaseModel> components,
                             std::vector<double> weights) {
  if (components.empty() || components.size() != weights.size()) {
    throw std::invalid_argument(
        "mixture: components and weights must match and be nonempty");
  }
  double total = 0.0;
  for (double w : weights) {
    require_finite(w, "mixture weight");
    if (w < 0.0) throw std::invalid_argument("mixture weights must be >= 0");
    total += w;
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("mixture weights must sum to 1 (within 1e-12)");
  }
  return BaseModel(std::move(components), std::move(weights));
}

double BaseModel::pdf(double x) const {
  switch (family_) {
    case Family::Normal: {
      const double z = (x - params_[0]) / params_[1];
      return special::normal_pdf(z) / params_[1];
    }
    case Family::LogNormal: {
      if (x <= 0.0) return 0.0;
      const double z = (std::log(x) - params_[0]) / params_[1];
      return special::normal_pdf(z) / (x * params_[1]);
    }
    case Family::Exponential: {
      if (x < 0.0) return 0.0;
      return std::exp(-x / params_[0]) / params_[0];
    }
    case Family::Uniform: {
      if (x < params_[0] || x > params_[1]) return 0.0;
      return 1.0 / (params_[1] - params_[0]);
    }
    case Family::Laplace: {
      const double s = params_[1];
      return 0.5 / s * std::exp(-std::fabs(x - params_[0]) / s);
    }
    case Family::Logistic: {
      const double s = params_[1];
      const double t = std::exp(-std::fabs(x - params_[0]) / s);
      const double den = 1.0 + t;
      return t / (s * den * den);
    }
    case Family::Mixture: {
      double v = 0.0;
      for (std::size_t i = 0; i < components_.size(); ++i) {
        v += weights_[i] * components_[i].pdf(x);
      }
      return v;
    }
  }
  throw std::logic_error("unknown family");
}

double BaseModel::cdf(double x) const {
  switch (family_) {
    case Family::Normal:
      return special::normal_cdf((x - params_[0]) / params_[1]);
    case Family::LogNormal:
      if (x <= 0.0) return 0.0;
      return special::normal_cdf((std::log(x) - params_[0]) / params_[1]);
    case Family::Exponential:
      if (x < 0.0) return 0.0;
      return -std::expm1(-x / params_[0]);
    case Family::Uniform: {
      if (x <= params_[0]) return 0.0;
      if (x >= params_[1]) return 1.0;
      return (x - params_[0]) / (params_[1] - params_[0]);
    }
    case Family::Laplace: {
      const double z = (x - params_[0]) / params_[1];
      return z < 0.0 ? 0.5 * std::exp(z) : 1.0 - 0.5 * std::exp(-z);
    }
    case Family::Logistic: {
      const double z = (x - params_[0]) / params_[1];
      return 1.0 / (1.0 + std::exp(-z));
    }
    case Family::Mixture: {
      double v = 0.0;
      for (std::size_t i = 0; i < components_.size(); ++i) {
        v += weights_[i] * components_[i].cdf(x);
      }
      return v;
    }
  }
  throw std::logic_error("unknown family");
}

double BaseModel::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("quantile: u must be in (0,1)");
  }
  switch (family_) {
    case Family::Normal:
      return params_[0] + params_[1] * special::normal_quantile(u);
    case Family::LogNormal:
      return std::exp(params_[0] + params_[1] * special::normal_quantile(u));
    case Family::Exponential:
      return -params_[0] * std::log1p(-u);
    case Family::Uniform:
      return params_[0] + u * (params_[1] - params_[0]);
    case Family::Laplace:
      return u < 0.5 ? params_[0] + params_[1] * std::log(2.0 * u)
                     : params_[0] - params_[1] * std::log(2.0 * (1.0 - u));
    case Family::Logistic:
      return params_[0] + params_[1] * std::log(u / (1.0 - u));
    case Family::Mixture: {
      // bracket by the component-quantile extremes, then bisect the cdf
      double lo = kInf, hi = -kInf;
      for (const BaseModel& c : components_) {
        const double q = c.quantile(u);
        lo = std::min(lo, q);
        hi = std::max(hi, q);
      }
      if (lo >= hi) return lo;
      const double tol = 1e-10 * std::max(1.0, hi - lo);
      for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        (cdf(mid) < u ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    }
  }
  throw std::logic_error("unknown family");
}

double BaseModel::support_lo() const {
  switch (family_) {
    case Family::Normal:
    case Family::Laplace:
    case Family::Logistic: return -kInf;
    case Family::LogNormal:
    case Family::Exponential: return 0.0;
    case Family::Uniform: return params_[0];
    case Family::Mixture: {
      double lo = kInf;
      for (const BaseModel& c : components_) lo = std::min(lo, c.support_lo());
      return lo;
    }
  }
  throw std::logic_error("unknown family");
}

double BaseModel::support_hi() const {
  switch (family_) {
    case Family::Uniform: return params_[1];
    case Family::Mixture: {
      double hi = -kInf;
      for (const BaseModel& c : components_) hi = std::max(hi, c.support_hi());
      return hi;
    }
    default: return kInf;
  }
}

double BaseModel::draw(Rng& rng) const {
  if (family_ == Family::Mixture) {
    const double u = rng.uniform();
    double acc = 0.0;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      acc += weights_[i];
      if (u <= acc || i + 1 == components_.size()) {
        return components_[i].draw(rng);
      }
    }
  }
  return quantile(rng.uniform());
}

Sample BaseModel::sample(std::size_t n, std::uint64_t seed) const {
  if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
  Rng rng(seed);
  std::vector<double> out(n);
  for (double& x : out) x = draw(rng);
  return Sample(std::move(out));
}

namespace {

double parse_number(std::string_view s, const char* what) {
  char* end = nullptr;
  const std::string tmp(s);
  const double v = std::strtod(tmp.c_str(), &end);
  if (end != tmp.c_str() + tmp.size() || tmp.empty()) {
    throw std::invalid_argument(std::string("spec: bad number for ") + what +
                                ": '" + tmp + "'");
  }
  return v;
}

// key=value pairs, comma separated, exactly the expected keys in any order
std::vector<double> parse_kv(std::string_view body,
                             std::initializer_list<const char*> keys) {
  std::vector<double> out(keys.size(),
                          std::numeric_limits<double>::quiet_NaN());
  std::vector<bool> seen(keys.size(), false);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = std::min(body.find(',', pos), body.size());
    std::string_view item = body.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("spec: expected key=value, got '" +
                                  std::string(item) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    bool matched = false;
    std::size_t k = 0;
    for (const char* expect : keys) {
      if (key == expect) {
        if (seen[k]) {
          throw std::invalid_argument("spec: duplicate key '" +
                                      std::string(key) + "'");
        }
        out[k] = parse_number(item.substr(eq + 1), expect);
        seen[k] = true;
        matched = true;
        break;
      }
      ++k;
    }
    if (!matched) {
      throw std::invalid_argument("spec: unexpected key '" + std::string(key) +
                                  "'");
    }
    if (comma == body.size()) break;
    pos = comma + 1;
  }
  std::size_t k = 0;
  for (const char* expect : keys) {
    if (!seen[k]) {
      throw std::invalid_argument(std::string("spec: missing key '") + expect +
                                  "'");
    }
    ++k;
  }
  return out;
}

std::string_view strip_parens(std::string_view s) {
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    // only strip if the parens actually match each other
    int depth = 0;
    bool wraps = true;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0) {
        wraps = false;
        break;
      }
    }
    if (!wraps) break;
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

}  // namespace

BaseModel BaseModel::parse(std::string_view spec) {
  spec = strip_parens(spec);
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("spec: expected 'family:params', got '" +
                                std::string(spec) + "'");
  }
  const std::string_view head = spec.substr(0, colon);
  const std::string_view body = spec.substr(colon + 1);
  if (head == "normal") {
    auto p = parse_kv(body, {"mean", "sd"});
    return normal(p[0], p[1]);
  }
  if (head == "lognormal") {
    auto p = parse_kv(body, {"mu", "sigma"});
    return lognormal(p[0], p[1]);
  }
  if (head == "exp") {
    auto p = parse_kv(body, {"mean"});
    return exponential(p[0]);
  }
  if (head == "uniform") {
    auto p = parse_kv(body, {"a", "b"});
    return uniform(p[0], p[1]);
  }
  if (head == "laplace") {
    auto p = parse_kv(body, {"loc", "scale"});
    return laplace(p[0], p[1]);
  }
  if (head == "logistic") {
    auto p = parse_kv(body, {"loc", "scale"});
    return logistic(p[0], p[1]);
  }
  if (head == "mix") {
    std::vector<BaseModel> comps;
    std::vector<double> wts;
    std::size_t pos = 0;
    int depth = 0;
    std::size_t start = 0;
    auto flush = [&](std::string_view term) {
      term = strip_parens(term);
      const std::size_t star = term.find('*');
      if (star == std::string_view::npos) {
        throw std::invalid_argument("spec: mixture terms are w*SPEC, got '" +
                                    std::string(term) + "'");
      }
      wts.push_back(parse_number(term.substr(0, star), "mixture weight"));
      comps.push_back(parse(term.substr(star + 1)));
    };
    for (pos = 0; pos < body.size(); ++pos) {
      if (body[pos] == '(') ++depth;
      if (body[pos] == ')') --depth;
      if (body[pos] == '|' && depth == 0) {
        flush(body.substr(start, pos - start));
        start = pos + 1;
      }
    }
    flush(body.substr(start));
    return mixture(std::move(comps), std::move(wts));
  }
  throw std::invalid_argument("spec: unknown family '" + std::string(head) +
                              "'");
}

std::string BaseModel::to_spec() const {
  switch (family_) {
    case Family::Normal:
      return "normal:mean=" + fmt(params_[0]) + ",sd=" + fmt(params_[1]);
    case Family::LogNormal:
      return "lognormal:mu=" + fmt(params_[0]) + ",sigma=" + fmt(params_[1]);
    case Family::Exponential: return "exp:mean=" + fmt(params_[0]);
    case Family::Uniform:
      return "uniform:a=" + fmt(params_[0]) + ",b=" + fmt(params_[1]);
    case Family::Laplace:
      return "laplace:loc=" + fmt(params_[0]) + ",scale=" + fmt(params_[1]);
    case Family::Logistic:
      return "logistic:loc=" + fmt(params_[0]) + ",scale=" + fmt(params_[1]);
    case Family::Mixture: {
      std::string out = "mix:";
      for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) out += '|';
        out += fmt(weights_[i]);
        out += '*';
        const bool nested = components_[i].family() == Family::Mixture;
        if (nested) out += '(';
        out += components_[i].to_spec();
        if (nested) out += ')';
      }
      return out;
    }
  }
  throw std::logic_error("unknown family");
}

BaseModel moment_match(Family family, const Sample& data) {
  const double n = static_cast<double>(data.n());
  if (data.n() < 2) {
    throw std::invalid_argument("moment_match: requires n >= 2");
  }
  const double mean = data.mean();
  double ss = 0.0;
  for (double x : data.values) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / (n - 1.0));
  switch (family) {
    case Family::Normal: return BaseModel::normal(mean, sd);
    case Family::LogNormal: {
      double lm = 0.0;
      for (double x : data.values) {
        if (x <= 0.0) {
          throw std::invalid_argument(
              "moment_match: lognormal requires positive data");
        }
        lm += std::log(x);
      }
      lm /= n;
      double lss = 0.0;
      for (double x : data.values) {
        const double d = std::log(x) - lm;
        lss += d * d;
      }
      return BaseModel::lognormal(lm, std::sqrt(lss / (n - 1.0)));
    }
    case Family::Exponential: return BaseModel::exponential(mean);
    case Family::Uniform: return BaseModel::uniform(data.min(), data.max());
    case Family::Laplace: return BaseModel::laplace(mean, sd / M_SQRT2);
    case Family::Logistic:
      return BaseModel::logistic(mean, sd * std::sqrt(3.0) / M_PI);
    case Family::Mixture:
      throw std::invalid_argument("moment_match: mixtures are not supported");
  }
  throw std::logic_error("unknown family");
}

}  // namespace dsharp
