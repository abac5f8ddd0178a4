#include "ipid/density.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "ipid/errors.hpp"

namespace ipid {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // 0.5 * log(2*pi)
constexpr double kProbSumTol = 1e-9;

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw ConfigError(std::string(what) + " must be finite");
}

}  // namespace

std::string support_name(SupportKind k) {
  switch (k) {
    case SupportKind::real: return "real";
    case SupportKind::count: return "count";
    case SupportKind::symbol: return "symbol";
  }
  return "unknown";
}

bool operator==(const GaussianSpec& a, const GaussianSpec& b) {
  return a.mean == b.mean && a.variance == b.variance;
}
bool operator==(const PoissonSpec& a, const PoissonSpec& b) { return a.rate == b.rate; }
bool operator==(const CategoricalSpec& a, const CategoricalSpec& b) { return a.probs == b.probs; }

DensitySpec DensitySpec::gaussian(double mean, double variance) {
  check_finite(mean, "gaussian mean");
  check_finite(variance, "gaussian variance");
  if (variance <= 0.0) throw ConfigError("gaussian variance must be strictly positive");
  return DensitySpec(GaussianSpec{mean, variance});
}

DensitySpec DensitySpec::poisson(double rate) {
  check_finite(rate, "poisson rate");
  if (rate <= 0.0) throw ConfigError("poisson rate must be strictly positive");
  return DensitySpec(PoissonSpec{rate});
}

DensitySpec DensitySpec::categorical(std::vector<double> probs) {
  if (probs.empty()) throw ConfigError("categorical probs must be nonempty");
  double sum = 0.0;
  for (double p : probs) {
    check_finite(p, "categorical probability");
    if (p < 0.0) throw ConfigError("categorical probabilities must be nonnegative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbSumTol) {
    std::ostringstream os;
    os << "categorical probs must sum to 1 (got " << sum << ")";
    throw ConfigError(os.str());
  }
  return DensitySpec(CategoricalSpec{std::move(probs)});
}

SupportKind DensitySpec::support() const {
  if (is_gaussian()) return SupportKind::real;
  if (is_poisson()) return SupportKind::count;
  return SupportKind::symbol;
}

namespace {

double log_pdf_gaussian(const GaussianSpec& g, const Observation& x) {
  const double* v = std::get_if<double>(&x);
  if (v == nullptr) throw InvalidObservation("gaussian density expects a real observation");
  const double d = *v - g.mean;
  return -kHalfLog2Pi - 0.5 * std::log(g.variance) - d * d / (2.0 * g.variance);
}

double log_pmf_poisson(const PoissonSpec& p, const Observation& x) {
  const std::int64_t* k = std::get_if<std::int64_t>(&x);
  if (k == nullptr || *k < 0)
    throw InvalidObservation("poisson mass expects a nonnegative integer count");
  const double kd = static_cast<double>(*k);
  return kd * std::log(p.rate) - p.rate - std::lgamma(kd + 1.0);
}

double log_pmf_categorical(const CategoricalSpec& c, const Observation& x) {
  const std::int64_t* k = std::get_if<std::int64_t>(&x);
  if (k == nullptr || *k < 0)
    throw InvalidObservation("categorical mass expects a nonnegative symbol index");
  // Symbols beyond the listed alphabet carry zero mass, like listed zeros.
  if (*k >= static_cast<std::int64_t>(c.probs.size())) return kLogMassFloor;
  const double p = c.probs[static_cast<std::size_t>(*k)];
  if (p <= 0.0) return kLogMassFloor;
  return std::log(p);
}

}  // namespace

double log_pdf(const DensitySpec& spec, const Observation& x) {
  switch (spec.support()) {
    case SupportKind::real: return log_pdf_gaussian(spec.as_gaussian(), x);
    case SupportKind::count: return log_pmf_poisson(spec.as_poisson(), x);
    case SupportKind::symbol: return log_pmf_categorical(spec.as_categorical(), x);
  }
  throw InvalidObservation("unknown density family");
}

double log_likelihood_ratio(const DensitySpec& g, const DensitySpec& f, const Observation& x,
                            double clamp) {
  if (g.support() != f.support()) {
    throw InvalidPair("log-likelihood ratio needs densities with matching support (" +
                      support_name(g.support()) + " vs " + support_name(f.support()) + ")");
  }
  return clamp_to(log_pdf(g, x) - log_pdf(f, x), clamp);
}

namespace {

double kl_gaussian(const GaussianSpec& g, const GaussianSpec& f) {
  const double dm = g.mean - f.mean;
  const double ratio = g.variance / f.variance;
  return dm * dm / (2.0 * f.variance) + 0.5 * (ratio - 1.0 - std::log(ratio));
}

double kl_poisson(const PoissonSpec& g, const PoissonSpec& f) {
  return g.rate * std::log(g.rate / f.rate) + f.rate - g.rate;
}

double kl_categorical(const CategoricalSpec& g, const CategoricalSpec& f) {
  const std::size_t size = std::max(g.probs.size(), f.probs.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < size; ++k) {
    const double pg = k < g.probs.size() ? g.probs[k] : 0.0;
    if (pg <= 0.0) continue;
    const double pf = k < f.probs.size() ? f.probs[k] : 0.0;
    if (pf <= 0.0) return kInf;
    sum += pg * std::log(pg / pf);
  }
  // Guard against tiny negative rounding residue when g == f.
  return std::max(sum, 0.0);
}

}  // namespace

double kl_divergence(const DensitySpec& g, const DensitySpec& f) {
  if (g.support() != f.support()) {
    throw InvalidPair("KL divergence needs densities with matching support (" +
                      support_name(g.support()) + " vs " + support_name(f.support()) + ")");
  }
  switch (g.support()) {
    case SupportKind::real: return kl_gaussian(g.as_gaussian(), f.as_gaussian());
    case SupportKind::count: return kl_poisson(g.as_poisson(), f.as_poisson());
    case SupportKind::symbol: return kl_categorical(g.as_categorical(), f.as_categorical());
  }
  throw InvalidPair("unknown density family");
}

}  // namespace ipid
