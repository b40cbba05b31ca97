#pragma once

#include "survgg/rng.hpp"

namespace survgg {

double sample_uniform(RngStream& rng, double lo, double hi);

double sample_normal(RngStream& rng, double mean, double sd);

// Unit-rate exponential.
double sample_exponential(RngStream& rng);

// Gamma(shape, rate); Marsaglia-Tsang with the U^{1/a} boost for shape < 1.
double sample_gamma(RngStream& rng, double shape, double rate);

double sample_standard_gamma(RngStream& rng, double shape);

// ln of a Gamma(shape, 1) draw, exact for tiny shapes where the draw itself
// would underflow.
double sample_standard_gamma_log(RngStream& rng, double shape);

double sample_beta(RngStream& rng, double a, double b);

// Gamma(shape, rate) conditioned on exceeding `lower`; result strictly >
// lower.  Inverse CDF on the upper tail by default; shifted-exponential
// rejection envelope once the tail mass underflows.
double sample_truncated_gamma_lower(RngStream& rng, double shape, double rate, double lower);

// Same conditional law for a unit-rate gamma, parameterized by log(lower) and
// returning log of the draw, so extreme truncation points stay representable.
double sample_truncated_standard_gamma_lower_log(RngStream& rng, double shape, double log_lower);

// Generalized inverse Gaussian, density proportional to
// x^{c0-1} exp(-a0 x - b0/x).  Rejection from Gamma(c0, a0); exact, intended
// for prior simulation at moderate parameter values.
double sample_gig(RngStream& rng, double a0, double b0, double c0);

}  // namespace survgg
