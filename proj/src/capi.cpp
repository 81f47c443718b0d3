// SPDX-License-Identifier: Apache-2.0

#include "kbnorm.h"

#include <algorithm>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "kbnorm/bounds.hpp"
#include "kbnorm/errors.hpp"
#include "kbnorm/verify.hpp"

struct kbn_config {
  kbnorm::PoleConfiguration value;
};

namespace {

thread_local std::string g_last_error;

void record_error(const std::string& message) { g_last_error = message; }

// Runs the body and maps C++ failures onto status codes; the message is kept
// thread locally for kbn_last_error.
template <class Body>
kbn_status guarded(const Body& body) {
  try {
    body();
    return KBN_OK;
  } catch (const kbnorm::EvaluationError& error) {
    record_error(error.what());
    return KBN_ERR_EVALUATION;
  } catch (const kbnorm::AnalyticityError& error) {
    record_error(error.what());
    return KBN_ERR_ANALYTICITY;
  } catch (const kbnorm::ConvergenceError& error) {
    record_error(error.what());
    return KBN_ERR_NO_CONVERGENCE;
  } catch (const kbnorm::InvariantViolation& error) {
    record_error(error.what());
    return KBN_ERR_INVARIANT;
  } catch (const std::invalid_argument& error) {
    record_error(error.what());
    return KBN_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& error) {
    record_error(error.what());
    return KBN_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    record_error("out of memory");
    return KBN_ERR_INTERNAL;
  } catch (const std::exception& error) {
    record_error(error.what());
    return KBN_ERR_INTERNAL;
  } catch (...) {
    record_error("unknown failure");
    return KBN_ERR_INTERNAL;
  }
}

kbn_status require(bool condition, const char* message) {
  if (condition) return KBN_OK;
  record_error(message);
  return KBN_ERR_INVALID_ARGUMENT;
}

kbnorm::QuadratureSpec spec_for(const kbnorm::PoleConfiguration& config,
                                int32_t grid_override) {
  if (grid_override <= 0) return kbnorm::QuadratureSpec::for_config(config);
  kbnorm::QuadratureSpec spec;
  spec.sample_count = kbnorm::QuadratureSpec::round_up_to_grid(grid_override);
  return spec;
}

}  // namespace

extern "C" {

const char* kbn_version(void) { return "0.1.0"; }

const char* kbn_status_name(kbn_status status) {
  switch (status) {
    case KBN_OK:
      return "ok";
    case KBN_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case KBN_ERR_POLE_OUTSIDE_DISC:
      return "pole outside the open unit disc";
    case KBN_ERR_EVALUATION:
      return "evaluation error";
    case KBN_ERR_ANALYTICITY:
      return "analyticity violation";
    case KBN_ERR_NO_CONVERGENCE:
      return "solver did not converge";
    case KBN_ERR_INVARIANT:
      return "internal invariant violated";
    case KBN_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* kbn_last_error(void) { return g_last_error.c_str(); }

kbn_status kbn_config_create(const double* re, const double* im, int32_t count,
                             kbn_config** out) {
  if (kbn_status bad = require(out != nullptr && re != nullptr && count >= 1,
                               "need poles and an output pointer"))
    return bad;
  *out = nullptr;
  for (int32_t k = 0; k < count; ++k) {
    const double imag = im != nullptr ? im[k] : 0.0;
    if (!(re[k] * re[k] + imag * imag < 1.0)) {
      record_error("pole modulus must be strictly less than 1");
      return KBN_ERR_POLE_OUTSIDE_DISC;
    }
  }
  return guarded([&] {
    std::vector<kbnorm::DiscPoint> poles;
    poles.reserve(static_cast<std::size_t>(count));
    for (int32_t k = 0; k < count; ++k)
      poles.emplace_back(kbnorm::Complex(re[k], im != nullptr ? im[k] : 0.0));
    *out = new kbn_config{kbnorm::PoleConfiguration(std::move(poles))};
  });
}

kbn_status kbn_config_confluent(double re, double im, int32_t count,
                                kbn_config** out) {
  if (kbn_status bad =
          require(out != nullptr && count >= 1, "need an output pointer"))
    return bad;
  *out = nullptr;
  if (!(re * re + im * im < 1.0)) {
    record_error("pole modulus must be strictly less than 1");
    return KBN_ERR_POLE_OUTSIDE_DISC;
  }
  return guarded([&] {
    *out = new kbn_config{kbnorm::PoleConfiguration::confluent(
        kbnorm::DiscPoint(kbnorm::Complex(re, im)), count)};
  });
}

void kbn_config_destroy(kbn_config* config) { delete config; }

int32_t kbn_config_degree(const kbn_config* config) {
  return config == nullptr ? 0 : config->value.degree();
}

double kbn_config_max_modulus(const kbn_config* config) {
  return config == nullptr ? 0.0 : config->value.max_modulus();
}

kbn_status kbn_blaschke_eval(const kbn_config* config, double z_re,
                             double z_im, double* out_re, double* out_im) {
  if (kbn_status bad = require(config && out_re && out_im, "null argument"))
    return bad;
  return guarded([&] {
    const kbnorm::Complex value =
        kbnorm::BlaschkeProduct(config->value).eval({z_re, z_im});
    *out_re = value.real();
    *out_im = value.imag();
  });
}

kbn_status kbn_blaschke_derivative(const kbn_config* config, double z_re,
                                   double z_im, double* out_re,
                                   double* out_im) {
  if (kbn_status bad = require(config && out_re && out_im, "null argument"))
    return bad;
  return guarded([&] {
    const kbnorm::Complex value =
        kbnorm::BlaschkeProduct(config->value).derivative({z_re, z_im});
    *out_re = value.real();
    *out_im = value.imag();
  });
}

kbn_status kbn_blaschke_derivative_sup(const kbn_config* config,
                                       int32_t grid_size, double* out) {
  if (kbn_status bad = require(config && out, "null argument")) return bad;
  return guarded([&] {
    int grid = grid_size;
    if (grid <= 0)
      grid = std::max(8192,
                      kbnorm::QuadratureSpec::for_config(config->value)
                          .sample_count);
    *out = kbnorm::sup_norm_derivative_on_circle(
        config->value, kbnorm::QuadratureSpec::round_up_to_grid(grid));
  });
}

kbn_status kbn_operator_norm(const kbn_config* config, int32_t grid_override,
                             kbn_norm_result* out) {
  if (kbn_status bad = require(config && out, "null argument")) return bad;
  return guarded([&] {
    const kbnorm::OperatorNormResult result = kbnorm::operator_norm(
        config->value, spec_for(config->value, grid_override));
    out->norm = result.norm;
    out->lambda_max = result.lambda_max;
    out->residual = result.residual;
    out->iterations = result.iterations;
    out->dimension = result.dimension;
  });
}

kbn_status kbn_bound_coefficients(int32_t n, double r, double* a_lower,
                                  double* A_upper, double* legacy_52) {
  if (kbn_status bad =
          require(a_lower && A_upper && legacy_52, "null argument"))
    return bad;
  return guarded([&] {
    const kbnorm::BoundCoefficients coefficients =
        kbnorm::bound_coefficients(n, r);
    *a_lower = coefficients.a_lower;
    *A_upper = coefficients.A_upper;
    *legacy_52 = coefficients.legacy_52;
  });
}

kbn_status kbn_n1_exact_norm(double re, double im, double* out) {
  if (kbn_status bad = require(out != nullptr, "null argument")) return bad;
  return guarded([&] {
    *out = kbnorm::n1_exact_norm(kbnorm::DiscPoint({re, im}));
  });
}

kbn_status kbn_confluent_derivative_norm_squared(int32_t n, double r,
                                                 double* out) {
  if (kbn_status bad = require(out != nullptr, "null argument")) return bad;
  return guarded(
      [&] { *out = kbnorm::confluent_derivative_norm_squared(n, r); });
}

kbn_status kbn_phi_coefficients(int32_t n, double r, double* c0, double* c1,
                                double* c2) {
  if (kbn_status bad = require(c0 && c1 && c2, "null argument")) return bad;
  return guarded([&] {
    const auto coefficients = kbnorm::phi_coefficients(n, r);
    *c0 = coefficients[0];
    *c1 = coefficients[1];
    *c2 = coefficients[2];
  });
}

kbn_status kbn_extremal_certificate(int32_t n, double r, int32_t s,
                                    kbn_certificate* out) {
  if (kbn_status bad = require(out != nullptr, "null argument")) return bad;
  return guarded([&] {
    const kbnorm::ExtremalCertificate certificate =
        kbnorm::extremal_certificate(n, r, s);
    out->n = certificate.n;
    out->s = certificate.s;
    out->r = certificate.r;
    out->q = certificate.q;
    out->certified_lower = certificate.certified_lower;
    out->measured = certificate.measured;
    out->f_norm_squared = certificate.f_norm_squared;
  });
}

kbn_status kbn_dyakonov_bracket(const kbn_config* config, int32_t grid_size,
                                kbn_bracket* out) {
  if (kbn_status bad = require(config && out, "null argument")) return bad;
  return guarded([&] {
    const kbnorm::DyakonovBracket bracket =
        kbnorm::dyakonov_bracket(config->value, grid_size);
    out->lower = bracket.lower;
    out->upper = bracket.upper;
    out->sup_derivative = bracket.sup_derivative;
    out->norm = bracket.norm;
    out->holds = bracket.holds ? 1 : 0;
  });
}

kbn_status kbn_confluent_report(int32_t n, double r, kbn_bound_report* out) {
  if (kbn_status bad = require(out != nullptr, "null argument")) return bad;
  return guarded([&] {
    const kbnorm::BoundReport report = kbnorm::confluent_report(n, r);
    out->n = report.n;
    out->r = report.r;
    out->norm = report.norm_confluent;
    out->ratio = report.ratio;
    out->a_lower = report.a_lower;
    out->A_upper = report.A_upper;
    out->legacy_52 = report.legacy_52;
  });
}

kbn_status kbn_randomized_configuration_max(int32_t n, double r,
                                            int32_t trials, uint64_t seed,
                                            double* out) {
  if (kbn_status bad = require(out != nullptr, "null argument")) return bad;
  return guarded([&] {
    *out = kbnorm::randomized_configuration_max(n, r, trials, seed);
  });
}

kbn_status kbn_embedding_ratio(int32_t space, double s, int32_t n, double r,
                               int32_t trials, uint64_t seed,
                               kbn_embedding_record* out) {
  if (kbn_status bad = require(out != nullptr, "null argument")) return bad;
  if (kbn_status bad = require(
          space == KBN_SPACE_BESOV || space == KBN_SPACE_WIENER,
          "space must be besov or wiener"))
    return bad;
  return guarded([&] {
    const kbnorm::FunctionSpace which = space == KBN_SPACE_BESOV
                                            ? kbnorm::FunctionSpace::besov
                                            : kbnorm::FunctionSpace::wiener;
    const int ns[] = {n};
    const double rs[] = {r};
    const auto records =
        kbnorm::embedding_ratio_sweep(which, s, ns, rs, trials, seed);
    const kbnorm::EmbeddingRecord& record = records.front();
    out->space = space;
    out->s = record.s;
    out->n = record.n;
    out->r = record.r;
    out->trials = record.trials;
    out->max_ratio = record.max_ratio;
    out->normalized = record.normalized;
  });
}

kbn_status kbn_verify(kbn_verify_callback callback, void* user,
                      int32_t* failures) {
  if (kbn_status bad = require(failures != nullptr, "null argument"))
    return bad;
  return guarded([&] {
    *failures = kbnorm::run_verification(
        [&](const kbnorm::CheckResult& result) {
          if (callback)
            callback(result.name.c_str(), result.passed ? 1 : 0,
                     result.detail.c_str(), user);
        });
  });
}

}  // extern "C"
