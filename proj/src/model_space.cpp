// SPDX-License-Identifier: Apache-2.0

#include "kbnorm/model_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "detail/summation.hpp"
#include "kbnorm/errors.hpp"

namespace kbnorm {

namespace {

Complex kernel_denominator(Complex pole, Complex z) {
  const Complex denom = 1.0 - std::conj(pole) * z;
  if (std::abs(denom) < tol::pole_denominator)
    throw EvaluationError("evaluation point coincides with a reflected pole");
  return denom;
}

Complex int_pow(Complex base, int exponent) {
  Complex result = 1.0;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

struct BasisCore {
  PoleConfiguration config;
  std::vector<double> prefactors;  // sqrt(1 - |l_k|^2)

  explicit BasisCore(PoleConfiguration cfg) : config(std::move(cfg)) {
    prefactors.reserve(static_cast<std::size_t>(config.degree()));
    for (Complex pole : config.poles())
      prefactors.push_back(std::sqrt(1.0 - std::norm(pole)));
  }

  Complex value(int index, Complex z) const {
    const auto& poles = config.poles();
    Complex product = 1.0;
    for (int j = 0; j < index; ++j) product *= blaschke_factor(poles[j], z);
    return prefactors[static_cast<std::size_t>(index)] /
           kernel_denominator(poles[index], z) * product;
  }

  Complex derivative(int index, Complex z) const {
    const auto& poles = config.poles();
    const Complex d = kernel_denominator(poles[index], z);
    const double c = prefactors[static_cast<std::size_t>(index)];
    // e_k = g P with g the kernel prefactor and P the partial product;
    // P' keeps the product rule (no division), exact at zeros of P.
    std::vector<Complex> prefix(static_cast<std::size_t>(index) + 1);
    std::vector<Complex> suffix(static_cast<std::size_t>(index) + 1);
    prefix[0] = 1.0;
    for (int j = 0; j < index; ++j)
      prefix[static_cast<std::size_t>(j) + 1] =
          prefix[static_cast<std::size_t>(j)] * blaschke_factor(poles[j], z);
    suffix[static_cast<std::size_t>(index)] = 1.0;
    for (int j = index; j-- > 0;)
      suffix[static_cast<std::size_t>(j)] =
          blaschke_factor(poles[j], z) * suffix[static_cast<std::size_t>(j) + 1];
    Complex product_derivative = 0.0;
    for (int j = 0; j < index; ++j)
      product_derivative += blaschke_factor_derivative(poles[j], z) *
                            prefix[static_cast<std::size_t>(j)] *
                            suffix[static_cast<std::size_t>(j) + 1];
    const Complex g = c / d;
    const Complex g_derivative = c * std::conj(poles[index]) / (d * d);
    return g_derivative * prefix[static_cast<std::size_t>(index)] +
           g * product_derivative;
  }
};

}  // namespace

MalmquistWalshBasis::MalmquistWalshBasis(PoleConfiguration config,
                                         QuadratureSpec spec)
    : config_(std::move(config)), spec_(spec) {
  spec_.validate();
  const int n = config_.degree();
  const int m = spec_.sample_count;
  const auto core = std::make_shared<const BasisCore>(config_);
  const double rho =
      config_.max_modulus() > 0.0 ? 1.0 / config_.max_modulus() : 0.0;

  // One pass over the grid evaluates every element in O(n) per point.
  Eigen::MatrixXcd values(m, n);
  const double step = 2.0 * std::numbers::pi / m;
  const auto& poles = config_.poles();
  for (int i = 0; i < m; ++i) {
    const Complex z = std::polar(1.0, step * i);
    Complex running = 1.0;
    for (int k = 0; k < n; ++k) {
      const Complex d = kernel_denominator(poles[k], z);
      values(i, k) = core->prefactors[static_cast<std::size_t>(k)] / d * running;
      running *= (poles[k] - z) / d;
    }
  }

  elements_.reserve(static_cast<std::size_t>(n));
  coefficients_.resize(m, n);
  for (int k = 0; k < n; ++k) {
    std::vector<Complex> samples(static_cast<std::size_t>(m));
    Eigen::VectorXcd::Map(samples.data(), m) = values.col(k);
    AnalyticFunction element = AnalyticFunction::from_samples(
        std::move(samples),
        [core, k](Complex z) { return core->value(k, z); }, spec_.tolerance,
        rho);
    coefficients_.col(k) =
        Eigen::VectorXcd::Map(element.taylor().data(), m);
    elements_.push_back(std::move(element));
  }
}

Complex MalmquistWalshBasis::element_value(int index, Complex z) const {
  const BasisCore core(config_);
  return core.value(index, z);
}

Complex MalmquistWalshBasis::element_derivative(int index, Complex z) const {
  const BasisCore core(config_);
  return core.derivative(index, z);
}

void MalmquistWalshBasis::element_values(Complex z,
                                         std::span<Complex> out) const {
  const auto& poles = config_.poles();
  const int n = config_.degree();
  Complex running = 1.0;
  for (int k = 0; k < n; ++k) {
    const Complex d = kernel_denominator(poles[k], z);
    out[static_cast<std::size_t>(k)] =
        std::sqrt(1.0 - std::norm(poles[k])) / d * running;
    running *= (poles[k] - z) / d;
  }
}

void MalmquistWalshBasis::element_derivatives(Complex z,
                                              std::span<Complex> out) const {
  const auto& poles = config_.poles();
  const int n = config_.degree();
  Complex running = 1.0;       // prod_{j<k} b_j
  Complex log_derivative = 0.0;  // sum_{j<k} b_j'/b_j
  for (int k = 0; k < n; ++k) {
    const Complex d = kernel_denominator(poles[k], z);
    const Complex value = std::sqrt(1.0 - std::norm(poles[k])) / d * running;
    out[static_cast<std::size_t>(k)] =
        value * (std::conj(poles[k]) / d + log_derivative);
    const Complex b = (poles[k] - z) / d;
    if (std::abs(b) < tol::pole_denominator)
      throw EvaluationError(
          "derivative chain requires z away from the configuration poles");
    log_derivative += (std::norm(poles[k]) - 1.0) / (d * d) / b;
    running *= b;
  }
}

Eigen::MatrixXcd MalmquistWalshBasis::derivative_coefficients() const {
  const int m = spec_.sample_count;
  const int n = config_.degree();
  Eigen::MatrixXcd shifted(m, n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i + 1 < m; ++i)
      shifted(i, k) = static_cast<double>(i + 1) * coefficients_(i + 1, k);
    shifted(m - 1, k) = Complex{0.0, 0.0};
  }
  return shifted;
}

MalmquistWalshBasis build_basis(const PoleConfiguration& config,
                                const QuadratureSpec& spec) {
  return MalmquistWalshBasis(config, spec);
}

DerivativeGram derivative_gram(const MalmquistWalshBasis& basis) {
  const Eigen::MatrixXcd derivatives = basis.derivative_coefficients();
  Eigen::MatrixXcd gram = derivatives.adjoint() * derivatives;
  gram = 0.5 * (gram + gram.adjoint()).eval();
  return DerivativeGram{std::move(gram), basis.config()};
}

Eigen::MatrixXd confluent_derivative_map(int degree, double r) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  if (!(r >= 0.0 && r < 1.0))
    throw std::invalid_argument("modulus must lie in [0, 1)");
  Eigen::MatrixXd map = Eigen::MatrixXd::Zero(degree + 1, degree);
  for (int m = 0; m <= degree; ++m) {
    if (m >= 1) map(m, m - 1) = -r * r * m;
    if (m <= degree - 1) map(m, m) = r * (2.0 * m + 1.0);
    if (m <= degree - 2) map(m, m + 1) = -(m + 1.0);
  }
  return map;
}

Eigen::MatrixXd confluent_derivative_gram(int degree, double r) {
  const Eigen::MatrixXd map = confluent_derivative_map(degree, r);
  const double scale = (1.0 - r * r) * (1.0 - r * r);
  Eigen::MatrixXd gram = (map.transpose() * map) / scale;
  gram = 0.5 * (gram + gram.transpose()).eval();
  return gram;
}

std::pair<Eigen::VectorXcd, Eigen::VectorXcd> confluent_expansion_parts(
    std::span<const Complex> coordinates, double r) {
  const int n = static_cast<int>(coordinates.size());
  if (n < 1) throw std::invalid_argument("coordinates must be nonempty");
  Eigen::VectorXcd first = Eigen::VectorXcd::Zero(n + 1);
  Eigen::VectorXcd second = Eigen::VectorXcd::Zero(n + 1);
  for (int m = 0; m <= n; ++m) {
    Complex f = 0.0;
    if (m <= n - 1) f += r * coordinates[static_cast<std::size_t>(m)];
    if (m >= 1) f -= r * r * coordinates[static_cast<std::size_t>(m - 1)];
    first(m) = f;
    Complex s = 0.0;
    if (m <= n - 2)
      s += (m + 1.0) * coordinates[static_cast<std::size_t>(m + 1)];
    if (m >= 1 && m <= n - 1)
      s -= 2.0 * r * m * coordinates[static_cast<std::size_t>(m)];
    if (m >= 2)
      s += r * r * (m - 1.0) * coordinates[static_cast<std::size_t>(m - 1)];
    second(m) = s;
  }
  return {std::move(first), std::move(second)};
}

namespace {

template <class Matrix>
OperatorNormResult solve_largest_eigenvalue(const Matrix& gram) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(gram);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("eigenvalue solve did not converge");
  const int n = static_cast<int>(gram.rows());
  const double lambda = solver.eigenvalues()(n - 1);
  const auto vector = solver.eigenvectors().col(n - 1);
  const double residual =
      (gram * vector - lambda * vector).norm() / std::max(lambda, 1.0);
  if (!(residual <= tol::eigen_residual))
    throw ConvergenceError("eigenvalue residual above tolerance");
  OperatorNormResult result;
  result.lambda_max = lambda;
  result.norm = std::sqrt(std::max(lambda, 0.0));
  result.iterations = n > 1 ? n - 1 : 0;
  result.residual = residual;
  result.dimension = n;
  return result;
}

}  // namespace

OperatorNormResult operator_norm(const PoleConfiguration& config) {
  return operator_norm(config, QuadratureSpec::for_config(config));
}

OperatorNormResult operator_norm(const PoleConfiguration& config,
                                 const QuadratureSpec& spec) {
  if (config.is_confluent()) {
    // A global rotation of the poles is an isometry of the model space that
    // leaves ||f'||_2 unchanged, so only the modulus matters here.
    return solve_largest_eigenvalue(
        confluent_derivative_gram(config.degree(), config.max_modulus()));
  }
  const MalmquistWalshBasis basis(config, spec);
  return solve_largest_eigenvalue(derivative_gram(basis).matrix);
}

namespace {

double confluent_real_modulus(const PoleConfiguration& config) {
  if (!config.is_confluent())
    throw std::invalid_argument("configuration must have all poles equal");
  const Complex pole = config.poles().front();
  if (pole.imag() != 0.0 || pole.real() < 0.0)
    throw std::invalid_argument(
        "configuration must have a real nonnegative pole");
  return pole.real();
}

}  // namespace

AnalyticFunction test_function(const PoleConfiguration& config, int s) {
  const double r = confluent_real_modulus(config);
  const int n = config.degree();
  if (s < 0 || s % 2 != 0)
    throw std::invalid_argument("s must be an even nonnegative integer");
  if (n < s + 3) throw std::invalid_argument("need n >= s + 3");
  const double prefactor = std::sqrt(1.0 - r * r);
  // f = sum_{j} (-1)^j e_{n-s-2+j}, accumulated from the lowest Blaschke
  // power upward; the alternation starts with +1 at both ends (s is even).
  const Evaluator evaluator = [r, n, s, prefactor](Complex z) {
    const Complex d = kernel_denominator(Complex(r, 0.0), z);
    const Complex b = (r - z) / d;
    Complex power = int_pow(b, n - s - 3);
    Complex sum = 0.0;
    double sign = 1.0;
    for (int j = 0; j <= s + 2; ++j) {
      sum += sign * power;
      power *= b;
      sign = -sign;
    }
    return prefactor / d * sum;
  };
  const double rho = r > 0.0 ? 1.0 / r : 0.0;
  return analyze(evaluator, QuadratureSpec::for_config(n, r), rho);
}

ExpansionResiduals verify_derivative_expansion(
    const PoleConfiguration& config, std::span<const Complex> coordinates) {
  const double r = confluent_real_modulus(config);
  const int n = config.degree();
  if (static_cast<int>(coordinates.size()) != n)
    throw std::invalid_argument("coordinate count must equal the degree");
  const QuadratureSpec spec = QuadratureSpec::for_config(config);
  const int m = spec.sample_count;
  const MalmquistWalshBasis basis(config, spec);
  const double root = std::sqrt(1.0 - r * r);

  std::vector<Complex> derivatives(static_cast<std::size_t>(n));
  std::vector<double> squared(static_cast<std::size_t>(m));
  double worst = 0.0;
  const double step = 2.0 * std::numbers::pi / m;
  for (int i = 0; i < m; ++i) {
    const Complex z = std::polar(1.0, step * i);
    basis.element_derivatives(z, derivatives);
    Complex direct = 0.0;
    for (int k = 0; k < n; ++k)
      direct += coordinates[static_cast<std::size_t>(k)] *
                derivatives[static_cast<std::size_t>(k)];

    const Complex b = blaschke_factor(Complex(r, 0.0), z);
    const Complex b_derivative =
        blaschke_factor_derivative(Complex(r, 0.0), z);
    Complex weighted = 0.0;   // sum_k a_k b^{k-1}
    Complex indexed = 0.0;    // sum_k (k-1) a_k b^{k-1}
    Complex power = 1.0;
    for (int k = 1; k <= n; ++k) {
      const Complex a = coordinates[static_cast<std::size_t>(k - 1)];
      weighted += a * power;
      indexed += (k - 1.0) * a * power;
      power *= b;
    }
    const Complex expansion =
        -b_derivative * (r / root * weighted + root / (z - r) * indexed);
    worst = std::max(worst, std::abs(direct - expansion));
    squared[static_cast<std::size_t>(i)] = std::norm(direct);
  }
  const double quadrature_value =
      detail::pairwise_sum<double>(0, squared.size(),
                                   [&](std::size_t i) { return squared[i]; }) /
      static_cast<double>(m);

  const auto [first, second] = confluent_expansion_parts(coordinates, r);
  const double scale = (1.0 - r * r) * (1.0 - r * r);
  const double substituted_value = (first - second).squaredNorm() / scale;

  return ExpansionResiduals{worst,
                            std::abs(quadrature_value - substituted_value)};
}

}  // namespace kbnorm
