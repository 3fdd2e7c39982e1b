#include "moseed/cmaes.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace moseed {

namespace {

constexpr std::size_t kLambda = 4;
constexpr std::size_t kMu = 2;

#ifndef NDEBUG
bool symmetric_within(const Eigen::MatrixXd& C, double tol) {
  return (C - C.transpose()).cwiseAbs().maxCoeff() <= tol;
}
#endif

}  // namespace

CmaResult cma_minimize(const std::function<double(const DecisionVector&)>& f,
                       const Bounds& bounds, std::size_t eval_budget,
                       Rng& rng) {
  const std::size_t n = bounds.size();
  if (n == 0) throw std::invalid_argument("cma_minimize: empty bounds");
  if (eval_budget < kLambda)
    throw std::invalid_argument(
        "cma_minimize: eval_budget must be at least lambda (= 4)");
  const double nd = static_cast<double>(n);

  // selection weights w_i ~ ln(mu+1) - ln(i)
  double w[kMu];
  double wsum = 0.0;
  for (std::size_t i = 0; i < kMu; ++i) {
    w[i] = std::log(kMu + 1.0) - std::log(i + 1.0);
    wsum += w[i];
  }
  double w2 = 0.0;
  for (std::size_t i = 0; i < kMu; ++i) {
    w[i] /= wsum;
    w2 += w[i] * w[i];
  }
  const double mueff = 1.0 / w2;

  const double cs = (mueff + 2.0) / (nd + mueff + 3.0);
  const double ds =
      1.0 + 2.0 * std::max(0.0, std::sqrt((mueff - 1.0) / (nd + 1.0)) - 1.0) +
      cs;
  const double cc = 4.0 / (nd + 4.0);
  const double mucov = mueff;
  const double ccov =
      (1.0 / mucov) * 2.0 / ((nd + std::sqrt(2.0)) * (nd + std::sqrt(2.0))) +
      (1.0 - 1.0 / mucov) *
          std::min(1.0, (2.0 * mueff - 1.0) / ((nd + 2.0) * (nd + 2.0) + mueff));
  const double chi_n =
      std::sqrt(nd) * (1.0 - 1.0 / (4.0 * nd) + 1.0 / (21.0 * nd * nd));

  // state in normalized coordinates
  Eigen::VectorXd mean(n);
  for (std::size_t i = 0; i < n; ++i) mean(i) = rng.uniform();
  double sigma = 0.3;
  Eigen::MatrixXd C = Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd ps = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd pc = Eigen::VectorXd::Zero(n);

  auto denormalize = [&](const Eigen::VectorXd& z) {
    DecisionVector x(n);
    for (std::size_t i = 0; i < n; ++i)
      x[i] = bounds.lower[i] + z(i) * bounds.width(i);
    return x;
  };

  CmaResult result;
  result.best_f = std::numeric_limits<double>::infinity();

  Eigen::MatrixXd X(n, kLambda);
  double fitness[kLambda];
  std::size_t order[kLambda];
  std::size_t gen = 0;

  while (result.evals_used + kLambda <= eval_budget) {
    assert(symmetric_within(C, 1e-12));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(C);
    Eigen::VectorXd evals = eig.eigenvalues();
    const Eigen::MatrixXd& B = eig.eigenvectors();
    // numerical repair: keep C positive definite
    const double max_eig = evals.maxCoeff();
    const double floor_eig = std::max(1e-30, 1e-14 * std::max(max_eig, 1.0));
    for (std::size_t i = 0; i < n; ++i)
      if (evals(i) < floor_eig) evals(i) = floor_eig;
    assert(evals.minCoeff() > 0.0);
    Eigen::VectorXd D = evals.cwiseSqrt();

    for (std::size_t k = 0; k < kLambda; ++k) {
      Eigen::VectorXd z(n);
      for (std::size_t i = 0; i < n; ++i) z(i) = rng.normal();
      Eigen::VectorXd x = mean + sigma * (B * D.cwiseProduct(z));
      // the clamped point is the candidate: used for evaluation and update
      for (std::size_t i = 0; i < n; ++i)
        x(i) = std::min(std::max(x(i), 0.0), 1.0);
      X.col(k) = x;
      double fx = f(denormalize(x));
      if (!std::isfinite(fx)) fx = std::numeric_limits<double>::infinity();
      fitness[k] = fx;
      ++result.evals_used;
      if (fx < result.best_f) {
        result.best_f = fx;
        result.best_x = denormalize(x);
      }
    }

    std::iota(order, order + kLambda, std::size_t{0});
    std::stable_sort(order, order + kLambda, [&fitness](std::size_t a,
                                                        std::size_t b) {
      return fitness[a] < fitness[b];
    });

    Eigen::VectorXd old_mean = mean;
    mean = w[0] * X.col(order[0]) + w[1] * X.col(order[1]);
    const Eigen::VectorXd delta = (mean - old_mean) / sigma;

    // C^{-1/2} * delta via the eigensystem
    const Eigen::VectorXd whitened =
        B * (B.transpose() * delta).cwiseQuotient(D);
    ps = (1.0 - cs) * ps + std::sqrt(cs * (2.0 - cs) * mueff) * whitened;

    ++gen;
    const double ps_norm = ps.norm();
    const double expected =
        std::sqrt(1.0 - std::pow(1.0 - cs, 2.0 * static_cast<double>(gen)));
    const bool hsig =
        ps_norm / expected < (1.4 + 2.0 / (nd + 1.0)) * chi_n;

    pc = (1.0 - cc) * pc;
    if (hsig) pc += std::sqrt(cc * (2.0 - cc) * mueff) * delta;

    Eigen::MatrixXd rank_mu = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < kMu; ++i) {
      const Eigen::VectorXd y = (X.col(order[i]) - old_mean) / sigma;
      rank_mu += w[i] * (y * y.transpose());
    }
    C = (1.0 - ccov) * C +
        (ccov / mucov) *
            (pc * pc.transpose() +
             (hsig ? 0.0 : cc * (2.0 - cc)) * C) +
        ccov * (1.0 - 1.0 / mucov) * rank_mu;
    C = 0.5 * (C + C.transpose().eval());  // keep exactly symmetric

    sigma *= std::exp((cs / ds) * (ps_norm / chi_n - 1.0));
    sigma = std::min(sigma, 1e8);
  }

  return result;
}

}  // namespace moseed
