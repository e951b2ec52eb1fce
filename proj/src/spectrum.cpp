#include "homgraph/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "homgraph/errors.hpp"

namespace homgraph {

Matrix<double> adjacency_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Matrix<double> a(n, n, 0.0);
  for (auto [i, j] : g.edges()) a(i, j) = a(j, i) = 1.0;
  return a;
}

std::vector<double> jacobi_eigenvalues(Matrix<double> a, double tol, std::size_t max_sweeps) {
  const std::size_t n = a.rows();
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };
  // Each eigenvalue lies within the off-diagonal norm of a diagonal entry.
  const double target = tol * 0.1;
  bool converged = off_norm() <= target;
  for (std::size_t sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    converged = off_norm() <= target;
  }
  if (!converged) throw NonConvergence("Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) + " sweeps");
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.rbegin(), eig.rend());
  return eig;
}

double power_iteration_lambda_max(const Graph& g, double tol, std::size_t max_iterations) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0.0;
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n))), w(n);
  double previous = 0.0;
  for (std::size_t it = 0; it < max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = v[i];
      g.neighbors(i).for_each([&](std::size_t j) { s += v[j]; });
      w[i] = s;
    }
    const double rayleigh = std::inner_product(v.begin(), v.end(), w.begin(), 0.0);
    const double norm = std::sqrt(std::inner_product(w.begin(), w.end(), w.begin(), 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
    if (it > 0 && std::abs(rayleigh - previous) < tol * 0.01) return rayleigh - 1.0;
    previous = rayleigh;
  }
  throw NonConvergence("power iteration did not converge in " + std::to_string(max_iterations) + " steps");
}

SpectrumReport spectrum(const Graph& g, const Limits& limits, SpectrumMethod method) {
  if (!(limits.tol > 0)) throw InvalidInput("spectrum tolerance must be positive");
  SpectrumReport report;
  report.tolerance = limits.tol;
  const std::size_t t = g.vertex_count();
  if (t == 0) return report;

  if (method == SpectrumMethod::automatic && is_complete(g)) {
    report.closed_form = true;
    report.eigenvalues.assign(t, -1.0);
    report.eigenvalues[0] = static_cast<double>(t - 1);
    if (t == 1) report.eigenvalues[0] = 0.0;
    report.lambda_max = report.eigenvalues[0];
    return report;
  }
  if (t > limits.max_spectrum) {
    report.partial = true;
    report.lambda_max = power_iteration_lambda_max(g, limits.tol);
    report.eigenvalues = {report.lambda_max};
    return report;
  }
  report.eigenvalues = jacobi_eigenvalues(adjacency_matrix(g), limits.tol);
  report.lambda_max = report.eigenvalues.front();
  const double trace = std::accumulate(report.eigenvalues.begin(), report.eigenvalues.end(), 0.0);
  if (std::abs(trace) > limits.tol * static_cast<double>(std::max<std::size_t>(1, t)))
    throw NonConvergence("eigenvalue sum " + std::to_string(trace) + " differs from the trace 0");
  return report;
}

}  // namespace homgraph
