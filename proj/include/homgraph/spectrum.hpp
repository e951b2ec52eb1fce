#pragma once

#include <cstddef>
#include <vector>

#include "homgraph/graph.hpp"
#include "homgraph/limits.hpp"
#include "homgraph/matrix.hpp"

namespace homgraph {

enum class SpectrumMethod {
  automatic,  // closed form for complete graphs, else numeric
  numeric,    // always run the eigensolver (for cross-checks)
};

struct SpectrumReport {
  /// Non-increasing, with multiplicity. Holds only lambda_max in partial mode.
  std::vector<double> eigenvalues;
  double lambda_max = 0.0;
  double tolerance = 1e-9;
  /// t exceeded limits.max_spectrum; only lambda_max was computed.
  bool partial = false;
  bool closed_form = false;
};

/// Adjacency spectrum. Throws NonConvergence when the iteration budget runs
/// out or the eigenvalue sum drifts from the trace (0) beyond tolerance.
SpectrumReport spectrum(const Graph& g, const Limits& limits = {}, SpectrumMethod method = SpectrumMethod::automatic);

/// Cyclic Jacobi rotations on a symmetric matrix; returns non-increasing eigenvalues.
std::vector<double> jacobi_eigenvalues(Matrix<double> a, double tol, std::size_t max_sweeps = 100);

/// Largest adjacency eigenvalue by power iteration on A + I.
double power_iteration_lambda_max(const Graph& g, double tol, std::size_t max_iterations = 200000);

Matrix<double> adjacency_matrix(const Graph& g);

}  // namespace homgraph
