#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <nlohmann/json.hpp>
#include <optional>
#include <vector>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/line_graph.hpp"

namespace hyperlap {

// Above this many hyperlinks the full dense eigensolve is replaced by an
// iterative solve that only recovers the smallest eigenvalue.
inline constexpr std::size_t kDenseEigenLimit = 2000;
inline constexpr double kIterativeTol = 1e-8;

// All eigenvalues of a symmetric matrix, ascending. Rejects asymmetric input.
std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& a);

// Smallest adjacency eigenvalue of the (possibly weighted) line graph,
// choosing dense or iterative by size.
double smallest_eigenvalue(const LineGraph& g);

// Lanczos with full reorthogonalisation and thick restarts, deterministic
// start vector. Converges on the extreme eigenvalue; throws when the matvec
// budget runs out. Exposed for tests.
double lanczos_smallest_eigenvalue(const LineGraph& g, double tol,
                                   std::size_t max_matvecs);

struct SpectralReport {
  double lambda_min = 0.0;
  int max_depth = 0;
  bool bound_satisfied = false;
  // Eigenvalues within tolerance of -max_depth; only counted when the
  // hypergraph is linear and uniform and the full spectrum was computed.
  std::optional<std::int64_t> multiplicity_at_minus_depth;
  double tolerance = 0.0;

  nlohmann::json to_json() const;
};

// Checks lambda_min >= -max_depth - tol on the line graph of h and, for
// linear uniform hypergraphs within the dense limit, counts the eigenvalues
// pinned at -depth (at least L - N of them whenever L > N).
SpectralReport verify_bound(const Hypergraph& h, double tol = 1e-9);

// Verifies that R^T R is positive semidefinite and that its nonzero spectrum
// matches R R^T. This is what anchors the eigenvalue bound above.
bool gram_psd_check(const IncidenceMatrix& r, double tol = 1e-9);

}  // namespace hyperlap
