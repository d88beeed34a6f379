#include "hyperlap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperlap {

namespace {

// splitmix64: cheap deterministic stream for the start vector.
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Eigen::VectorXd start_vector(std::size_t n) {
  Eigen::VectorXd v(n);
  std::uint64_t state = 0x243f6a8885a308d3ull;
  for (std::size_t i = 0; i < n; ++i) {
    // uniform in [-1, 1), never all-zero for n >= 1
    v[i] = 2.0 * (splitmix64(state) >> 11) * 0x1.0p-53 - 1.0;
  }
  double norm = v.norm();
  if (norm == 0.0) v[0] = 1.0; else v /= norm;
  return v;
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix is not square");
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if (((a - a.transpose()).cwiseAbs().maxCoeff()) > 1e-12 * scale) {
    throw std::invalid_argument("matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double lanczos_smallest_eigenvalue(const LineGraph& g, double tol,
                                   std::size_t max_matvecs) {
  const std::size_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("empty graph");
  if (n == 1) return 0.0;
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");

  auto matvec = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    for (std::size_t v = 0; v < n; ++v) {
      auto nbr = g.neighbors(static_cast<LinkId>(v));
      auto wts = g.neighbor_weights(static_cast<LinkId>(v));
      double acc = 0.0;
      for (std::size_t i = 0; i < nbr.size(); ++i) acc += wts[i] * x[nbr[i]];
      y[v] = acc;
    }
  };

  const std::size_t basis_cap = std::min<std::size_t>(n, 128);
  std::size_t matvecs = 0;
  Eigen::VectorXd v = start_vector(n);
  Eigen::VectorXd w(n);

  std::vector<Eigen::VectorXd> basis;
  std::vector<double> alpha, beta;  // beta[j] couples basis j and j+1

  while (true) {  // restart loop
    basis.clear();
    alpha.clear();
    beta.clear();
    basis.push_back(v);

    for (std::size_t j = 0;; ++j) {
      if (matvecs >= max_matvecs) {
        throw std::runtime_error("iterative eigensolver did not converge within " +
                                 std::to_string(max_matvecs) + " matvecs");
      }
      matvec(basis[j], w);
      ++matvecs;
      alpha.push_back(basis[j].dot(w));
      w -= alpha[j] * basis[j];
      if (j > 0) w -= beta[j - 1] * basis[j - 1];
      // Full reorthogonalisation, twice; keeps the basis clean at this scale.
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : basis) w -= b.dot(w) * b;
      }
      double b_next = w.norm();

      bool at_cap = (j + 1 == basis_cap);
      bool exhausted = b_next <= 1e-13 * std::max(1.0, std::abs(alpha[0]));
      // The Ritz solve costs O(j^3); probing every few steps is enough.
      if (j % 8 == 7 || at_cap || exhausted) {
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(j + 1, j + 1);
        for (std::size_t i = 0; i <= j; ++i) {
          t(i, i) = alpha[i];
          if (i > 0) t(i, i - 1) = t(i - 1, i) = beta[i - 1];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
        double theta = es.eigenvalues()[0];
        double resid = b_next * std::abs(es.eigenvectors()(j, 0));
        if (resid <= tol * std::max(1.0, std::abs(theta))) return theta;
        if (exhausted) return theta;  // invariant subspace reached

        if (at_cap) {
          // Restart from the best Ritz vector so far.
          v.setZero();
          for (std::size_t i = 0; i <= j; ++i) v += es.eigenvectors()(i, 0) * basis[i];
          double norm = v.norm();
          if (norm == 0.0) return theta;
          v /= norm;
          break;
        }
      }
      beta.push_back(b_next);
      basis.push_back(w / b_next);
    }
  }
}

double smallest_eigenvalue(const LineGraph& g) {
  if (g.node_count() == 0) throw std::invalid_argument("empty graph");
  if (g.node_count() <= kDenseEigenLimit) {
    return symmetric_eigenvalues(g.dense_adjacency()).front();
  }
  return lanczos_smallest_eigenvalue(g, kIterativeTol, 10 * g.node_count());
}

SpectralReport verify_bound(const Hypergraph& h, double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");

  LineGraph g = LineGraph::from_hypergraph(h);
  SpectralReport rep;
  rep.max_depth = h.max_depth();
  rep.tolerance = tol;

  if (g.node_count() <= kDenseEigenLimit) {
    auto evs = symmetric_eigenvalues(g.dense_adjacency());
    rep.lambda_min = evs.front();
    if (h.is_linear()) {
      if (auto k = h.uniform_depth()) {
        double band = tol * std::max(1.0, static_cast<double>(*k));
        rep.multiplicity_at_minus_depth =
            std::count_if(evs.begin(), evs.end(),
                          [&](double ev) { return std::abs(ev + *k) <= band; });
      }
    }
  } else {
    rep.lambda_min =
        lanczos_smallest_eigenvalue(g, kIterativeTol, 10 * g.node_count());
  }
  rep.bound_satisfied = rep.lambda_min >= -static_cast<double>(rep.max_depth) - tol;
  return rep;
}

bool gram_psd_check(const IncidenceMatrix& r, double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  if (std::max(r.rows(), r.cols()) > kDenseEigenLimit) {
    throw std::invalid_argument("incidence too large for the dense PSD check");
  }

  Eigen::MatrixXd rm = Eigen::MatrixXd::Zero(r.rows(), r.cols());
  for (std::size_t j = 0; j < r.cols(); ++j) {
    for (NodeId i : r.column(j)) rm(i, j) = 1.0;
  }
  auto link_side = symmetric_eigenvalues(rm.transpose() * rm);  // L values
  auto node_side = symmetric_eigenvalues(rm * rm.transpose());  // N values

  double scale = std::max(1.0, std::max(link_side.back(), node_side.back()));
  double band = tol * scale;
  if (link_side.front() < -band || node_side.front() < -band) return false;

  // The two Gram products share their nonzero spectrum; compare descending.
  std::reverse(link_side.begin(), link_side.end());
  std::reverse(node_side.begin(), node_side.end());
  std::size_t shared = std::min(link_side.size(), node_side.size());
  for (std::size_t i = 0; i < shared; ++i) {
    if (std::abs(link_side[i] - node_side[i]) > band) return false;
  }
  const auto& longer = link_side.size() > node_side.size() ? link_side : node_side;
  for (std::size_t i = shared; i < longer.size(); ++i) {
    if (std::abs(longer[i]) > band) return false;
  }
  return true;
}

nlohmann::json SpectralReport::to_json() const {
  nlohmann::json j;
  j["lambda_min"] = lambda_min;
  j["k_max"] = max_depth;
  j["bound_satisfied"] = bound_satisfied;
  if (multiplicity_at_minus_depth) {
    j["multiplicity_at_minus_k"] = *multiplicity_at_minus_depth;
  } else {
    j["multiplicity_at_minus_k"] = nullptr;
  }
  j["tolerance"] = tolerance;
  return j;
}

}  // namespace hyperlap
