// Copyright 2026 the gcwave authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gcwave/layer_solve.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <string>

namespace gcwave {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

std::vector<double> solveSecondKind(const SecondKindProblem& problem,
                                    const KernelWorkspace& ws,
                                    SolveDiagnostics* diag) {
  if (problem.sign != 1.0 && problem.sign != -1.0) {
    throwInput("solveSecondKind: sign must be +1 or -1");
  }
  if (!(problem.tolerance > 0.0) || problem.tolerance > 1e-6) {
    throwInput("solveSecondKind: tolerance must lie in (0, 1e-6]");
  }
  if (problem.maxIterations < 10) {
    throwInput("solveSecondKind: max iterations must be at least 10");
  }
  const std::size_t n = ws.n;
  if (problem.rhs.size() != n) {
    throwInput("solveSecondKind: rhs size does not match workspace");
  }

  auto applyOp = [&](const std::vector<double>& x) {
    std::vector<double> kx = problem.side == LayerSide::Adjoint
                                 ? adjointDoubleLayer(x, ws)
                                 : doubleLayer(x, ws);
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = x[j] + problem.sign * kx[j];
    return out;
  };

  const double bNorm = norm2(problem.rhs);
  if (bNorm == 0.0) {
    if (diag) *diag = SolveDiagnostics{0.0, 0, 1.0};
    return std::vector<double>(n, 0.0);
  }

  // GMRES with modified Gram-Schmidt and Givens rotations; no restarts
  // (the Krylov dimension is bounded by maxIterations, small here).
  const int maxK = problem.maxIterations;
  std::vector<std::vector<double>> V;  // orthonormal basis
  V.reserve(maxK + 1);
  {
    std::vector<double> v0 = problem.rhs;
    for (double& v : v0) v /= bNorm;
    V.push_back(std::move(v0));
  }
  // R holds the Givens-rotated (upper triangular) Hessenberg columns.
  // The rotations are orthogonal, so the singular values of R match
  // those of the projected operator, which feeds the condition estimate.
  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(maxK + 1, maxK);
  std::vector<double> cs(maxK, 0.0), sn(maxK, 0.0);
  std::vector<double> g(maxK + 1, 0.0);
  g[0] = bNorm;

  int k = 0;
  double relRes = 1.0;
  for (; k < maxK; ++k) {
    std::vector<double> w = applyOp(V[k]);
    Eigen::VectorXd hcol = Eigen::VectorXd::Zero(k + 2);
    for (int i = 0; i <= k; ++i) {
      hcol[i] = dot(w, V[i]);
      for (std::size_t j = 0; j < n; ++j) w[j] -= hcol[i] * V[i][j];
    }
    const double hNext = norm2(w);
    hcol[k + 1] = hNext;

    // Apply accumulated rotations, then eliminate the subdiagonal.
    for (int i = 0; i < k; ++i) {
      double t = cs[i] * hcol[i] + sn[i] * hcol[i + 1];
      hcol[i + 1] = -sn[i] * hcol[i] + cs[i] * hcol[i + 1];
      hcol[i] = t;
    }
    double denom = std::hypot(hcol[k], hcol[k + 1]);
    cs[k] = hcol[k] / denom;
    sn[k] = hcol[k + 1] / denom;
    hcol[k] = denom;
    g[k + 1] = -sn[k] * g[k];
    g[k] = cs[k] * g[k];
    R.col(k).head(k + 1) = hcol.head(k + 1);

    relRes = std::abs(g[k + 1]) / bNorm;
    if (relRes <= problem.tolerance || hNext < 1e-300) {
      ++k;
      break;
    }
    for (double& v : w) v /= hNext;
    V.push_back(std::move(w));
  }

  if (relRes > problem.tolerance) {
    throwRuntime("solveSecondKind: no convergence after " +
                 std::to_string(k) + " iterations, relative residual " +
                 std::to_string(relRes));
  }

  // Back substitution on the rotated (upper triangular) Hessenberg.
  Eigen::VectorXd y = Eigen::VectorXd::Zero(k);
  for (int i = k - 1; i >= 0; --i) {
    double s = g[i];
    for (int j = i + 1; j < k; ++j) s -= R(i, j) * y[j];
    y[i] = s / R(i, i);
  }
  std::vector<double> x(n, 0.0);
  for (int i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) x[j] += y[i] * V[i][j];
  }

  if (diag) {
    diag->residual = relRes;
    diag->iterations = k;
    // Singular values of the triangular projection of the operator on
    // the Krylov space; a cheap, honest condition estimate.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(R.topLeftCorner(k, k));
    const double smin = svd.singularValues().minCoeff();
    diag->conditionEstimate =
        smin > 0.0 ? svd.singularValues().maxCoeff() / smin
                   : std::numeric_limits<double>::infinity();
  }
  return x;
}

}  // namespace gcwave
