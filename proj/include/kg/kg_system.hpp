#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kg/matrix.hpp"
#include "kg/multiindex.hpp"
#include "kg/sympow.hpp"

namespace kg {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
};

struct InvalidSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Generating triple (A, p, D): A's columns orthogonal under the weights p
/// with squared norms D, first column of A all ones.
struct KGSystem {
  Mat A;
  std::vector<GaussianRational> p;
  std::vector<GaussianRational> D;

  int dim() const { return static_cast<int>(A.rows()) - 1; }
};

/// Everything attached to one degree N of a system: the Krawtchouk matrix
/// Phi = bar(A)^*, the multinomial diagonal B, and the induced weights.
struct KrawtchoukDegree {
  int N = 0;
  Mat barA;
  Mat Phi;
  Mat B;
  Mat pbar;
  Mat Dbar;
};

// K-condition check; violations are reported, not thrown.
Report verify_k_condition(const Mat& A, const std::vector<GaussianRational>& p,
                          const std::vector<GaussianRational>& D);
Report verify_k_condition(const KGSystem& sys);

// Recover (p, D) from A alone: p is row 0 of A^{-1}, D = A* p A.
// Throws InvalidSystem with a distinct message per failure mode.
KGSystem infer_weights(const Mat& A);

KrawtchoukDegree krawtchouk(const KGSystem& sys, int N,
                            std::size_t guard = kDefaultGuard);

// Both orthogonality identities, Phi B pbar Phi* = B Dbar and its dual.
Report verify_orthogonality(const KrawtchoukDegree& kd);

struct QuantumVariables {
  std::vector<Mat> Lambda;  // Lambda_j = diag(column j of A)
  std::vector<Mat> X;       // X_j = A^{-1} Lambda_j A
};

QuantumVariables quantum_variables(const KGSystem& sys);

// Rec = Gamma(X_j)^*, Spec = Gamma(Lambda_j)^*; Rec Phi = Phi Spec is
// asserted before returning.
std::pair<Mat, Mat> recurrence_identity(const KGSystem& sys,
                                        const KrawtchoukDegree& kd, int j);

// Orders k = 0..maxOrder of the v-expansion of bar(I + v X_j) and
// bar(I + v Lambda_j), conjugate-transposed; each pair satisfies
// Rec_k Phi = Phi Spec_k (asserted).
std::vector<std::pair<Mat, Mat>> higher_recurrences(
    const KGSystem& sys, int N, int j, int maxOrder,
    std::size_t guard = kDefaultGuard);

// Report-producing variant used by the CLI: recurrence pairs at all
// j = 0..d and k = 0..N checked against a caller-supplied Phi.
Report check_recurrences(const KGSystem& sys, int N, const Mat& Phi,
                         std::size_t guard = kDefaultGuard);

/// The symmetric binomial system A = [[1,1],[1,-1]], p = (1/2,1/2), D = I,
/// with the generating-function view of Phi's columns.
struct ClassicalBinomial {
  KGSystem sys;
  KrawtchoukDegree kd;
  std::vector<UniPoly> columns;  // column j <-> (1+v)^(N-j) (1-v)^j
};

ClassicalBinomial classical_binomial(int N);

// Three-term recurrence (N-(n-1)) K_{n-1} + (n+1) K_{n+1} = x K_n at every
// grid point x = N-2j, plus generating-function column match.
Report verify_classical(const ClassicalBinomial& cb);

}  // namespace kg
