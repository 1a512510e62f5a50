#pragma once

#include <map>
#include <vector>

#include "kg/matrix.hpp"
#include "kg/multiindex.hpp"

namespace kg {
namespace oracle {

/// Sparse multivariate polynomial over Q(i), exponent vectors as keys.
/// Deliberately separate from the dense induced-matrix machinery so that
/// agreement between the two paths is an independent check.
class MultivarPoly {
 public:
  MultivarPoly() = default;
  static MultivarPoly constant(GaussianRational c, std::size_t nvars);
  static MultivarPoly monomial(GaussianRational c, std::vector<int> exponents);

  const std::map<std::vector<int>, GaussianRational>& terms() const {
    return terms_;
  }
  GaussianRational coeff(const std::vector<int>& exponents) const;
  bool is_zero() const { return terms_.empty(); }

  MultivarPoly& operator+=(const MultivarPoly& o);
  friend MultivarPoly operator+(MultivarPoly a, const MultivarPoly& b) {
    return a += b;
  }
  friend MultivarPoly operator*(const MultivarPoly& a, const MultivarPoly& b);

  friend bool operator==(const MultivarPoly& a, const MultivarPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void insert(std::vector<int> exponents, GaussianRational c);

  std::map<std::vector<int>, GaussianRational> terms_;
};

// Full expansion of prod_i ((Ax)_i)^{m_i} by repeated multiplication.
MultivarPoly expand_power(const Mat& A, const MultiIndex& m);

// Induced matrix assembled row by row from expand_power.
Mat bar_via_oracle(const Mat& A, int N, std::size_t guard = kDefaultGuard);

// Columns Theorem check: the diagonal entries of bar(sum_j v_j Lambda_j)
// are generating functions in v for the rows of bar(A).
bool columns_theorem_holds(const Mat& A, int N,
                           std::size_t guard = kDefaultGuard);

}  // namespace oracle
}  // namespace kg
