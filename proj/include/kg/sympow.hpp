#pragma once

#include <vector>

#include "kg/matrix.hpp"
#include "kg/multiindex.hpp"

namespace kg {

// Diagonal matrix of multinomial coefficients binom(N, m) in dictionary
// order; the B matrix of the induced degree N.
Mat multinomial_diag(int d, int N, std::size_t guard = kDefaultGuard);

/// Symmetric-power matrix elements by direct expansion: row m of the result
/// holds the coefficients of (Ax)^m in the monomials x^n of degree N.
template <class T>
Matrix<T> bar_direct(const Matrix<T>& A, int N,
                     std::size_t guard = kDefaultGuard) {
  if (!A.square()) throw std::invalid_argument("bar requires a square matrix");
  int d = static_cast<int>(A.rows()) - 1;
  std::vector<IndexTable> tables;
  tables.reserve(N + 1);
  for (int k = 0; k <= N; ++k) tables.emplace_back(d, k, guard);

  const IndexTable& top = tables[N];
  Matrix<T> out(top.size(), top.size());
  for (std::size_t row = 0; row < top.size(); ++row) {
    const MultiIndex& m = top.at(row);
    // product of the linear forms (Ax)_i, each taken m_i times
    std::vector<T> cur{T(1)};
    int deg = 0;
    for (int i = 0; i <= d; ++i) {
      for (int rep = 0; rep < m[i]; ++rep) {
        const IndexTable& lo = tables[deg];
        const IndexTable& hi = tables[deg + 1];
        std::vector<T> next(hi.size());
        for (std::size_t k = 0; k < lo.size(); ++k) {
          if (cur[k].is_zero()) continue;
          for (int j = 0; j <= d; ++j) {
            if (A(i, j).is_zero()) continue;
            MultiIndex n = lo.at(k);
            n.parts[j] += 1;
            next[hi.rank(n)] += cur[k] * A(i, j);
          }
        }
        cur = std::move(next);
        ++deg;
      }
    }
    for (std::size_t col = 0; col < top.size(); ++col) out(row, col) = cur[col];
  }
  return out;
}

/// One level of the symmetric-power recurrence: given bar(A) at degree N-1,
/// produce bar(A) at degree N. Each degree-N column label picks its first
/// positive coordinate j and divides the recurrence sum by that coordinate.
template <class T>
Matrix<T> bar_incremental(const Matrix<T>& A, const Matrix<T>& barPrev, int N,
                          std::size_t guard = kDefaultGuard) {
  int d = static_cast<int>(A.rows()) - 1;
  IndexTable prev(d, N - 1, guard);
  IndexTable top(d, N, guard);
  if (barPrev.rows() != prev.size() || barPrev.cols() != prev.size())
    throw std::invalid_argument("barPrev is not the degree N-1 induced matrix");

  Matrix<T> out(top.size(), top.size());
  for (std::size_t col = 0; col < top.size(); ++col) {
    const MultiIndex& nprime = top.at(col);
    std::size_t j = 0;
    while (nprime[j] == 0) ++j;
    MultiIndex n = nprime;
    n.parts[j] -= 1;
    std::size_t ncol = prev.rank(n);
    GaussianRational inv_count(Rational(1, nprime[j]));
    for (std::size_t row = 0; row < top.size(); ++row) {
      const MultiIndex& m = top.at(row);
      T sum{};
      for (std::size_t k = 0; k <= static_cast<std::size_t>(d); ++k) {
        if (m[k] == 0 || A(k, j).is_zero()) continue;
        MultiIndex me = m;
        me.parts[k] -= 1;
        sum += scale(barPrev(prev.rank(me), ncol) * A(k, j),
                     GaussianRational(static_cast<long>(m[k])));
      }
      out(row, col) = scale(sum, inv_count);
    }
  }
  return out;
}

/// bar(A, N): degree-N symmetric power, built by chaining the recurrence
/// from degree 1.
template <class T>
Matrix<T> bar(const Matrix<T>& A, int N, std::size_t guard = kDefaultGuard) {
  if (!A.square()) throw std::invalid_argument("bar requires a square matrix");
  if (N < 0) throw std::invalid_argument("bar requires N >= 0");
  int d = static_cast<int>(A.rows()) - 1;
  (void)IndexTable(d, N, guard);  // capacity check up front
  if (N == 0) {
    Matrix<T> one(1, 1);
    one(0, 0) = T(1);
    return one;
  }
  Matrix<T> cur = A;
  for (int k = 2; k <= N; ++k) cur = bar_incremental(A, cur, k, guard);
  return cur;
}

template <class T>
T sym_trace(const Matrix<T>& A, int N, std::size_t guard = kDefaultGuard) {
  return bar(A, N, guard).trace();
}

/// Gamma map of the symmetric representation, from the closed-form entries:
/// Gamma(g)_{mn} = m_i g_{ij} when n = m - e_i + e_j, zero otherwise.
template <class T>
Matrix<T> gamma(const Matrix<T>& g, int N, std::size_t guard = kDefaultGuard) {
  if (!g.square())
    throw std::invalid_argument("gamma requires a square matrix");
  int d = static_cast<int>(g.rows()) - 1;
  IndexTable table(d, N, guard);
  Matrix<T> out(table.size(), table.size());
  for (std::size_t row = 0; row < table.size(); ++row) {
    const MultiIndex& m = table.at(row);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(d); ++i) {
      if (m[i] == 0) continue;
      for (std::size_t j = 0; j <= static_cast<std::size_t>(d); ++j) {
        if (g(i, j).is_zero()) continue;
        auto n = shifted(m, i, j);
        out(row, table.rank(*n)) +=
            scale(g(i, j), GaussianRational(static_cast<long>(m[i])));
      }
    }
  }
  return out;
}

enum class DualMode { Transpose, Adjoint };

// bar of the transpose (resp. adjoint) of A, computed through the
// conjugation identity B^{-1} bar(A)^T B (resp. B^{-1} bar(A)^* B).
Mat transpose_conjugate_induced(const Mat& A, int N, DualMode mode,
                                std::size_t guard = kDefaultGuard);

// Induced diagonal of a diagonal matrix: monomials of the diagonal entries,
// one per degree-N multi-index.
template <class T>
Matrix<T> diagonal_bar(const std::vector<T>& diag, int N,
                       std::size_t guard = kDefaultGuard) {
  IndexTable table(static_cast<int>(diag.size()) - 1, N, guard);
  std::vector<T> out;
  out.reserve(table.size());
  for (const MultiIndex& m : table.all()) {
    T prod{T(1)};
    for (std::size_t i = 0; i < diag.size(); ++i)
      for (int rep = 0; rep < m[i]; ++rep) prod = prod * diag[i];
    out.push_back(prod);
  }
  return Matrix<T>::diagonal(out);
}

}  // namespace kg
