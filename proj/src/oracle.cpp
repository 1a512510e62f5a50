#include "kg/oracle.hpp"

namespace kg {
namespace oracle {

MultivarPoly MultivarPoly::constant(GaussianRational c, std::size_t nvars) {
  return monomial(std::move(c), std::vector<int>(nvars, 0));
}

MultivarPoly MultivarPoly::monomial(GaussianRational c,
                                    std::vector<int> exponents) {
  MultivarPoly p;
  p.insert(std::move(exponents), std::move(c));
  return p;
}

GaussianRational MultivarPoly::coeff(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

void MultivarPoly::insert(std::vector<int> exponents, GaussianRational c) {
  if (c.is_zero()) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exponents), std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultivarPoly& MultivarPoly::operator+=(const MultivarPoly& o) {
  for (const auto& [exp, c] : o.terms_) {
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_.emplace(exp, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

MultivarPoly operator*(const MultivarPoly& a, const MultivarPoly& b) {
  MultivarPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        GaussianRational c = ca * cb;
        if (!c.is_zero()) out.terms_.emplace(std::move(e), std::move(c));
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  }
  return out;
}

MultivarPoly expand_power(const Mat& A, const MultiIndex& m) {
  std::size_t nvars = A.rows();
  MultivarPoly out = MultivarPoly::constant(GaussianRational(1), nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    MultivarPoly row;
    for (std::size_t j = 0; j < nvars; ++j) {
      std::vector<int> e(nvars, 0);
      e[j] = 1;
      row += MultivarPoly::monomial(A(i, j), std::move(e));
    }
    for (int rep = 0; rep < m[i]; ++rep) out = out * row;
  }
  return out;
}

Mat bar_via_oracle(const Mat& A, int N, std::size_t guard) {
  int d = static_cast<int>(A.rows()) - 1;
  IndexTable table(d, N, guard);
  Mat out(table.size(), table.size());
  for (std::size_t row = 0; row < table.size(); ++row) {
    MultivarPoly p = expand_power(A, table.at(row));
    for (std::size_t col = 0; col < table.size(); ++col)
      out(row, col) = p.coeff(table.at(col).parts);
  }
  return out;
}

bool columns_theorem_holds(const Mat& A, int N, std::size_t guard) {
  std::size_t nvars = A.rows();
  IndexTable table(static_cast<int>(nvars) - 1, N, guard);
  Mat barA = bar_via_oracle(A, N, guard);
  for (std::size_t row = 0; row < table.size(); ++row) {
    const MultiIndex& m = table.at(row);
    // diagonal entry of bar(Lambda) at m: prod_k (sum_j A_{kj} v_j)^{m_k}
    MultivarPoly diag = MultivarPoly::constant(GaussianRational(1), nvars);
    for (std::size_t k = 0; k < nvars; ++k) {
      MultivarPoly form;
      for (std::size_t j = 0; j < nvars; ++j) {
        std::vector<int> e(nvars, 0);
        e[j] = 1;
        form += MultivarPoly::monomial(A(k, j), std::move(e));
      }
      for (int rep = 0; rep < m[k]; ++rep) diag = diag * form;
    }
    for (std::size_t col = 0; col < table.size(); ++col)
      if (diag.coeff(table.at(col).parts) != barA(row, col)) return false;
  }
  return true;
}

}  // namespace oracle
}  // namespace kg
