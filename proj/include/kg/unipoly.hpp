#pragma once

#include <string>
#include <vector>

#include "kg/scalar.hpp"

namespace kg {

/// Univariate polynomial in the formal variable v over Q(i).
/// Coefficient k is the coefficient of v^k; trailing zeros are stripped,
/// the zero polynomial has an empty coefficient list.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(GaussianRational c) {  // NOLINT: implicit constant embedding
    coeffs_.push_back(std::move(c));
    normalize();
  }
  UniPoly(long n) : UniPoly(GaussianRational(n)) {}
  explicit UniPoly(std::vector<GaussianRational> coeffs)
      : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static UniPoly variable() {
    return UniPoly(std::vector<GaussianRational>{0, 1});
  }

  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1 by convention
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  GaussianRational coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : GaussianRational(0);
  }

  UniPoly conj() const {
    std::vector<GaussianRational> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(a.conj());
    return UniPoly(std::move(c));
  }

  UniPoly operator-() const {
    std::vector<GaussianRational> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(-a);
    return UniPoly(std::move(c));
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
      coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) { return *this += -o; }
  UniPoly& operator*=(const UniPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j)
      for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
        c[j + k] += a.coeffs_[j] * b.coeffs_[k];
    return UniPoly(std::move(c));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) {
    return !(a == b);
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + coeffs_[k].to_string() + ")";
      if (k == 1) out += "*v";
      if (k > 1) out += "*v^" + std::to_string(k);
    }
    return out;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<GaussianRational> coeffs_;
};

inline UniPoly conj(const UniPoly& p) { return p.conj(); }

// Scaling by a Q(i) constant, shared generic hook with GaussianRational
// so induced-matrix code works over either scalar.
inline GaussianRational scale(const GaussianRational& x,
                              const GaussianRational& c) {
  return x * c;
}
inline UniPoly scale(const UniPoly& p, const GaussianRational& c) {
  return p * UniPoly(c);
}

}  // namespace kg
