#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kg {

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultGuard = 20000;

/// Composition (m_0, ..., m_d) of non-negative integers.
struct MultiIndex {
  std::vector<int> parts;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> p) : parts(std::move(p)) {}

  int degree() const {
    int s = 0;
    for (int m : parts) s += m;
    return s;
  }
  std::size_t size() const { return parts.size(); }
  int operator[](std::size_t k) const { return parts[k]; }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.parts == b.parts;
  }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) {
    return !(a == b);
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(parts[k]);
    }
    return out + ")";
  }
};

mpz_class binomial(unsigned long n, unsigned long k);

// N!/(m_0! ... m_d!)
mpz_class multinomial(const MultiIndex& m);

// m - e_i + e_j, absent when m_i = 0.
std::optional<MultiIndex> shifted(const MultiIndex& m, std::size_t i,
                                  std::size_t j);

/// All multi-indices of degree N over d+1 variables in dictionary order:
/// descending lexicographic on the exponent tuple, (N,0,...,0) first.
class IndexTable {
 public:
  IndexTable(int d, int N, std::size_t guard = kDefaultGuard);

  int dim() const { return d_; }
  int degree() const { return N_; }
  std::size_t size() const { return indices_.size(); }
  const MultiIndex& at(std::size_t k) const { return indices_[k]; }
  const std::vector<MultiIndex>& all() const { return indices_; }

  std::size_t rank(const MultiIndex& m) const {
    auto it = rank_.find(m.parts);
    if (it == rank_.end())
      throw std::out_of_range("multi-index " + m.to_string() +
                              " not in table (d=" + std::to_string(d_) +
                              ", N=" + std::to_string(N_) + ")");
    return it->second;
  }
  bool contains(const MultiIndex& m) const {
    return rank_.find(m.parts) != rank_.end();
  }

 private:
  int d_, N_;
  std::vector<MultiIndex> indices_;
  std::map<std::vector<int>, std::size_t> rank_;
};

}  // namespace kg
