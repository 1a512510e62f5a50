#pragma once

#include <random>
#include <string>
#include <vector>

#include "kg/matrix.hpp"

namespace kgtest {

inline kg::GaussianRational g(const std::string& s) {
  return kg::GaussianRational::parse(s);
}

inline kg::Mat mat(const std::vector<std::vector<std::string>>& rows) {
  kg::Mat m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m(r, c) = g(rows[r][c]);
  return m;
}

class Rng {
 public:
  explicit Rng(unsigned seed = 20240817) : gen_(seed) {}

  kg::Rational rational(long max_num = 6, long max_den = 4) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    kg::Rational r(num(gen_), den(gen_));
    r.canonicalize();
    return r;
  }

  kg::GaussianRational gaussian(long max_num = 6, long max_den = 4,
                                bool complex = true) {
    return {rational(max_num, max_den),
            complex ? rational(max_num, max_den) : kg::Rational(0)};
  }

  kg::Mat matrix(std::size_t n, long max_num = 6, long max_den = 4,
                 bool complex = true) {
    kg::Mat m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        m(r, c) = gaussian(max_num, max_den, complex);
    return m;
  }

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }

 private:
  std::mt19937 gen_;
};

}  // namespace kgtest
