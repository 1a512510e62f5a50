#include "kg/sympow.hpp"

namespace kg {

Mat multinomial_diag(int d, int N, std::size_t guard) {
  IndexTable table(d, N, guard);
  std::vector<GaussianRational> diag;
  diag.reserve(table.size());
  for (const MultiIndex& m : table.all())
    diag.emplace_back(Rational(multinomial(m)));
  return Mat::diagonal(diag);
}

Mat transpose_conjugate_induced(const Mat& A, int N, DualMode mode,
                                std::size_t guard) {
  int d = static_cast<int>(A.rows()) - 1;
  Mat barA = bar(A, N, guard);
  Mat flipped = mode == DualMode::Transpose ? barA.transpose()
                                            : barA.conjugate_transpose();
  Mat B = multinomial_diag(d, N, guard);
  Mat Binv(B.rows(), B.cols());
  for (std::size_t k = 0; k < B.rows(); ++k)
    Binv(k, k) = GaussianRational(1) / B(k, k);
  return Binv * flipped * B;
}

}  // namespace kg
