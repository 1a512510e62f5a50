#include "kg/kg_system.hpp"

namespace kg {

namespace {

bool is_positive_real(const GaussianRational& x) {
  return x.is_real() && x.re() > 0;
}

Mat diagonal_inverse(const Mat& m) {
  Mat out(m.rows(), m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k)
    out(k, k) = GaussianRational(1) / m(k, k);
  return out;
}

}  // namespace

Report verify_k_condition(const Mat& A, const std::vector<GaussianRational>& p,
                          const std::vector<GaussianRational>& D) {
  Report report;
  std::size_t n = A.rows();
  if (!A.square() || p.size() != n || D.size() != n) {
    report.add("shapes", false, "A must be square with matching p, D lengths");
    return report;
  }

  bool first_col = true;
  for (std::size_t i = 0; i < n; ++i)
    if (A(i, 0) != GaussianRational(1)) first_col = false;
  report.add("first_column_ones", first_col,
             first_col ? "" : "some A_{i0} differs from 1");

  bool p_pos = true;
  GaussianRational p_sum(0);
  for (const auto& pi : p) {
    if (!is_positive_real(pi)) p_pos = false;
    p_sum += pi;
  }
  report.add("weights_positive", p_pos,
             p_pos ? "" : "p must be real and positive");
  report.add("weights_sum_one", p_sum == GaussianRational(1),
             p_sum == GaussianRational(1) ? "" : "sum p = " + p_sum.to_string());

  bool d_pos = true;
  for (const auto& di : D)
    if (!is_positive_real(di)) d_pos = false;
  report.add("norms_positive", d_pos, d_pos ? "" : "D must be real and positive");
  report.add("norms_normalized", D[0] == GaussianRational(1),
             D[0] == GaussianRational(1) ? "" : "D_{00} = " + D[0].to_string());

  Mat gram = A.conjugate_transpose() * Mat::diagonal(p) * A;
  bool diag = gram.is_diagonal();
  report.add("gram_diagonal", diag, diag ? "" : "A* p A has off-diagonal entries");
  Mat Dm = Mat::diagonal(D);
  std::string diff = first_difference(gram, Dm);
  report.add("gram_equals_D", diff.empty(), diff);
  return report;
}

Report verify_k_condition(const KGSystem& sys) {
  return verify_k_condition(sys.A, sys.p, sys.D);
}

KGSystem infer_weights(const Mat& A) {
  if (!A.square()) throw InvalidSystem("A must be square");
  std::size_t n = A.rows();
  for (std::size_t i = 0; i < n; ++i)
    if (A(i, 0) != GaussianRational(1))
      throw InvalidSystem("first column of A must be all ones");
  Mat Ainv;
  try {
    Ainv = inverse(A);
  } catch (const SingularMatrix&) {
    throw InvalidSystem("A is singular");
  }
  std::vector<GaussianRational> p;
  p.reserve(n);
  for (std::size_t j = 0; j < n; ++j) p.push_back(Ainv(0, j));
  for (const auto& pj : p)
    if (!is_positive_real(pj))
      throw InvalidSystem("inferred weights are not positive real");

  Mat gram = A.conjugate_transpose() * Mat::diagonal(p) * A;
  if (!gram.is_diagonal()) throw InvalidSystem("A* p A is not diagonal");
  std::vector<GaussianRational> D = gram.diagonal_entries();
  for (const auto& dj : D)
    if (!is_positive_real(dj))
      throw InvalidSystem("inferred squared norms are not positive real");
  if (D[0] != GaussianRational(1))
    throw InvalidSystem("D_{00} must equal 1");
  return KGSystem{A, std::move(p), std::move(D)};
}

KrawtchoukDegree krawtchouk(const KGSystem& sys, int N, std::size_t guard) {
  KrawtchoukDegree kd;
  kd.N = N;
  kd.barA = bar(sys.A, N, guard);
  kd.Phi = kd.barA.conjugate_transpose();
  kd.B = multinomial_diag(sys.dim(), N, guard);
  kd.pbar = diagonal_bar(sys.p, N, guard);
  kd.Dbar = diagonal_bar(sys.D, N, guard);
  return kd;
}

Report verify_orthogonality(const KrawtchoukDegree& kd) {
  Report report;
  Mat lhs = kd.Phi * kd.B * kd.pbar * kd.Phi.conjugate_transpose();
  Mat rhs = kd.B * kd.Dbar;
  std::string diff = first_difference(lhs, rhs);
  report.add("orthogonality", diff.empty(), diff);

  Mat dual_lhs = kd.Phi.conjugate_transpose() * diagonal_inverse(rhs) * kd.Phi;
  Mat dual_rhs = diagonal_inverse(kd.B * kd.pbar);
  std::string dual_diff = first_difference(dual_lhs, dual_rhs);
  report.add("dual_orthogonality", dual_diff.empty(), dual_diff);
  return report;
}

QuantumVariables quantum_variables(const KGSystem& sys) {
  Mat Ainv = inverse(sys.A);
  QuantumVariables qv;
  std::size_t n = sys.A.rows();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<GaussianRational> col;
    col.reserve(n);
    for (std::size_t i = 0; i < n; ++i) col.push_back(sys.A(i, j));
    Mat Lambda = Mat::diagonal(col);
    qv.X.push_back(Ainv * Lambda * sys.A);
    qv.Lambda.push_back(std::move(Lambda));
  }
  return qv;
}

std::pair<Mat, Mat> recurrence_identity(const KGSystem& sys,
                                        const KrawtchoukDegree& kd, int j) {
  QuantumVariables qv = quantum_variables(sys);
  Mat Rec = gamma(qv.X[j], kd.N).conjugate_transpose();
  Mat Spec = gamma(qv.Lambda[j], kd.N).conjugate_transpose();
  if (Rec * kd.Phi != kd.Phi * Spec)
    throw std::logic_error("recurrence identity Rec Phi = Phi Spec failed");
  return {std::move(Rec), std::move(Spec)};
}

namespace {

// bar(I + v M) at degree N, conjugate-transposed coefficient of v^k.
std::vector<Mat> v_expansion(const Mat& M, int N, int maxOrder,
                             std::size_t guard) {
  PolyMat shifted = to_poly(M);
  for (std::size_t r = 0; r < shifted.rows(); ++r)
    for (std::size_t c = 0; c < shifted.cols(); ++c) {
      UniPoly entry = shifted(r, c) * UniPoly::variable();
      if (r == c) entry += UniPoly(1);
      shifted(r, c) = entry;
    }
  PolyMat barred = bar(shifted, N, guard);
  std::vector<Mat> out;
  out.reserve(maxOrder + 1);
  for (int k = 0; k <= maxOrder; ++k)
    out.push_back(coefficient_matrix(barred, k).conjugate_transpose());
  return out;
}

}  // namespace

std::vector<std::pair<Mat, Mat>> higher_recurrences(const KGSystem& sys, int N,
                                                    int j, int maxOrder,
                                                    std::size_t guard) {
  QuantumVariables qv = quantum_variables(sys);
  std::vector<Mat> recs = v_expansion(qv.X[j], N, maxOrder, guard);
  std::vector<Mat> specs = v_expansion(qv.Lambda[j], N, maxOrder, guard);
  Mat Phi = bar(sys.A, N, guard).conjugate_transpose();
  std::vector<std::pair<Mat, Mat>> out;
  out.reserve(maxOrder + 1);
  for (int k = 0; k <= maxOrder; ++k) {
    if (recs[k] * Phi != Phi * specs[k])
      throw std::logic_error("order-" + std::to_string(k) +
                             " recurrence Rec Phi = Phi Spec failed");
    out.emplace_back(std::move(recs[k]), std::move(specs[k]));
  }
  return out;
}

Report check_recurrences(const KGSystem& sys, int N, const Mat& Phi,
                         std::size_t guard) {
  Report report;
  QuantumVariables qv = quantum_variables(sys);
  for (int j = 0; j <= sys.dim(); ++j) {
    std::vector<Mat> recs = v_expansion(qv.X[j], N, N, guard);
    std::vector<Mat> specs = v_expansion(qv.Lambda[j], N, N, guard);
    for (int k = 0; k <= N; ++k) {
      std::string diff = first_difference(recs[k] * Phi, Phi * specs[k]);
      report.add("recurrence_j" + std::to_string(j) + "_k" + std::to_string(k),
                 diff.empty(), diff);
    }
  }
  return report;
}

ClassicalBinomial classical_binomial(int N) {
  ClassicalBinomial cb;
  GaussianRational one(1), minus_one(-1), half{Rational(1, 2)};
  cb.sys.A = Mat(2, 2, {one, one, one, minus_one});
  cb.sys.p = {half, half};
  cb.sys.D = {one, one};
  cb.kd = krawtchouk(cb.sys, N);

  UniPoly v = UniPoly::variable();
  UniPoly plus = UniPoly(1) + v, minus = UniPoly(1) - v;
  for (int j = 0; j <= N; ++j) {
    UniPoly col(1);
    for (int k = 0; k < N - j; ++k) col *= plus;
    for (int k = 0; k < j; ++k) col *= minus;
    cb.columns.push_back(col);
  }
  return cb;
}

Report verify_classical(const ClassicalBinomial& cb) {
  Report report;
  int N = cb.kd.N;
  const Mat& Phi = cb.kd.Phi;

  mpz_class two_N = 1;
  two_N <<= N;
  Mat scaled_id = Mat::identity(N + 1).scaled(GaussianRational(Rational(two_N)));
  std::string diff = first_difference(Phi * Phi, scaled_id);
  report.add("involution_phi_squared", diff.empty(), diff);

  Mat PhiB = Phi * cb.kd.B;
  diff = first_difference(PhiB.conjugate_transpose(), PhiB);
  report.add("phi_b_self_adjoint", diff.empty(), diff);

  bool rec_ok = true;
  std::string rec_detail;
  for (int n = 1; n < N && rec_ok; ++n) {
    for (int j = 0; j <= N; ++j) {
      GaussianRational x(static_cast<long>(N - 2 * j));
      GaussianRational lhs =
          GaussianRational(static_cast<long>(N - (n - 1))) * Phi(n - 1, j) +
          GaussianRational(static_cast<long>(n + 1)) * Phi(n + 1, j);
      if (lhs != x * Phi(n, j)) {
        rec_ok = false;
        rec_detail = "three-term recurrence fails at n=" + std::to_string(n) +
                     ", j=" + std::to_string(j);
        break;
      }
    }
  }
  report.add("three_term_recurrence", rec_ok, rec_detail);

  bool gen_ok = true;
  std::string gen_detail;
  for (int j = 0; j <= N && gen_ok; ++j) {
    for (int n = 0; n <= N; ++n) {
      if (cb.columns[j].coeff(n) != Phi(n, j)) {
        gen_ok = false;
        gen_detail = "generating function column " + std::to_string(j) +
                     " differs at order " + std::to_string(n);
        break;
      }
    }
  }
  report.add("generating_function_columns", gen_ok, gen_detail);
  return report;
}

}  // namespace kg
