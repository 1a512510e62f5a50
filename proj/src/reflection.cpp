#include "kg/reflection.hpp"

namespace kg {

Mat reflection_from_vector(const std::vector<GaussianRational>& v) {
  bool nonzero = false;
  for (const auto& vi : v)
    if (!vi.is_zero()) nonzero = true;
  if (v.empty() || !nonzero)
    throw InvalidSystem("reflection vector must be nonzero");

  GaussianRational norm(0);
  for (const auto& vi : v) norm += vi.conj() * vi;
  std::size_t n = v.size();
  Mat U(n, n);
  GaussianRational two(2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      U(i, j) = two * v[i] * v[j].conj() / norm;
      if (i == j) U(i, j) -= GaussianRational(1);
    }
  if (U != U.conjugate_transpose() || U * U != Mat::identity(n))
    throw std::logic_error("constructed reflection is not a self-adjoint involution");
  return U;
}

ReflectionSystem kg_from_reflection(const std::vector<GaussianRational>& v,
                                    const std::vector<Rational>& s) {
  ReflectionSystem rs;
  rs.v = v;
  rs.U = reflection_from_vector(v);
  std::size_t n = v.size();
  if (s.size() != n)
    throw InvalidSystem("scale vector s must match the reflection dimension");
  for (const auto& si : s)
    if (si <= 0) throw InvalidSystem("scale vector s must be positive");
  if (s[0] != 1) throw InvalidSystem("s_0 must equal 1 so that D_{00} = 1");

  for (std::size_t i = 0; i < n; ++i) {
    if (rs.U(i, 0).is_zero())
      throw InvalidSystem("reflection has U_{" + std::to_string(i) +
                          "0} = 0; the generating matrix is undefined");
    rs.delta.push_back(rs.U(i, 0));
    rs.s.emplace_back(Rational(s[i]));
  }

  // A = delta^{-1} U s, p = delta* delta, D = s^2
  Mat A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      A(i, j) = rs.U(i, j) * rs.s[j] / rs.delta[i];
  std::vector<GaussianRational> p, D;
  for (std::size_t i = 0; i < n; ++i) {
    p.push_back(rs.delta[i].conj() * rs.delta[i]);
    D.push_back(rs.s[i] * rs.s[i]);
  }
  rs.sys = KGSystem{std::move(A), std::move(p), std::move(D)};

  GaussianRational p_trace(0);
  for (const auto& pi : rs.sys.p) p_trace += pi;
  if (p_trace != GaussianRational(1))
    throw std::logic_error("reflection weights do not sum to 1");
  Mat gram = rs.sys.A.conjugate_transpose() *
             Mat::diagonal(rs.sys.p) * rs.sys.A;
  if (gram != Mat::diagonal(rs.sys.D))
    throw std::logic_error("K-condition A* p A = D failed for reflection system");
  return rs;
}

Report verify_reflection_properties(const ReflectionSystem& rs, int N,
                                    std::size_t guard) {
  return verify_reflection_properties(rs, krawtchouk(rs.sys, N, guard), guard);
}

Report verify_reflection_properties(const ReflectionSystem& rs,
                                    const KrawtchoukDegree& kd,
                                    std::size_t guard) {
  Report report;
  int N = kd.N;
  std::vector<GaussianRational> ds_inv, ds;
  for (std::size_t i = 0; i < rs.delta.size(); ++i) {
    ds_inv.push_back(rs.delta[i].conj() / rs.s[i]);
    ds.push_back(rs.delta[i].conj());
  }
  Mat M1 = diagonal_bar(ds_inv, N, guard) * kd.Phi;
  std::string diff = first_difference(M1 * M1, Mat::identity(M1.rows()));
  report.add("involutive", diff.empty(), diff);

  Mat M2 = kd.Phi * kd.B * diagonal_bar(ds, N, guard) *
           diagonal_bar(rs.s, N, guard);
  diff = first_difference(M2, M2.conjugate_transpose());
  report.add("self_adjoint", diff.empty(), diff);
  return report;
}

}  // namespace kg
