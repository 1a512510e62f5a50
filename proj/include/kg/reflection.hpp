#pragma once

#include <vector>

#include "kg/kg_system.hpp"

namespace kg {

/// KG system generated by the unitary reflection fixing a vector v,
/// U = 2 v v*/(v* v) - I, with a user-supplied rational square root s of D.
struct ReflectionSystem {
  std::vector<GaussianRational> v;
  Mat U;
  std::vector<GaussianRational> delta;  // first column of U
  std::vector<GaussianRational> s;      // D = s^2 entry-wise, s_0 = 1
  KGSystem sys;
};

// U = 2(v v*/v* v) - I; self-adjointness and U^2 = I are asserted.
Mat reflection_from_vector(const std::vector<GaussianRational>& v);

// Generating matrix A = delta^{-1} U s with p = delta* delta, D = s^2.
// Requires U_{i0} != 0 for all i, s real positive with s_0 = 1.
ReflectionSystem kg_from_reflection(const std::vector<GaussianRational>& v,
                                    const std::vector<Rational>& s);

// The two structural identities of reflection-generated Phi:
// (bar(delta* s^{-1}) Phi)^2 = I and Phi B bar(delta*) bar(s) self-adjoint.
Report verify_reflection_properties(const ReflectionSystem& rs, int N,
                                    std::size_t guard = kDefaultGuard);

// Same checks against a caller-supplied degree cache (lets the CLI reuse a
// possibly fault-injected Phi).
Report verify_reflection_properties(const ReflectionSystem& rs,
                                    const KrawtchoukDegree& kd,
                                    std::size_t guard = kDefaultGuard);

}  // namespace kg
