#include <doctest.h>

#include "kg/kg_system.hpp"
#include "support.hpp"

using kg::GaussianRational;
using kg::KGSystem;
using kg::KrawtchoukDegree;
using kg::Mat;
using kgtest::g;
using kgtest::mat;

namespace {

std::vector<GaussianRational> gv(const std::vector<std::string>& xs) {
  std::vector<GaussianRational> out;
  for (const auto& x : xs) out.push_back(g(x));
  return out;
}

const Mat kClassicalA = mat({{"1", "1"}, {"1", "-1"}});
const Mat kTwoVarA =
    mat({{"1", "1", "1"}, {"1", "-1", "0"}, {"1", "1", "-2"}});

KGSystem two_var_system() {
  return KGSystem{kTwoVarA, gv({"1/3", "1/2", "1/6"}), gv({"1", "1", "1"})};
}

const Mat kTwoVarPhi2 = mat({{"1", "1", "1", "1", "1", "1"},
                             {"2", "0", "2", "-2", "0", "2"},
                             {"2", "1", "-1", "0", "-2", "-4"},
                             {"1", "-1", "1", "1", "-1", "1"},
                             {"2", "-1", "-1", "0", "2", "-4"},
                             {"1", "0", "-2", "0", "0", "4"}});

}  // namespace

TEST_CASE("K-condition verification on the paper systems") {
  CHECK(kg::verify_k_condition(kClassicalA, gv({"1/2", "1/2"}), gv({"1", "1"}))
            .all_pass());
  CHECK(kg::verify_k_condition(two_var_system()).all_pass());

  kg::Report bad = kg::verify_k_condition(mat({{"1", "1"}, {"1", "1"}}),
                                          gv({"1/2", "1/2"}), gv({"1", "1"}));
  CHECK(!bad.all_pass());
}

TEST_CASE("weight inference") {
  KGSystem classical = kg::infer_weights(kClassicalA);
  CHECK(classical.p == gv({"1/2", "1/2"}));
  CHECK(classical.D == gv({"1", "1"}));

  KGSystem two = kg::infer_weights(kTwoVarA);
  CHECK(two.p == gv({"1/3", "1/2", "1/6"}));
  CHECK(two.D == gv({"1", "1", "1"}));

  KGSystem binom = kg::infer_weights(mat({{"1", "1/3"}, {"1", "-2/3"}}));
  CHECK(binom.p == gv({"2/3", "1/3"}));
  CHECK(binom.D == gv({"1", "2/9"}));
}

TEST_CASE("weight inference failure modes are distinct") {
  CHECK_THROWS_WITH_AS(kg::infer_weights(mat({{"1", "1"}, {"1", "1"}})),
                       "A is singular", kg::InvalidSystem);
  CHECK_THROWS_WITH_AS(kg::infer_weights(mat({{"1", "2"}, {"2", "1"}})),
                       "first column of A must be all ones", kg::InvalidSystem);
  // invertible, first column ones, but weights of mixed sign
  CHECK_THROWS_AS(kg::infer_weights(mat({{"1", "3"}, {"1", "4"}})),
                  kg::InvalidSystem);
}

TEST_CASE("round-trip: verified triples are reproduced by inference") {
  for (const KGSystem& sys :
       {KGSystem{kClassicalA, gv({"1/2", "1/2"}), gv({"1", "1"})},
        two_var_system()}) {
    REQUIRE(kg::verify_k_condition(sys).all_pass());
    KGSystem inferred = kg::infer_weights(sys.A);
    CHECK(inferred.p == sys.p);
    CHECK(inferred.D == sys.D);
  }
}

TEST_CASE("Krawtchouk matrices of the paper") {
  KGSystem classical{kClassicalA, gv({"1/2", "1/2"}), gv({"1", "1"})};
  KrawtchoukDegree kd4 = kg::krawtchouk(classical, 4);
  CHECK(kd4.Phi == mat({{"1", "1", "1", "1", "1"},
                        {"4", "2", "0", "-2", "-4"},
                        {"6", "0", "-2", "0", "6"},
                        {"4", "-2", "0", "2", "-4"},
                        {"1", "-1", "1", "-1", "1"}}));
  CHECK(kd4.B == Mat::diagonal(gv({"1", "4", "6", "4", "1"})));
  CHECK(kd4.pbar ==
        Mat::diagonal(gv({"1/16", "1/16", "1/16", "1/16", "1/16"})));

  KrawtchoukDegree kd2 = kg::krawtchouk(two_var_system(), 2);
  CHECK(kd2.Phi == kTwoVarPhi2);

  CHECK(kg::krawtchouk(classical, 0).Phi == mat({{"1"}}));
}

TEST_CASE("orthogonality and its dual") {
  KGSystem classical{kClassicalA, gv({"1/2", "1/2"}), gv({"1", "1"})};
  CHECK(kg::verify_orthogonality(kg::krawtchouk(classical, 4)).all_pass());
  CHECK(kg::verify_orthogonality(kg::krawtchouk(two_var_system(), 2))
            .all_pass());

  KrawtchoukDegree corrupted = kg::krawtchouk(two_var_system(), 2);
  corrupted.Phi(1, 2) += g("1");
  kg::Report report = kg::verify_orthogonality(corrupted);
  CHECK(!report.all_pass());
  CHECK(!report.checks[0].pass);
  CHECK(!report.checks[1].pass);
  CHECK(report.checks[0].detail.find("entry (") != std::string::npos);
}

TEST_CASE("quantum variables") {
  KGSystem ex4{mat({{"1", "3"}, {"1", "4"}}), gv({"1/2", "1/2"}),
               gv({"1", "1"})};
  kg::QuantumVariables qv = kg::quantum_variables(ex4);
  CHECK(qv.Lambda[1] == Mat::diagonal(gv({"3", "4"})));
  CHECK(qv.X[1] == mat({{"0", "-12"}, {"1", "7"}}));
  CHECK(qv.X[0] == Mat::identity(2));

  kg::QuantumVariables tv = kg::quantum_variables(two_var_system());
  CHECK(tv.X[1] == mat({{"0", "1", "0"}, {"1", "0", "0"}, {"0", "0", "1"}}));
  CHECK(tv.X[2] == mat({{"0", "0", "1"}, {"0", "0", "1"}, {"1", "1", "-1"}}));

  // spectral identity A X_j = Lambda_j A
  for (std::size_t j = 0; j < 3; ++j)
    CHECK(two_var_system().A * tv.X[j] == tv.Lambda[j] * two_var_system().A);
}

TEST_CASE("example 4 spectral identity at the induced level") {
  Mat A = mat({{"1", "3"}, {"1", "4"}});
  Mat barA = kg::bar(A, 2);
  CHECK(barA == mat({{"1", "6", "9"}, {"1", "7", "12"}, {"1", "8", "16"}}));
  Mat X1 = mat({{"0", "-12"}, {"1", "7"}});
  Mat lhs = kg::gamma(X1, 2).conjugate_transpose() * barA.conjugate_transpose();
  Mat rhs = barA.conjugate_transpose() * Mat::diagonal(gv({"6", "7", "8"}));
  CHECK(lhs == rhs);
  CHECK(kg::gamma(X1, 2).conjugate_transpose() ==
        mat({{"0", "1", "0"}, {"-24", "7", "2"}, {"0", "-12", "14"}}));
}

TEST_CASE("recurrence identities of the paper") {
  KGSystem classical{kClassicalA, gv({"1/2", "1/2"}), gv({"1", "1"})};
  KrawtchoukDegree kd = kg::krawtchouk(classical, 4);
  auto [rec, spec] = kg::recurrence_identity(classical, kd, 1);
  CHECK(rec == mat({{"0", "1", "0", "0", "0"},
                    {"4", "0", "2", "0", "0"},
                    {"0", "3", "0", "3", "0"},
                    {"0", "0", "2", "0", "4"},
                    {"0", "0", "0", "1", "0"}}));
  CHECK(spec == Mat::diagonal(gv({"4", "2", "0", "-2", "-4"})));

  KGSystem two = two_var_system();
  KrawtchoukDegree kd2 = kg::krawtchouk(two, 2);
  auto [rec1, spec1] = kg::recurrence_identity(two, kd2, 1);
  CHECK(rec1 == mat({{"0", "1", "0", "0", "0", "0"},
                     {"2", "0", "0", "2", "0", "0"},
                     {"0", "0", "1", "0", "1", "0"},
                     {"0", "1", "0", "0", "0", "0"},
                     {"0", "0", "1", "0", "1", "0"},
                     {"0", "0", "0", "0", "0", "2"}}));
  CHECK(spec1 == Mat::diagonal(gv({"2", "0", "2", "-2", "0", "2"})));
  auto [rec2, spec2] = kg::recurrence_identity(two, kd2, 2);
  CHECK(rec2 == mat({{"0", "0", "1", "0", "0", "0"},
                     {"0", "0", "1", "0", "1", "0"},
                     {"2", "1", "-1", "0", "0", "2"},
                     {"0", "0", "0", "0", "1", "0"},
                     {"0", "1", "0", "2", "-1", "2"},
                     {"0", "0", "1", "0", "1", "-2"}}));
  CHECK(spec2 == Mat::diagonal(gv({"2", "1", "-1", "0", "-2", "-4"})));

  auto [rec0, spec0] = kg::recurrence_identity(two, kd2, 0);
  CHECK(rec0 == Mat::identity(6).scaled(g("2")));
  CHECK(spec0 == Mat::identity(6).scaled(g("2")));
}

TEST_CASE("higher-order recurrences in v") {
  KGSystem classical{kClassicalA, gv({"1/2", "1/2"}), gv({"1", "1"})};
  auto pairs = kg::higher_recurrences(classical, 4, 1, 4);
  REQUIRE(pairs.size() == 5);
  CHECK(pairs[0].first == Mat::identity(5));
  CHECK(pairs[0].second == Mat::identity(5));

  KrawtchoukDegree kd = kg::krawtchouk(classical, 4);
  auto [rec1, spec1] = kg::recurrence_identity(classical, kd, 1);
  CHECK(pairs[1].first == rec1);
  CHECK(pairs[1].second == spec1);

  CHECK(pairs[2].first == mat({{"0", "0", "1", "0", "0"},
                               {"0", "3", "0", "3", "0"},
                               {"6", "0", "4", "0", "6"},
                               {"0", "3", "0", "3", "0"},
                               {"0", "0", "1", "0", "0"}}));
  CHECK(pairs[2].second == Mat::diagonal(gv({"6", "0", "-2", "0", "6"})));
}

TEST_CASE("classical binomial views") {
  kg::ClassicalBinomial cb = kg::classical_binomial(4);
  CHECK(cb.columns[2] ==
        kg::UniPoly(std::vector<GaussianRational>{g("1"), g("0"), g("-2"),
                                                  g("0"), g("1")}));
  for (int j = 0; j <= 4; ++j)
    CHECK(cb.kd.Phi(1, j) == g(std::to_string(4 - 2 * j)));
  CHECK(kg::verify_classical(cb).all_pass());

  kg::ClassicalBinomial cb1 = kg::classical_binomial(1);
  CHECK(cb1.kd.Phi == kClassicalA);

  for (int N = 0; N <= 8; ++N)
    CHECK(kg::verify_classical(kg::classical_binomial(N)).all_pass());
}

TEST_CASE("squared-norm diagonal is positive real") {
  for (int N = 1; N <= 3; ++N) {
    KrawtchoukDegree kd = kg::krawtchouk(two_var_system(), N);
    Mat norms = kd.B * kd.Dbar;
    CHECK(norms.is_diagonal());
    for (const auto& x : norms.diagonal_entries()) {
      CHECK(x.is_real());
      CHECK(x.re() > 0);
    }
  }
}
