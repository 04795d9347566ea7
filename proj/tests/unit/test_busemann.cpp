#include <cmath>

#include "helpers.hpp"
#include "selberg/busemann.hpp"
#include "selberg/error.hpp"

using namespace selberg;
using namespace testing;

namespace {

SatakePoint e11() { return SatakePoint::from(SymMatrix::diagonal({1, 0, 0})); }
BoundaryComponent plane12() { return BoundaryComponent::from_span(mat("[[1,0],[0,1],[0,0]]")); }

}  // namespace

TEST_CASE("Selberg invariant") {
  const SpacePoint i3 = SpacePoint::identity(3);
  CHECK(selberg::selberg(i3, i3).exact() == 3);
  CHECK(selberg::selberg(i3, act(corpus_a(), i3)).exact() == Rational(7, 2));
  const SpacePoint x = SpacePoint::from(SymMatrix::diagonal({2, 1, Rational(1, 2)}));
  const SpacePoint y = SpacePoint::from(SymMatrix::diagonal({1, 4, Rational(1, 4)}));
  // tr(x^-1 y) = 5 but tr(y^-1 x) = 17/4.
  CHECK(selberg::selberg(x, y).exact() == 5);
  CHECK(selberg::selberg(y, x).exact() == Rational(17, 4));
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const SpacePoint p = random_rational_point(3, rng);
    const SpacePoint q2 = random_rational_point(3, rng);
    CHECK(selberg::selberg(p, q2).exact() >= 3);
  }
}

TEST_CASE("type-0 values") {
  const SpacePoint i3 = SpacePoint::identity(3);
  const BusemannSpec s = BusemannSpec::type0(e11(), i3);
  CHECK(busemann0(s, i3).exact() == 1);
  CHECK(busemann0(s, SpacePoint::from(SymMatrix::diagonal({4, 1, Rational(1, 4)}))).exact() == Rational(1, 4));
  // Scaling alpha changes nothing.
  Rng rng(2);
  const SymMatrix a = SymMatrix::outer(random_rational_vector(3, rng));
  const BusemannSpec s1 = BusemannSpec::type0(SatakePoint::from(a), i3);
  const BusemannSpec s2 = BusemannSpec::type0(SatakePoint::from(a * Scalar(2)), i3);
  const SpacePoint y = random_rational_point(3, rng);
  CHECK(busemann0(s1, y) == busemann0(s2, y));
  CHECK_THROWS_AS(BusemannSpec::type0(SatakePoint::from(SymMatrix::identity(3)), i3), Error);
}

TEST_CASE("type-0 equivariance on the example vertices") {
  // b_{alpha,X}(Y) = b_{g.alpha,X}(g.Y) whenever tr(X^-1 alpha) = tr(X^-1 g.alpha).
  const SpacePoint i3 = SpacePoint::identity(3);
  const std::vector<SymMatrix> verts = {sym("[[1,1,0],[1,1,0],[0,0,0]]"),  sym("[[1,-1,0],[-1,1,0],[0,0,0]]"),
                                        sym("[[1,0,1],[0,0,0],[1,0,1]]"),  sym("[[1,0,-1],[0,0,0],[-1,0,1]]"),
                                        sym("[[0,0,0],[0,1,1],[0,1,1]]"),  sym("[[0,0,0],[0,1,-1],[0,-1,1]]")};
  Rng rng(3);
  int checked = 0;
  for (const Isometry& g : {corpus_a(), corpus_b(), corpus_c(), corpus_a().inverse(), corpus_b().inverse()}) {
    for (const auto& v : verts) {
      const SymMatrix gv = act(g, v);
      if (trace(gv) != trace(v)) continue;
      const BusemannSpec s = BusemannSpec::type0(SatakePoint::from(v), i3);
      const BusemannSpec t = BusemannSpec::type0(SatakePoint::from(gv), i3);
      for (int k = 0; k < 5; ++k) {
        const SpacePoint y = random_rational_point(3, rng);
        CHECK(busemann0(s, y) == busemann0(t, act(g, y)));
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("type-k closed form for Pi = span(e1, e2), alpha = e1 e1^T") {
  const SpacePoint i3 = SpacePoint::identity(3);
  const BusemannSpec s = BusemannSpec::type_k(e11(), plane12(), i3);
  CHECK(s.k() == 1);
  Rng rng(4);
  for (int t = 0; t < 40; ++t) {
    const SpacePoint y = random_rational_point(3, rng);
    const Eigen::MatrixXd yi = y.inverse().to_eigen();
    const double expect = yi(0, 0) / std::sqrt(yi(0, 0) * yi(1, 1) - yi(0, 1) * yi(0, 1));
    CHECK(busemann_k(s, y) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(busemann_k(s.with_reference(y), y) == doctest::Approx(1).epsilon(1e-14));
  }
}

TEST_CASE("type-k is independent of the frame") {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const Matrix basis = Matrix::from_columns({random_rational_vector(3, rng), random_rational_vector(3, rng)});
    if (rank(basis) < 2) continue;
    const auto pi = BoundaryComponent::from_span(basis);
    const SatakePoint a = SatakePoint::from(SymMatrix::outer(basis.column(0)));
    const SpacePoint x = random_rational_point(3, rng);
    const SpacePoint y = random_float_point(3, rng);
    const double v1 = busemann_k(BusemannSpec::type_k(a, pi, x), y);
    const double v2 = busemann_k(BusemannSpec::type_k(a, pi.with_rotated_frame(random_orthogonal(2, rng)), x), y);
    CHECK(std::abs(v1 - v2) <= 1e-12 * v1);
  }
}

TEST_CASE("type-k rejects alpha outside the component") {
  const SatakePoint a = SatakePoint::from(SymMatrix::diagonal({0, 0, 1}));
  CHECK_THROWS_AS(BusemannSpec::type_k(a, plane12(), SpacePoint::identity(3)), Error);
  const SatakePoint r2 = SatakePoint::from(SymMatrix::diagonal({1, 1, 0}));
  CHECK_THROWS_AS(BusemannSpec::type_k(r2, plane12(), SpacePoint::identity(3)), Error);
}

TEST_CASE("classical Busemann function at a vertex") {
  Rng rng(6);
  const auto line = BoundaryComponent::from_span(mat("[[1],[0],[0]]"));
  for (int t = 0; t < 20; ++t) {
    const SpacePoint x = random_rational_point(3, rng);
    const SpacePoint y = random_rational_point(3, rng);
    CHECK(classical_busemann_vertex(line, x, x) == doctest::Approx(0));
    const double expect =
        std::sqrt(1.5) * std::log(y.inverse()(0, 0).to_double() / x.inverse()(0, 0).to_double());
    CHECK(classical_busemann_vertex(line, x, y) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("horoballs") {
  const SpacePoint i3 = SpacePoint::identity(3);
  const BusemannSpec s = BusemannSpec::type0(e11(), i3);
  CHECK(horoball_contains(HoroballSpec(s, 1), i3));
  CHECK_FALSE(horoball_contains(HoroballSpec(s, 1, false), i3));
  CHECK_FALSE(horoball_contains(HoroballSpec(s, 0.5), i3));
  CHECK_THROWS_AS(HoroballSpec(s, 0), Error);
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const SpacePoint y = random_float_point(3, rng);
    if (horoball_contains(HoroballSpec(s, 0.7), y)) CHECK(horoball_contains(HoroballSpec(s, 1.3), y));
  }
  // Moving toward e1 e1^T along diag(e^s, e^-s/2, e^-s/2) eventually enters every ball.
  for (double r : {1e-3, 0.1, 1.0}) {
    bool entered = false;
    for (double t = 0; t < 40 && !entered; t += 0.5) {
      const SpacePoint y = SpacePoint::normalize(SymMatrix::diagonal({Scalar(std::exp(t)), Scalar(std::exp(-t / 2)), Scalar(std::exp(-t / 2))}));
      entered = horoball_contains(HoroballSpec(s, r), y);
    }
    CHECK(entered);
  }
}

TEST_CASE("asymptotic limits from the classification table") {
  const SpacePoint i3 = SpacePoint::identity(3);
  const BusemannSpec s = BusemannSpec::type_k(e11(), plane12(), i3);
  const SpacePoint y = SpacePoint::from(sym(R"([[2,1,0],[1,2,1],[0,1,1]])"));
  REQUIRE(determinant(y.matrix()).exact() == 1);

  SUBCASE("beta = diag(beta0, 0): type-0 value of beta0 in X_2") {
    const SatakePoint beta = SatakePoint::from(sym("[[2,1,0],[1,3,0],[0,0,0]]"));
    const AsymptoticResult r = asymptotic_limit(s, beta, y);
    CHECK(r.tag == LimitTag::Finite);
    CHECK(r.numeric_consistent);
    // tr(beta0^-1 alpha0) sqrt(det beta0) with beta0 = [[2,1],[1,3]].
    CHECK(*r.value == doctest::Approx(3.0 / std::sqrt(5.0)).epsilon(1e-12));
  }
  SUBCASE("beta = e3 e3^T: type-0 value of the leading block of Y") {
    const SatakePoint beta = SatakePoint::from(SymMatrix::diagonal({0, 0, 1}));
    const AsymptoticResult r = asymptotic_limit(s, beta, y);
    CHECK(r.tag == LimitTag::Finite);
    CHECK(r.numeric_consistent);
    // Leading block [[2,1],[1,2]]: inverse (1,1) entry 2/3, det 3.
    CHECK(*r.value == doctest::Approx(2.0 / 3.0 * std::sqrt(3.0)).epsilon(1e-12));
  }
  SUBCASE("beta = e2 e2^T diverges") {
    const AsymptoticResult r = asymptotic_limit(s, SatakePoint::from(SymMatrix::diagonal({0, 1, 0})), y);
    CHECK(r.tag == LimitTag::Infinity);
    CHECK(r.numeric_consistent);
  }
  SUBCASE("beta = diag(1, 0, 1) tends to zero") {
    const AsymptoticResult r = asymptotic_limit(s, SatakePoint::from(SymMatrix::diagonal({1, 0, 1})), y);
    CHECK(r.tag == LimitTag::Zero);
    CHECK(r.numeric_consistent);
  }
}

TEST_CASE("Lipschitz margin") {
  const SpacePoint i3 = SpacePoint::identity(3);
  const BusemannSpec s = BusemannSpec::type0(e11(), i3);
  CHECK(lipschitz_constant(s) == doctest::Approx(std::sqrt(2.0 / 3.0)));
  CHECK(lipschitz_margin(s, i3, i3) == doctest::Approx(0));
  // Along the ray toward e1 e1^T the bound is attained.
  for (double t : {0.5, 1.0, 3.0}) {
    const SpacePoint y = SpacePoint::normalize(SymMatrix::diagonal({Scalar(std::exp(t)), Scalar(std::exp(-t / 2)), Scalar(std::exp(-t / 2))}));
    CHECK(std::abs(lipschitz_margin(s, i3, y)) <= 1e-12);
  }
  const BusemannSpec k1 = BusemannSpec::type_k(e11(), plane12(), i3);
  CHECK(lipschitz_constant(k1) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("Busemann specs round-trip through JSON") {
  const BusemannSpec s = BusemannSpec::type_k(e11(), plane12(), SpacePoint::identity(3));
  const BusemannSpec t = BusemannSpec::from_json(s.to_json());
  CHECK(t.kind() == BusemannKind::TypeK);
  CHECK(t.alpha() == s.alpha());
  CHECK_THROWS_AS(BusemannSpec::from_json(nlohmann::json{{"kind", "nope"}, {"alpha", {{1}}}, {"reference", {{1}}}}), Error);
}
