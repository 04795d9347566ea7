#include <cmath>

#include "helpers.hpp"
#include "selberg/error.hpp"
#include "selberg/matcore/space.hpp"

using namespace selberg;
using namespace testing;

TEST_CASE("rationals parse reduced and exact") {
  CHECK(q("3/6") == Rational(1, 2));
  CHECK(q("-4") == Rational(-4));
  CHECK(q("0.25") == Rational(1, 4));
  CHECK(to_string(q("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("scalar arithmetic stays exact until mixed with a float") {
  const Scalar a = Rational(1, 3);
  const Scalar b = Rational(2, 3);
  CHECK((a + b).is_exact());
  CHECK((a + b).exact() == 1);
  const Scalar f = a * Scalar(0.5);
  CHECK_FALSE(f.is_exact());
  CHECK(f.to_double() == doctest::Approx(1.0 / 6));
  CHECK_THROWS_AS(f.exact(), Error);
}

TEST_CASE("exact inverse and determinant") {
  const Matrix a = corpus_a().matrix();
  CHECK(determinant(a).exact() == 1);
  CHECK(a * inverse(a) == Matrix::identity(3));
  CHECK(inverse(a) * a == Matrix::identity(3));
  CHECK(determinant(corpus_b().matrix()).exact() == 1);
  CHECK(determinant(corpus_c().matrix()).exact() == 1);
  CHECK_THROWS_AS(inverse(mat("[[1,2],[2,4]]")), Error);
}

TEST_CASE("exact determinant agrees with a floating LU oracle") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    Matrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = random_rational(rng);
    const double oracle = m.to_eigen().determinant();
    CHECK(determinant(m).to_double() == doctest::Approx(oracle).epsilon(1e-9).scale(1.0));
    if (!determinant(m).is_zero()) CHECK(m * inverse(m) == Matrix::identity(4));
  }
}

TEST_CASE("rank and nullspace") {
  const Matrix m = mat("[[1,2,3],[2,4,6],[1,0,1]]");
  CHECK(rank(m) == 2);
  const Matrix n = nullspace(m);
  REQUIRE(n.cols() == 1);
  CHECK((m * n).is_zero());
}

TEST_CASE("symmetric matrices") {
  CHECK_THROWS_AS(SymMatrix::from_matrix(mat("[[1,2],[3,1]]")), Error);
  const SymMatrix s = sym("[[2,1],[1,2]]");
  CHECK(is_positive_definite(s));
  CHECK(determinant(s).exact() == 3);
  CHECK(trace_product(s, SymMatrix::identity(2)).exact() == 4);
  const SymMatrix alpha1 = sym("[[1,1,0],[1,1,0],[0,0,0]]");
  CHECK(is_positive_semidefinite(alpha1));
  CHECK_FALSE(is_positive_definite(alpha1));
  CHECK(is_indefinite(sym("[[1,0,0],[0,-1,0],[0,0,0]]")));
}

TEST_CASE("spectrum is descending with small residuals") {
  const auto s = spectrum(SymMatrix::diagonal({3, 1, 0}));
  REQUIRE(s.size() == 3);
  CHECK(s[0] == doctest::Approx(3));
  CHECK(s[1] == doctest::Approx(1));
  CHECK(std::abs(s[2]) < 1e-12);
  const auto a1 = spectrum(sym("[[1,1,0],[1,1,0],[0,0,0]]"));
  CHECK(a1[0] == doctest::Approx(2));
  CHECK(std::abs(a1[1]) < 1e-12);
  CHECK(std::abs(a1[2]) < 1e-12);
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const SpacePoint x = random_float_point(4, rng);
    double sum = 0;
    for (double l : spectrum(x.matrix())) sum += l;
    CHECK(std::abs(sum - trace(x.matrix()).to_double()) <= 1e-10 * std::abs(sum));
  }
}

TEST_CASE("space points need positive definiteness and determinant one") {
  CHECK_THROWS_AS(SpacePoint::from(SymMatrix::diagonal({2, 1, 1})), Error);
  CHECK_THROWS_AS(SpacePoint::from(SymMatrix::diagonal({-1, -1, 1})), Error);
  const SpacePoint p = SpacePoint::normalize(SymMatrix::diagonal({2, 4, 1}));
  CHECK(p.is_exact());
  CHECK(p.matrix() == SymMatrix::diagonal({1, 2, Rational(1, 2)}));
}

TEST_CASE("the action is g^T X g and words apply their first letter first") {
  const Isometry a = corpus_a();
  const Isometry b = corpus_b();
  const SpacePoint i3 = SpacePoint::identity(3);
  CHECK(act(Isometry::identity(3), i3) == i3);
  const SpacePoint ai = act(a, i3);
  CHECK(ai.matrix() == SymMatrix::from_matrix(a.matrix().transpose() * a.matrix()));
  CHECK(trace(ai.matrix()).exact() == Rational(7, 2));
  const IsometryWord w({a, b}, {"a", "b"});
  CHECK(act(w, i3) == act(b, act(a, i3)));
  CHECK(w.product() == a * b);
  CHECK(w.inverse().to_string() == "b^-1 a^-1");
  CHECK(inverse_label("a^-1") == "a");
}

TEST_CASE("act(g^-1, act(g, X)) = X exactly and det stays 1") {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const Isometry g = random_rational_isometry(3, rng);
    const SpacePoint x = random_rational_point(3, rng);
    const SpacePoint y = act(g, x);
    CHECK(determinant(y.matrix()).exact() == 1);
    CHECK(act(g.inverse(), y) == x);
  }
}

TEST_CASE("geodesic distance") {
  const SpacePoint i3 = SpacePoint::identity(3);
  CHECK(geodesic_distance(i3, i3) == doctest::Approx(0));
  const SpacePoint d = SpacePoint::from(SymMatrix::diagonal({Scalar(std::exp(1.0)), 1, Scalar(std::exp(-1.0))}));
  CHECK(geodesic_distance(i3, d) == doctest::Approx(std::sqrt(2.0)));

  Rng rng(9);
  double worst_triangle = -1;
  for (int t = 0; t < 1000; ++t) {
    const SpacePoint x = random_float_point(3, rng);
    const SpacePoint y = random_float_point(3, rng);
    const SpacePoint z = random_float_point(3, rng);
    worst_triangle = std::max(worst_triangle, geodesic_distance(x, z) - geodesic_distance(x, y) - geodesic_distance(y, z));
  }
  CHECK(worst_triangle <= 1e-9);

  for (int t = 0; t < 100; ++t) {
    const Isometry g = random_rational_isometry(3, rng);
    const SpacePoint x = random_rational_point(3, rng);
    const SpacePoint y = random_rational_point(3, rng);
    const double d0 = geodesic_distance(x, y);
    CHECK(std::abs(geodesic_distance(act(g, x), act(g, y)) - d0) <= 1e-9 * std::max(1.0, d0));
    CHECK(std::abs(geodesic_distance(y, x) - d0) <= 1e-9 * std::max(1.0, d0));
  }
}

TEST_CASE("matrix literals round-trip through JSON") {
  const nlohmann::json j = nlohmann::json::parse(R"([["1/2","1/2","0"],["1/2","-1/2","1"],["1/2","-1/2","-1"]])");
  const Matrix m = matrix_from_json(j);
  CHECK(m.is_exact());
  CHECK(m == corpus_a().matrix());
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK_FALSE(matrix_from_json(nlohmann::json::parse("[[0.5]]")).is_exact());
}
