#include <cmath>

#include "helpers.hpp"
#include "selberg/error.hpp"
#include "selberg/satake.hpp"

using namespace selberg;
using namespace testing;

namespace {

BoundaryComponent span(const char* json) { return BoundaryComponent::from_span(mat(json)); }

}  // namespace

TEST_CASE("classify interior, boundary and outside") {
  CHECK(classify(SymMatrix::identity(3)).cls == CompactificationClass::Interior);
  const Classification a1 = classify(sym("[[1,1,0],[1,1,0],[0,0,0]]"));
  CHECK(a1.cls == CompactificationClass::Boundary);
  CHECK(a1.rank == 1);
  CHECK(a1.exact);
  CHECK(classify(SymMatrix::diagonal({1, -1, 0})).cls == CompactificationClass::Outside);
  CHECK_THROWS_AS(classify(SymMatrix(3)), Error);
  CHECK_THROWS_AS(SatakePoint::from(SymMatrix::diagonal({1, -1, 0})), Error);
}

TEST_CASE("classification ignores positive scaling") {
  Rng rng(2);
  for (int t = 0; t < 30; ++t) {
    const SymMatrix m = SymMatrix::outer(random_rational_vector(3, rng)) + SymMatrix::outer(random_rational_vector(3, rng));
    const Scalar s = random_rational(rng, 5, 7).sign() > 0 ? Scalar(Rational(7, 3)) : Scalar(Rational(5, 2));
    const Classification c1 = classify(m);
    const Classification c2 = classify(m * s);
    CHECK(c1.cls == c2.cls);
    CHECK(c1.rank == c2.rank);
  }
}

TEST_CASE("Satake points are trace normalized") {
  const SatakePoint p = SatakePoint::from(sym("[[1,1,0],[1,1,0],[0,0,0]]"));
  CHECK(trace(p.matrix()).exact() == 1);
  CHECK(p.rank() == 1);
  CHECK(p.is_boundary());
}

TEST_CASE("component_of is the column space") {
  const auto e1 = component_of(SatakePoint::from(SymMatrix::diagonal({1, 0, 0})));
  CHECK(e1.dim() == 1);
  CHECK(component_leq(e1, span("[[1],[0],[0]]")));
  const auto c1 = component_of(SatakePoint::from(sym("[[1,1,0],[1,1,0],[0,0,0]]")));
  CHECK(c1.dim() == 1);
  CHECK(component_leq(c1, span("[[1],[1],[0]]")));
  CHECK(component_leq(span("[[1],[1],[0]]"), c1));
  const auto c12 = component_of(SatakePoint::from(sym("[[2,0,0],[0,2,0],[0,0,0]]")));
  CHECK(c12.dim() == 2);
  CHECK(component_leq(span("[[1,0],[0,1],[0,0]]"), c12));
  CHECK_THROWS_AS(component_of(SatakePoint::from(SymMatrix::identity(3))), Error);
}

TEST_CASE("component order is containment") {
  CHECK(component_leq(span("[[1],[0],[0]]"), span("[[1,0],[0,1],[0,0]]")));
  CHECK_FALSE(component_leq(span("[[1],[1],[0]]"), span("[[1,0],[0,0],[0,1]]")));
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const auto v = BoundaryComponent::from_span(Matrix::from_columns({random_rational_vector(4, rng), random_rational_vector(4, rng)}));
    CHECK(component_leq(v, v));
  }
}

TEST_CASE("congruence moves column spaces by g^T") {
  Rng rng(6);
  for (int t = 0; t < 30; ++t) {
    const Isometry g = random_rational_isometry(3, rng);
    const SymMatrix a = SymMatrix::outer(random_rational_vector(3, rng)) + SymMatrix::outer(random_rational_vector(3, rng));
    if (rank(a) == 3) continue;
    const auto img = component_of(SatakePoint::from(act(g, a)));
    const auto moved = transform(g, component_of(SatakePoint::from(a)));
    CHECK(component_leq(img, moved));
    CHECK(component_leq(moved, img));
  }
}

TEST_CASE("projection onto a component") {
  const auto v = span("[[1,0],[0,1],[0,0]]");
  CHECK(project(v, SymMatrix::identity(3)).to_eigen().isApprox(Eigen::MatrixXd::Identity(2, 2), 1e-12));
  const SymMatrix block = sym("[[2,1,0],[1,2,0],[0,0,5]]");
  const Eigen::MatrixXd expect = sym("[[2,1],[1,2]]").to_eigen() / std::sqrt(3.0);
  CHECK(project(v, block).to_eigen().isApprox(expect, 1e-12));
  CHECK_THROWS_AS(project(v, SymMatrix::diagonal({0, 0, 1})), Error);

  Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    const SpacePoint y = random_float_point(3, rng);
    const auto w = BoundaryComponent::from_span(Matrix::from_columns({random_rational_vector(3, rng), random_rational_vector(3, rng)}));
    const SymMatrix p1 = project(w, y.matrix());
    CHECK(std::abs(determinant(p1).to_double() - 1) <= 1e-12);
    // A rotated frame gives a conjugate: same trace and determinant.
    const SymMatrix p2 = project(w.with_rotated_frame(random_orthogonal(2, rng)), y.matrix());
    CHECK(std::abs(trace(p1).to_double() - trace(p2).to_double()) <= 1e-12 * trace(p1).to_double());
    CHECK(std::abs(determinant(p2).to_double() - 1) <= 1e-12);
  }
}

TEST_CASE("components serialize as spans") {
  const auto v = span(R"([["1/2",0],[1,1],[0,3]])");
  const auto w = BoundaryComponent::from_json(v.to_json());
  CHECK(w.has_exact_basis());
  CHECK(component_leq(v, w));
  CHECK(component_leq(w, v));
}
