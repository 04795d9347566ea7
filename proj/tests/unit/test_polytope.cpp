#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "selberg/error.hpp"
#include "selberg/harness/corpus.hpp"
#include "selberg/polytope/polytope.hpp"

using namespace selberg;
using namespace testing;

namespace {

std::vector<SymMatrix> printed_vertices() { return Corpus61::standard().vertices; }

bool same_vertex_set(const std::vector<SymMatrix>& a, const ProjPolytope& p) {
  if (a.size() != p.vertices().size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const SymMatrix& v) { return p.find_vertex(v) >= 0; });
}

}  // namespace

TEST_CASE("bisector normals") {
  const SpacePoint i3 = SpacePoint::identity(3);
  for (const Isometry& g : {corpus_a(), corpus_b(), corpus_c()}) {
    const SymMatrix gx = act(g, SymMatrix::identity(3));
    const HyperplaneNormal expect = HyperplaneNormal::from(inverse(gx) - SymMatrix::identity(3));
    CHECK(bisector_normal(i3, g) == expect);
    // The half-space contains X.
    CHECK(bisector_halfspace(i3, g).evaluate(SymMatrix::identity(3)).sign() > 0);
    // g.X lies on the far side.
    CHECK(bisector_halfspace(i3, g).evaluate(gx).sign() < 0);
  }
}

TEST_CASE("normal canonical form ignores scale") {
  const SymMatrix a = sym(R"([[1,"1/2",0],["1/2",-1,0],[0,0,0]])");
  CHECK(HyperplaneNormal::from(a) == HyperplaneNormal::from(a * Scalar(6)));
  CHECK(HyperplaneNormal::from(a) == HyperplaneNormal::from(a * Scalar(-1)));
  CHECK(HalfSpace::from_oriented(a).orientation != HalfSpace::from_oriented(a * Scalar(-1)).orientation);
  CHECK_THROWS_AS(HyperplaneNormal::from(SymMatrix(3)), Error);
  CHECK_THROWS_AS(HyperplaneNormal::from(SymMatrix::identity(3)), Error);
  CHECK_NOTHROW(HyperplaneNormal::from(SymMatrix::identity(3), false));
}

TEST_CASE("the bisectors of the pairings pass through five printed vertices each") {
  const SpacePoint i3 = SpacePoint::identity(3);
  const Corpus61 c = Corpus61::standard();
  for (const Isometry& g : {c.a, c.b, c.c, c.a.inverse(), c.b.inverse(), c.c.inverse()}) {
    const HalfSpace h = bisector_halfspace(i3, g);
    int on = 0;
    for (const auto& v : c.vertices) {
      const int s = h.evaluate(v).sign();
      CHECK(s >= 0);
      on += s == 0;
    }
    CHECK(on == 5);
  }
}

TEST_CASE("simplex from the printed vertices") {
  const ProjPolytope p = ProjPolytope::from_vertices(3, printed_vertices());
  CHECK(p.bounded());
  CHECK(p.dim() == 5);
  CHECK(p.facets().size() == 6);
  CHECK(same_vertex_set(printed_vertices(), p));
  const FacePoset poset = face_poset(p);
  CHECK(poset.f_vector() == std::vector<std::size_t>{6, 15, 20, 15, 6});
  CHECK(poset.faces.back().dim == 5);

  // H to V and back.
  const ProjPolytope q = ProjPolytope::from_halfspaces(3, p.halfspaces());
  CHECK(same_vertex_set(printed_vertices(), q));
  const ProjPolytope r = ProjPolytope::from_json(p.to_json());
  CHECK(same_vertex_set(printed_vertices(), r));
}

TEST_CASE("domain of the pairing elements") {
  const SpacePoint i3 = SpacePoint::identity(3);
  const Corpus61 c = Corpus61::standard();
  std::vector<HalfSpace> hs;
  for (const Isometry& g : {c.a, c.b, c.c, c.a.inverse(), c.b.inverse(), c.c.inverse()}) hs.push_back(bisector_halfspace(i3, g));
  const ProjPolytope p = ProjPolytope::from_halfspaces(3, hs);
  CHECK(same_vertex_set(printed_vertices(), p));
  CHECK(p.redundant().empty());
  for (std::size_t i = 0; i < hs.size(); ++i) CHECK(p.incidence(i).size() == 5);

  // A repeated half-space is flagged and does not change the polytope.
  hs.push_back(hs.front());
  const ProjPolytope q = ProjPolytope::from_halfspaces(3, hs);
  CHECK(q.facets().size() == 6);
  CHECK(same_vertex_set(printed_vertices(), q));
}

TEST_CASE("a single half-space is unbounded") {
  const ProjPolytope p = ProjPolytope::from_halfspaces(3, {bisector_halfspace(SpacePoint::identity(3), corpus_a())});
  CHECK_FALSE(p.bounded());
  CHECK(p.dim() == 5);
  std::string why;
  CHECK_FALSE(finite_volume(p, &why));
  CHECK(why.find("unbounded") != std::string::npos);
}

TEST_CASE("Satake faces of the simplex") {
  const ProjPolytope p = ProjPolytope::from_vertices(3, printed_vertices());
  const FacePoset poset = face_poset(p);
  const auto faces = satake_faces(p, poset);
  std::map<std::pair<int, std::size_t>, int> census;
  for (const auto& f : faces) census[{poset.faces[f.face].dim, f.type}]++;
  CHECK(census[{0, 1}] == 6);
  CHECK(census[{1, 2}] == 15);
  CHECK(census[{2, 2}] == 4);
  CHECK(census.size() == 3);

  // Components grow along the face order.
  for (const auto& f : faces) {
    for (const auto& g : faces) {
      const auto& fg = poset.faces[f.face].generators;
      const auto& gg = poset.faces[g.face].generators;
      if (std::includes(gg.begin(), gg.end(), fg.begin(), fg.end())) CHECK(component_leq(f.component, g.component));
    }
  }
}

TEST_CASE("faces through an interior vertex are not Satake faces") {
  std::vector<SymMatrix> pts = {SymMatrix::diagonal({1, 0, 0}), SymMatrix::diagonal({0, 1, 0}),
                                SymMatrix::diagonal({0, 0, 1}), SymMatrix::identity(3),
                                sym("[[1,1,0],[1,1,0],[0,0,0]]"), sym("[[0,0,0],[0,1,1],[0,1,1]]")};
  const ProjPolytope p = ProjPolytope::from_vertices(3, pts);
  const FacePoset poset = face_poset(p);
  const int interior = p.find_vertex(SymMatrix::identity(3));
  for (const auto& f : satake_faces(p, poset)) {
    const auto& g = poset.faces[f.face].generators;
    if (interior >= 0) CHECK(std::find(g.begin(), g.end(), static_cast<std::size_t>(interior)) == g.end());
  }
}

TEST_CASE("finite volume") {
  std::string why;
  CHECK(finite_volume(ProjPolytope::from_vertices(3, printed_vertices()), &why));

  auto bad = printed_vertices();
  bad[0] = sym("[[1,2,0],[2,1,0],[0,0,0]]");
  CHECK_FALSE(finite_volume(ProjPolytope::from_vertices(3, bad), &why));
  CHECK(why.find("semidefinite") != std::string::npos);

  // Congruence preserves finiteness.
  Rng rng(3);
  for (int t = 0; t < 5; ++t) {
    const Isometry g = random_rational_isometry(3, rng);
    std::vector<SymMatrix> moved;
    for (const auto& v : printed_vertices()) moved.push_back(act(g, v));
    CHECK(finite_volume(ProjPolytope::from_vertices(3, moved)));
  }
}

TEST_CASE("vertices need positive trace") {
  CHECK_THROWS_AS(ProjPolytope::from_vertices(3, {SymMatrix::diagonal({-1, 0, 0})}), Error);
}
