#include "selberg/harness/corpus.hpp"

#include "selberg/harness/words.hpp"
#include "selberg/matcore/json_io.hpp"

namespace selberg {

namespace {

Isometry iso(std::initializer_list<std::initializer_list<Scalar>> rows) { return Isometry::from(Matrix(rows)); }

SymMatrix sym(std::initializer_list<std::initializer_list<Scalar>> rows) { return SymMatrix::from_matrix(Matrix(rows)); }

}  // namespace

Corpus61 Corpus61::standard() {
  const Rational h(1, 2);
  const Scalar p = h;
  const Scalar m = Rational(-1, 2);
  Corpus61 c{
      {
          sym({{1, 1, 0}, {1, 1, 0}, {0, 0, 0}}),
          sym({{1, -1, 0}, {-1, 1, 0}, {0, 0, 0}}),
          sym({{1, 0, 1}, {0, 0, 0}, {1, 0, 1}}),
          sym({{1, 0, -1}, {0, 0, 0}, {-1, 0, 1}}),
          sym({{0, 0, 0}, {0, 1, 1}, {0, 1, 1}}),
          sym({{0, 0, 0}, {0, 1, -1}, {0, -1, 1}}),
      },
      iso({{p, p, 0}, {p, m, 1}, {p, m, -1}}),
      iso({{m, 1, p}, {m, -1, p}, {p, 0, p}}),
      iso({{-1, p, m}, {0, p, p}, {1, p, m}}),
      iso({{1, 1, -1}, {0, 0, 1}, {0, -1, 2}}),
      iso({{0, 0, -1}, {-1, 1, -1}, {1, 0, 2}}),
      iso({{0, 0, -1}, {1, 1, 1}, {1, 0, 2}}),
      {"(a b a^-1 b^-1)^2", "(a b a b a)^2", "(a^2 b^-1)^2", "(a b^3)^2"},
      {"[u,v] w^-2", "[u,w]", "[v,w]"},
      {},
      {
          {{"r56", "r12", "r34"}, {"a", "b", "c"}},
          {{"r14", "r36", "r25"}, {"a^-1", "b^-1", "c^-1"}},
          {{"r26", "r16", "r13"}, {"a", "a", "b^-1"}},
          {{"r24", "r23", "r35"}, {"b", "b", "c^-1"}},
          {{"r46", "r45", "r15"}, {"c", "c", "a^-1"}},
      },
  };
  c.pairings = {{"a", c.a, 6, 1}, {"b", c.b, 2, 3}, {"c", c.c, 4, 5}};
  return c;
}

std::map<std::string, Isometry> Corpus61::alphabet() const {
  return {{"a", a}, {"b", b}, {"c", c}, {"u", u}, {"v", v}, {"w", w}};
}

std::vector<IsometryWord> Corpus61::relator_words() const {
  const auto alpha = alphabet();
  std::vector<IsometryWord> out;
  for (const auto& r : presentation_relators) out.push_back(parse_word(r, alpha));
  for (const auto& r : parabolic_relators) out.push_back(parse_word(r, alpha));
  return out;
}

GeneratorSet Corpus61::generator_set() const {
  return GeneratorSet::closed(SpacePoint::identity(3), {a, b, c}, {"a", "b", "c"});
}

nlohmann::json Corpus61::to_json() const {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& x : vertices) verts.push_back(sym_to_json(x));
  nlohmann::json slots = nlohmann::json::array();
  for (const auto& s : pairings) {
    slots.push_back({{"label", s.label}, {"matrix", matrix_to_json(s.element.matrix())}, {"from", s.from}, {"to", s.to}});
  }
  nlohmann::json cyc = nlohmann::json::array();
  for (const auto& s : cycles) cyc.push_back({{"ridges", s.ridges}, {"letters", s.letters}});
  return {{"vertices", verts},
          {"generators",
           {{"a", matrix_to_json(a.matrix())}, {"b", matrix_to_json(b.matrix())}, {"c", matrix_to_json(c.matrix())}}},
          {"parabolic",
           {{"u", matrix_to_json(u.matrix())}, {"v", matrix_to_json(v.matrix())}, {"w", matrix_to_json(w.matrix())}}},
          {"presentation_relators", presentation_relators},
          {"parabolic_relators", parabolic_relators},
          {"pairings", slots},
          {"cycles", cyc}};
}

std::uint64_t Corpus61::provenance_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_json().dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace selberg
