#include <cmath>
#include <sstream>

#include "helpers.hpp"
#include "selberg/error.hpp"
#include "selberg/harness/corpus.hpp"
#include "selberg/harness/interlacing.hpp"
#include "selberg/harness/proptest.hpp"
#include "selberg/harness/slice.hpp"
#include "selberg/harness/verify.hpp"
#include "selberg/harness/words.hpp"

using namespace selberg;
using namespace testing;

namespace {

const VerifyReport& standard_report() {
  static const VerifyReport r = verify_example();
  return r;
}

struct Row {
  double s, t, v;
};

std::vector<Row> parse_csv(const std::string& csv, std::string* levels = nullptr) {
  std::istringstream in(csv);
  std::string line;
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    if (line.rfind("# levels:", 0) == 0) {
      if (levels) *levels = line;
      continue;
    }
    if (line == "s,t,value") continue;
    Row r{};
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &r.s, &r.t, &r.v) == 3);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

TEST_CASE("word parsing") {
  const Corpus61 c = Corpus61::standard();
  const auto abc = c.alphabet();
  CHECK(parse_word("a^3", abc).product() == c.a * c.a * c.a);
  CHECK(parse_word("a^{-2}", abc).product() == c.a.inverse() * c.a.inverse());
  CHECK(parse_word("[a,b]", abc).product() == c.a * c.b * c.a.inverse() * c.b.inverse());
  CHECK(parse_word("a*b c", abc).length() == 3);
  CHECK(parse_word("(a b)^-1", abc).product() == (c.a * c.b).inverse());
  for (const char* bad : {"(a b", "a^", "x", "[a,b", "a)"}) CHECK_THROWS_AS(parse_word(bad, abc), Error);
}

TEST_CASE("relators of both presentations") {
  const Corpus61 c = Corpus61::standard();
  CHECK(c.relator_words().size() == 7);
  for (const auto& w : c.relator_words()) CHECK(relator_check(w));
  CHECK_FALSE(relator_check(parse_word("a", c.alphabet())));
  CHECK_FALSE(relator_check(parse_word("a b a^-1 b^-1", c.alphabet())));
  CHECK(relator_check(IsometryWord()));
}

TEST_CASE("determinants and unipotence") {
  const Corpus61 c = Corpus61::standard();
  for (const Isometry& g : {c.a, c.b, c.c, c.u, c.v, c.w}) CHECK(determinant(g.matrix()).exact() == 1);
  for (const Isometry& g : {c.u, c.v, c.w}) CHECK(is_unipotent(g));
  CHECK_FALSE(is_unipotent(c.a));
  CHECK(is_unipotent(Isometry::identity(3)));
}

TEST_CASE("corpus provenance") {
  CHECK(Corpus61::standard().provenance_hash() == kCorpusHash);
  Corpus61 c = Corpus61::standard();
  c.vertices[0] = c.vertices[0] * Scalar(2);
  CHECK(c.provenance_hash() != kCorpusHash);
}

TEST_CASE("interlacing examples") {
  const InterlacingResult r = interlacing_check({2, 1, 0}, {1.5, 0.5}, 1);
  CHECK(r.holds);
  CHECK(r.lhs == doctest::Approx(2));
  CHECK(r.rhs == doctest::Approx(0.5));
  const InterlacingResult eq = interlacing_check({1, 0, -1}, {1, -1}, 1);
  CHECK(eq.holds);
  CHECK(eq.lhs == doctest::Approx(2));
  CHECK(eq.rhs == doctest::Approx(2));
  CHECK(interlacing_check({4, 3, 1, 0}, {3.5, 0.5}, 2).holds);

  CHECK_THROWS_AS(interlacing_check({2, 1, 0}, {1.5, 0.5, 0}, 0), Error);
  CHECK_THROWS_AS(interlacing_check({2, 1, 0}, {1.5}, 1), Error);
  CHECK_THROWS_AS(interlacing_check({2, 1, 0}, {0.5, 1.5}, 1), Error);
  CHECK_THROWS_AS(interlacing_check({2, 1, 0}, {2.5, 0.5}, 1), Error);
  CHECK_THROWS_AS(interlacing_check({0, 1, 2}, {1.5, 0.5}, 1), Error);
}

TEST_CASE("interlacing oracle") {
  CHECK(interlacing_oracle({1, 0, -1}, 1) == doctest::Approx(2));
  // Corners (3,1,0) and (3,2,0) both give 14/3.
  CHECK(interlacing_oracle({3, 2, 1, 0}, 1) == doctest::Approx(14.0 / 3));
  CHECK(interlacing_oracle({3, 2, 1, 0}, 1) <= centered_square_sum({3, 2, 1, 0}));
  CHECK(interlacing_oracle({5, 3, 2, 0}, 2) <= centered_square_sum({5, 3, 2, 0}));
  CHECK_THROWS_AS(interlacing_oracle(std::vector<double>(13, 1.0), 1), Error);
  CHECK_THROWS_AS(interlacing_oracle({3, 2, 1}, 3), Error);
}

TEST_CASE("slice of the type-0 function") {
  const BusemannSpec spec = BusemannSpec::type0(SatakePoint::from(SymMatrix::diagonal({1, 0, 0})), SpacePoint::identity(3));
  SliceGrid grid;
  grid.s_steps = 7;
  grid.t_steps = 5;
  std::string levels;
  const auto rows = parse_csv(emit_slice(spec, {0.5, 1, 2}, grid), &levels);
  CHECK(levels.find("0.5") != std::string::npos);
  CHECK(rows.size() == 35);
  CHECK(rows.front().s == doctest::Approx(-3));
  CHECK(rows.front().t == doctest::Approx(-3));
  CHECK(rows[1].t == doctest::Approx(-1.5));
  for (const auto& r : rows) CHECK(r.v == doctest::Approx(std::exp(-r.s)).epsilon(1e-12));
  CHECK(busemann(spec, slice_point(0, 0)) == doctest::Approx(1));
  // Toward e1 e1^T the value tends to 0.
  double prev = busemann(spec, slice_point(0, 0));
  for (double s : {2.0, 5.0, 8.0, 12.0}) {
    const double v = busemann(spec, slice_point(s, 0));
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev < 1e-5);

  CHECK_THROWS_AS(emit_slice(spec, {0}, grid), Error);
  grid.s_steps = 1;
  CHECK_THROWS_AS(emit_slice(spec, {1}, grid), Error);
}

TEST_CASE("slice of a type-1 function") {
  const auto pi = BoundaryComponent::from_span(mat("[[1,0],[0,1],[0,0]]"));
  const BusemannSpec spec = BusemannSpec::type_k(SatakePoint::from(SymMatrix::diagonal({1, 0, 0})), pi, SpacePoint::identity(3));
  for (auto [s, t] : {std::pair{0.0, 0.0}, {1.0, 0.0}, {-0.5, 2.0}, {2.5, -1.5}, {-3.0, -3.0}}) {
    CHECK(busemann(spec, slice_point(s, t)) == doctest::Approx(std::exp((t - s) / 2)).epsilon(1e-12));
  }
}

TEST_CASE("verify_example passes on the standard corpus") {
  const VerifyReport& r = standard_report();
  CHECK(r.items.size() == 15);
  for (const auto& item : r.items) {
    INFO(item.name << ": " << item.summary);
    CHECK(item.passed);
  }
  CHECK(r.passed());
  CHECK(r.find("cycles") != nullptr);
  CHECK(r.find("nope") == nullptr);
}

TEST_CASE("negative control: wrong pairing element") {
  Corpus61 c = Corpus61::standard();
  c.pairings[2].element = c.c.inverse();
  const VerifyReport r = verify_example(c);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.find("provenance")->passed);
  CHECK_FALSE(r.find("pairings")->passed);
  CHECK_FALSE(r.find("exactness")->passed);
}

TEST_CASE("negative control: indefinite vertex") {
  Corpus61 c = Corpus61::standard();
  c.vertices[0] = sym("[[1,2,0],[2,1,0],[0,0,0]]");
  const VerifyReport r = verify_example(c);
  CHECK_FALSE(r.passed());
  REQUIRE(r.find("finite_volume") != nullptr);
  CHECK_FALSE(r.find("finite_volume")->passed);
}

TEST_CASE("property sweeps at small trial counts") {
  for (const auto& name : suite_names()) {
    const SuiteReport r = run_suite(name, 200, 11);
    INFO(name << " worst " << r.worst);
    CHECK(r.passed());
    CHECK(r.trials == 200);
    CHECK(r.to_json()["suite"] == name);
  }
  CHECK_THROWS_AS(run_suite("nope", 10, 1), Error);
}
