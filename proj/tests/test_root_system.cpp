#include <doctest.h>

#include <random>

#include "cocyclelab/root_system.hpp"

using namespace cocyclelab;

namespace {

RatVec random_small_vec(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  RatVec v(dim);
  for (auto& x : v) x = Rational(num(rng), den(rng));
  return v;
}

std::vector<SimpleType> all_simple_types_up_to_rank_8() {
  std::vector<SimpleType> types;
  for (int n = 1; n <= 8; ++n) types.emplace_back(Family::A, n);
  for (int n = 1; n <= 8; ++n) types.emplace_back(Family::B, n);
  for (int n = 1; n <= 8; ++n) types.emplace_back(Family::C, n);
  for (int n = 2; n <= 8; ++n) types.emplace_back(Family::D, n);
  for (int n = 6; n <= 8; ++n) types.emplace_back(Family::E, n);
  types.emplace_back(Family::F, 4);
  types.emplace_back(Family::G, 2);
  return types;
}

}  // namespace

TEST_CASE("small systems enumerate to the expected root counts") {
  RootSystem a2 = build_root_system("A2");
  CHECK(a2.rank == 2);
  CHECK(a2.all_roots.size() == 6);
  CHECK(positive_root_count(a2) == 3);

  RootSystem g2 = build_root_system("G2");
  CHECK(g2.rank == 2);
  CHECK(g2.all_roots.size() == 12);
  CHECK(positive_root_count(g2) == 6);

  RootSystem b2 = build_root_system("B2");
  CHECK(positive_root_count(b2) == 4);
}

TEST_CASE("product systems are block-orthogonal") {
  RootSystem rs = build_root_system("A1,A1");
  CHECK(rs.rank == 2);
  CHECK(rs.ambient_dim == 4);
  CHECK(rs.all_roots.size() == 4);
  // roots of distinct factors pair to zero
  for (const auto& a : rs.all_roots)
    for (const auto& b : rs.all_roots) {
      const bool a_first = a[0] != 0 || a[1] != 0;
      const bool b_first = b[0] != 0 || b[1] != 0;
      if (a_first != b_first) CHECK(dot(a, b) == 0);
    }
}

TEST_CASE("root counts match the per-family closed forms up to rank 8") {
  for (const auto& t : all_simple_types_up_to_rank_8()) {
    RootSystem rs = build_root_system({t});
    INFO("type ", t.label());
    CHECK(positive_root_count(rs) == t.positive_root_count());
    CHECK(rs.all_roots.size() == 2 * static_cast<std::size_t>(t.positive_root_count()));
    CHECK(rs.positive_roots.size() * 2 == rs.all_roots.size());
  }
}

TEST_CASE("reflection arithmetic is exact") {
  std::mt19937_64 rng(12345);
  RootSystem rs = build_root_system("B3");
  for (int trial = 0; trial < 50; ++trial) {
    RatVec v = random_small_vec(rng, rs.ambient_dim);
    RatVec w = random_small_vec(rng, rs.ambient_dim);
    for (const auto& alpha : rs.simple_roots) {
      CHECK(reflect(alpha, reflect(alpha, v)) == v);                    // involution
      CHECK(dot(reflect(alpha, v), reflect(alpha, w)) == dot(v, w));    // isometry
    }
  }
  const RatVec& alpha = rs.simple_roots[0];
  CHECK(reflect(alpha, alpha) == negate(alpha));
  RatVec perp{0, 0, 1};  // orthogonal to e1 - e2
  CHECK(reflect(alpha, perp) == perp);
  CHECK_THROWS_AS(reflect(RatVec{0, 0, 0}, perp), ZeroRoot);
}

TEST_CASE("root sets are closed under every simple reflection") {
  for (const char* spec : {"A3", "B3", "C4", "D4", "F4", "G2", "E6", "B2,A2"}) {
    RootSystem rs = build_root_system(spec);
    INFO("type ", spec);
    for (const auto& beta : rs.all_roots)
      for (const auto& alpha : rs.simple_roots) CHECK(rs.is_root(reflect(alpha, beta)));
  }
}

TEST_CASE("type spec parsing") {
  CHECK(format_type_spec(parse_type_spec("b2, a2")) == "B2,A2");
  CHECK(format_type_spec(parse_type_spec("e7")) == "E7");
  CHECK(parse_type_spec("d2").at(0).rank == 2);

  CHECK_THROWS_AS(parse_type_spec("A0"), InvalidType);
  CHECK_THROWS_AS(parse_type_spec("D1"), InvalidType);
  CHECK_THROWS_AS(parse_type_spec("E9"), InvalidType);
  CHECK_THROWS_AS(parse_type_spec("F5"), InvalidType);
  CHECK_THROWS_AS(parse_type_spec("G3"), InvalidType);
  CHECK_THROWS_AS(parse_type_spec("H2"), InvalidType);
  CHECK_THROWS_AS(parse_type_spec(""), InvalidType);
  CHECK_THROWS_AS(parse_type_spec("B2,,A2"), InvalidType);
  CHECK_THROWS_AS(parse_type_spec("Bx"), InvalidType);
}

TEST_CASE("simple roots are linearly independent and carry the full rank") {
  RootSystem rs = build_root_system("B2,A2");
  CHECK(rs.rank == 4);
  CHECK(rs.simple_roots.size() == 4);
  // simple_root_coords of a simple root is a standard basis vector
  for (int i = 0; i < rs.rank; ++i) {
    RatVec c = rs.simple_root_coords(rs.simple_roots[i]);
    for (int j = 0; j < rs.rank; ++j) CHECK(c[j] == Rational(i == j ? 1 : 0));
  }
}
