#include "doctest.h"
#include "oracles.hpp"

using namespace bdouble;

namespace {

const std::vector<std::string> kTypes = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4",
                                         "D4", "D5", "G2", "F4", "E6", "E7", "E8"};

std::set<IntVector> library_roots(const RootSystem& rs) {
  std::set<IntVector> out;
  for (const auto& a : rs.positive_roots()) {
    out.insert(a.coords);
    out.insert((-a).coords);
  }
  return out;
}

}  // namespace

TEST_CASE("parse_simple_type") {
  CHECK(parse_simple_type("a2").name() == "A2");
  CHECK(parse_simple_type("E6").name() == "E6");
  for (auto bad : {"Z9", "E9", "A0", "F5", "G3", "B1", "", "A", "A2x", "H3"})
    CHECK_THROWS_AS(parse_simple_type(bad), InputError);
}

TEST_CASE("Cartan matrices match Euclidean realizations") {
  for (const auto& t : kTypes) {
    CAPTURE(t);
    auto st = parse_simple_type(t);
    char family = t[0];
    if (family == 'E') {
      CHECK(cartan_matrix(st) == oracle::e_cartan(st.rank));
    } else {
      CHECK(cartan_matrix(st) == oracle::cartan_from_vectors(oracle::euclidean_simple_roots(family, st.rank)));
    }
  }
  // G2: alpha_1 short, highest root 3 alpha_1 + 2 alpha_2.
  CHECK(cartan_matrix(parse_simple_type("G2")) == IntMatrix{{2, -3}, {-1, 2}});
}

TEST_CASE("roots equal the Weyl orbit of the simple roots") {
  for (const auto& t : kTypes) {
    CAPTURE(t);
    auto rs = generate_roots(parse_simple_type(t));
    auto orbit = oracle::weyl_orbit_roots(rs.cartan());
    CHECK(library_roots(rs) == orbit);
    CHECK(rs.positive_roots().size() * 2 == orbit.size());
  }
}

TEST_CASE("A2 and G2 positive roots") {
  // Oracle: the positive part of the Weyl orbit, as a set.
  for (auto t : {"A2", "G2"}) {
    auto rs = generate_roots(parse_simple_type(t));
    auto expected = oracle::positive_part(oracle::weyl_orbit_roots(rs.cartan()));
    std::vector<IntVector> got;
    for (const auto& a : rs.positive_roots()) got.push_back(a.coords);
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
  auto g2 = generate_roots(parse_simple_type("G2"));
  CHECK(g2.positive_roots().size() == 6);
  CHECK(g2.highest_root().coords == IntVector{3, 2});
  auto a2 = generate_roots(parse_simple_type("A2"));
  CHECK(a2.highest_root().coords == IntVector{1, 1});
}

TEST_CASE("positive roots are sorted by height") {
  auto rs = generate_roots(parse_simple_type("F4"));
  const auto& pos = rs.positive_roots();
  for (std::size_t i = 1; i < pos.size(); ++i) CHECK(pos[i - 1].height() <= pos[i].height());
  CHECK(rs.positive_index(pos[5]) == 5);
  CHECK(rs.positive_index(-pos[5]) == -1);
  CHECK(rs.is_root(-pos[5]));
  CHECK_FALSE(rs.is_root(Root{IntVector{0, 0, 0, 0}}));
}

TEST_CASE("highest root and marks") {
  for (const auto& t : kTypes) {
    CAPTURE(t);
    auto rs = generate_roots(parse_simple_type(t));
    auto orbit = oracle::positive_part(oracle::weyl_orbit_roots(rs.cartan()));
    auto height = [](const IntVector& v) { return std::accumulate(v.begin(), v.end(), 0); };
    IntVector top = *std::max_element(orbit.begin(), orbit.end(),
                                      [&](const IntVector& a, const IntVector& b) { return height(a) < height(b); });
    CHECK(rs.highest_root().coords == top);
    IntVector marks = {1};
    marks.insert(marks.end(), top.begin(), top.end());
    CHECK(rs.marks() == marks);
    CHECK(lowest_root(rs) == -rs.highest_root());
  }
}

TEST_CASE("extended Cartan matrix from a Euclidean realization") {
  for (const auto& t : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "D5", "G2", "F4"}) {
    CAPTURE(t);
    std::string name = t;
    auto st = parse_simple_type(name);
    auto rs = generate_roots(st);
    auto simple = oracle::euclidean_simple_roots(name[0], st.rank);
    std::vector<Scalar> theta(simple[0].size(), Scalar(0));
    for (std::size_t i = 0; i < simple.size(); ++i)
      for (std::size_t k = 0; k < theta.size(); ++k) theta[k] += rs.highest_root().coords[i] * simple[i][k];
    for (auto& x : theta) x = -x;
    std::vector<std::vector<Scalar>> nodes = {theta};
    nodes.insert(nodes.end(), simple.begin(), simple.end());
    CHECK(rs.extended_cartan() == oracle::cartan_from_vectors(nodes));
  }
  // Affine A1 has the doubled edge.
  CHECK(generate_roots(parse_simple_type("A1")).extended_cartan() == IntMatrix{{2, -2}, {-2, 2}});
}

TEST_CASE("pairings and coroots") {
  auto rs = generate_roots(parse_simple_type("B2"));
  // B2: alpha_1 long, alpha_2 short; alpha_1 + 2 alpha_2 is long.
  Root a1{IntVector{1, 0}}, a2{IntVector{0, 1}}, lng{IntVector{1, 2}};
  CHECK(rs.pairing_with_coroot(a1, 1) == -2);
  CHECK(rs.pairing_with_coroot(a2, 0) == -1);
  CHECK(rs.inner(a2, a2) == 2);
  CHECK(rs.inner(a1, a1) == 4);
  CHECK(rs.inner(lng, lng) == 4);
  // (a1 + 2 a2)^vee = a1^vee + a2^vee for the long root.
  CHECK(rs.coroot_coords(lng) == IntVector{1, 1});
  CHECK(rs.node_root(0) == -lng);
  CHECK(rs.node_root(2) == a2);
}
