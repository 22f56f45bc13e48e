#include "doctest.h"
#include "oracles.hpp"

#include "bdouble/diagaut.hpp"

using namespace bdouble;

TEST_CASE("automorphism group orders of extended diagrams") {
  // Reference orders for the extended diagrams.
  const std::vector<std::pair<std::string, std::size_t>> table = {
      {"A1", 2}, {"A2", 6}, {"A3", 8}, {"B3", 2}, {"C2", 2}, {"D4", 24},
      {"D5", 8}, {"G2", 1}, {"F4", 1}, {"E6", 6}};
  for (const auto& [t, order] : table) {
    CAPTURE(t);
    auto rs = generate_roots(parse_simple_type(t));
    auto group = diagram_automorphism_group(rs.extended_cartan());
    CHECK(group.size() == order);
    CHECK(group.size() == oracle::permutation_automorphisms(rs.extended_cartan()));
    CHECK(group.size() == reference_automorphism_count(rs.simple_type()));
    CHECK(is_group(group));
    CHECK(std::is_sorted(group.begin(), group.end()));
  }
}

TEST_CASE("more types against brute force") {
  for (const auto& t : {"A4", "A5", "B2", "B4", "C3", "C4", "D6", "E7"}) {
    CAPTURE(t);
    auto rs = generate_roots(parse_simple_type(t));
    auto group = diagram_automorphism_group(rs.extended_cartan());
    CHECK(group.size() == oracle::permutation_automorphisms(rs.extended_cartan()));
    CHECK(group.size() == reference_automorphism_count(rs.simple_type()));
  }
}

TEST_CASE("permutation arithmetic") {
  DiagramAutomorphism cyc{{1, 2, 0}};
  DiagramAutomorphism swap{{0, 2, 1}};
  CHECK(cyc.order() == 3);
  CHECK(swap.order() == 2);
  CHECK(cyc.compose(cyc.inverse()).is_identity());
  CHECK(cyc.compose(cyc).compose(cyc).is_identity());
  CHECK(cyc.label() == "(0 1 2)");
  CHECK(swap.label() == "(1 2)");
  CHECK(DiagramAutomorphism::identity(3).label() == "id");
  // (compose) applies the inner one first.
  CHECK(swap.compose(cyc).perm == std::vector<std::size_t>{2, 1, 0});
  CHECK_FALSE(is_group({cyc}));
  CHECK(is_group({DiagramAutomorphism::identity(3), cyc, cyc.compose(cyc)}));
  IntMatrix a2 = generate_roots(parse_simple_type("A2")).extended_cartan();
  CHECK(preserves(a2, cyc));
  IntMatrix g2 = generate_roots(parse_simple_type("G2")).extended_cartan();
  CHECK_FALSE(preserves(g2, DiagramAutomorphism{{1, 0, 2}}));
}

TEST_CASE("roots of Ib") {
  for (const auto& t : {"A1", "A2", "B2", "G2", "A3"}) {
    CAPTURE(t);
    auto g = build_simple(parse_simple_type(t));
    auto ib = build_Ib(g);
    auto roots = ib_roots(ib);
    CHECK(roots.roots.size() == 2 * g.positive_count());
    CHECK(roots.t_component_zero);
    REQUIRE(roots.simple.size() == g.rank() + 1);
    for (std::size_t node = 0; node <= g.rank(); ++node)
      CHECK(roots.roots[roots.simple[node]] == g.roots->node_root(node));
    for (std::size_t k = 0; k < roots.roots.size(); ++k) {
      // Each weight vector really has that weight under h.
      const Vector& v = roots.root_vectors[k];
      for (std::size_t i = 0; i < g.rank(); ++i) {
        Vector hv = bracket_of(*ib.underlying, ib.underlying->basis_vector(ib.b_index(g.h(i))), v);
        CHECK(hv == Scalar(g.roots->pairing_with_coroot(roots.roots[k], static_cast<int>(i))) * v);
      }
    }
  }
  auto g = build_simple(parse_simple_type("A2"));
  CHECK_THROWS_AS(ib_roots(build_g_eps_plus(g, 0)), InputError);
}

TEST_CASE("root embedding into the affine roots") {
  auto g = build_simple(parse_simple_type("B2"));
  auto phi = phi_root_embedding(build_Ib(g));
  CHECK(phi.size() == 2 * g.positive_count());
  for (const auto& e : phi) {
    CHECK(e.image.finite == e.root);
    CHECK(e.image.delta == (e.root.is_positive() ? 0 : 1));
    IntVector c = e.image.node_coords(*g.roots);
    // Affine roots of Ib are nonnegative combinations of the node roots.
    CHECK(std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; }));
  }
}

TEST_CASE("extended Cartan matrix recovered from Ib") {
  for (const auto& t : {"A2", "A3", "B2", "B3", "C3", "G2", "D4"}) {
    CAPTURE(t);
    auto g = build_simple(parse_simple_type(t));
    auto rec = recover_extended_cartan(build_Ib(g));
    CHECK(rec.from_strings == g.roots->extended_cartan());
    CHECK(rec.from_ad == g.roots->extended_cartan());
  }
  CHECK_THROWS_AS(recover_extended_cartan(build_Ib(build_simple(parse_simple_type("A1")))), InputError);
}

TEST_CASE("lifts of diagram automorphisms") {
  for (const auto& t : {"A1", "A2", "A3", "B3", "C2", "G2", "D4"}) {
    CAPTURE(t);
    auto g = build_simple(parse_simple_type(t));
    auto ib = build_Ib(g);
    auto group = diagram_automorphism_group(g.roots->extended_cartan());
    std::vector<Matrix> seen;
    for (const auto& th : group) {
      auto lift = lift_diagram_automorphism(ib, th);
      CHECK(is_verified_automorphism(lift));
      // X_alpha -> X_theta(alpha) on every node.
      for (std::size_t node = 0; node < th.size(); ++node)
        CHECK(lift.apply(node_root_vector(ib, node)) == node_root_vector(ib, th.perm[node]));
      CHECK(std::find(seen.begin(), seen.end(), lift.matrix) == seen.end());
      seen.push_back(lift.matrix);
    }
    CHECK(seen.size() == group.size());
  }
}

TEST_CASE("the cycle of extended A2 lifts to an element of order 3") {
  auto g = build_simple(parse_simple_type("A2"));
  auto ib = build_Ib(g);
  auto lift = lift_diagram_automorphism(ib, DiagramAutomorphism{{1, 2, 0}});
  Matrix m2 = lift.matrix * lift.matrix;
  CHECK_FALSE(lift.matrix.is_identity());
  CHECK_FALSE(m2.is_identity());
  CHECK((m2 * lift.matrix).is_identity());
}

TEST_CASE("non-automorphisms are rejected") {
  auto g = build_simple(parse_simple_type("G2"));
  CHECK_THROWS(lift_diagram_automorphism(build_Ib(g), DiagramAutomorphism{{1, 0, 2}}));
}
