#include "doctest.h"
#include "oracles.hpp"

#include "bdouble/autgroup.hpp"

using namespace bdouble;

namespace {

DoubleAlgebra ib_of(const std::string& t) { return build_Ib(build_simple(parse_simple_type(t))); }

Matrix u_unit(const DoubleAlgebra& ib, std::size_t i, std::size_t j) {
  Matrix u(ib.dim(), ib.simple.rank());
  u(ib.minus_index(ib.simple.h(j)), i) = 1;
  return u;
}

}  // namespace

TEST_CASE("delta_tau") {
  auto ib = ib_of("A1");
  CHECK(delta_tau(ib, 1).matrix.is_identity());
  auto d2 = delta_tau(ib, 2);
  CHECK(is_verified_automorphism(d2));
  // Basis e, h, th, tf.
  CHECK(d2.apply({1, 0, 0, 0}) == Vector{1, 0, 0, 0});
  CHECK(d2.apply({0, 1, 0, 0}) == Vector{0, 1, 0, 0});
  CHECK(d2.apply({0, 0, 1, 0}) == Vector{0, 0, 2, 0});
  CHECK(d2.apply({0, 0, 0, 1}) == Vector{0, 0, 0, 2});
  auto a2 = ib_of("A2");
  Scalar tau = make_scalar(3, 7);
  CHECK(compose(delta_tau(a2, tau), delta_tau(a2, 1 / tau)).matrix.is_identity());
  CHECK(compose(delta_tau(a2, 2), delta_tau(a2, -3)).matrix == delta_tau(a2, -6).matrix);
  CHECK_THROWS_AS(delta_tau(a2, 0), InputError);
  auto g = build_simple(parse_simple_type("A2"));
  CHECK_THROWS_AS(delta_tau(build_g_eps_plus(g, 1), 2), InputError);
  CHECK(is_verified_automorphism(delta_tau(build_Ib_bar(g), 5)));
}

TEST_CASE("u_bar automorphisms") {
  auto ib = ib_of("A1");
  Matrix zero(ib.dim(), 1);
  CHECK(u_bar_automorphism(ib, zero).matrix.is_identity());
  auto m = u_bar_automorphism(ib, u_unit(ib, 0, 0));
  CHECK(is_verified_automorphism(m));
  CHECK(m.apply({0, 1, 0, 0}) == Vector{0, 1, 1, 0});  // h -> h + th
  CHECK(m.apply({1, 0, 0, 0}) == Vector{1, 0, 0, 0});
  CHECK(m.apply({0, 0, 0, 1}) == Vector{0, 0, 0, 1});

  Matrix bad(ib.dim(), 1);
  bad(0, 0) = 1;  // e is not central
  CHECK_THROWS_AS(u_bar_automorphism(ib, bad), InputError);
  CHECK_THROWS_AS(u_bar_automorphism(ib, Matrix(ib.dim(), 2)), InputError);
}

TEST_CASE("u_bar family of A2 has dimension rank^2 and is additive") {
  auto ib = ib_of("A2");
  std::vector<Vector> shifts;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      auto m = u_bar_automorphism(ib, u_unit(ib, i, j));
      CHECK(is_verified_automorphism(m));
      Matrix diff = m.matrix - Matrix::identity(ib.dim());
      Vector flat;
      for (std::size_t r = 0; r < diff.rows(); ++r)
        for (std::size_t c = 0; c < diff.cols(); ++c) flat.push_back(diff(r, c));
      shifts.push_back(flat);
    }
  CHECK(span_dimension(shifts, ib.dim() * ib.dim()) == 4);

  Matrix u = Scalar(2) * u_unit(ib, 0, 1) + u_unit(ib, 1, 1);
  Matrix v = make_scalar(-1, 3) * u_unit(ib, 1, 0);
  auto uv = compose(u_bar_automorphism(ib, u), u_bar_automorphism(ib, v));
  auto vu = compose(u_bar_automorphism(ib, v), u_bar_automorphism(ib, u));
  CHECK(uv.matrix == u_bar_automorphism(ib, u + v).matrix);
  CHECK(uv.matrix == vu.matrix);
}

TEST_CASE("torus automorphisms") {
  auto ib = ib_of("A1");
  CHECK(torus_automorphism(ib, {1}).matrix.is_identity());
  auto t2 = torus_automorphism(ib, {2});
  CHECK(is_verified_automorphism(t2));
  // e has root alpha, t f has root -alpha; h and t h are fixed.
  CHECK(t2.apply({1, 0, 0, 0}) == Vector{2, 0, 0, 0});
  CHECK(t2.apply({0, 0, 0, 1}) == Vector{0, 0, 0, make_scalar(1, 2)});
  CHECK(t2.apply({0, 1, 1, 0}) == Vector{0, 1, 1, 0});
  // [t2 e, t2 tf] = t2 [e, tf].
  auto b = [&](const Vector& x, const Vector& y) { return bracket_of(*ib.underlying, x, y); };
  CHECK(b(t2.apply({1, 0, 0, 0}), t2.apply({0, 0, 0, 1})) == t2.apply(b({1, 0, 0, 0}, {0, 0, 0, 1})));

  auto g2 = ib_of("G2");
  std::vector<Scalar> w = {3, make_scalar(-1, 2)}, v = {make_scalar(2, 5), 7};
  auto prod = compose(torus_automorphism(g2, w), torus_automorphism(g2, v));
  CHECK(prod.matrix == torus_automorphism(g2, {w[0] * v[0], w[1] * v[1]}).matrix);
  CHECK_THROWS_AS(torus_automorphism(g2, {1, 0}), InputError);
  CHECK_THROWS_AS(torus_automorphism(g2, {1}), InputError);
}

TEST_CASE("derivation algebra decomposes into the three families") {
  // Expected: 1 + dim g + r^2 for Ib and 1 + dim g for Ib_bar, each value
  // also recomputed by the dense Leibniz oracle.
  const std::vector<std::tuple<std::string, std::size_t, std::size_t>> table = {
      {"A1", 5, 4}, {"A2", 13, 9}, {"B2", 15, 11}, {"G2", 19, 15}, {"C3", 31, 22}};
  for (const auto& [t, ib_dim, bar_dim] : table) {
    CAPTURE(t);
    auto g = build_simple(parse_simple_type(t));
    auto ib = build_Ib(g);
    auto bar = build_Ib_bar(g);
    const std::size_t r = g.rank();
    CHECK(ib_dim == 1 + g.dim() + r * r);
    CHECK(bar_dim == 1 + g.dim());

    DerivationOptions opts{32};
    auto rep = der_decomposition_check(ib, opts);
    CHECK(rep.der_dim == ib_dim);
    CHECK(rep.der_dim == oracle::derivation_dimension(*ib.underlying));
    CHECK(rep.d_line == 1);
    CHECK(rep.inner == g.dim());
    CHECK(rep.u_type == r * r);
    CHECK(rep.pass());
    for (std::size_t k = 0; k < rep.families.basis.size(); ++k)
      CHECK(is_derivation(*ib.underlying, rep.families.basis[k]));

    auto rb = der_decomposition_check(bar, opts);
    CHECK(rb.der_dim == bar_dim);
    CHECK(rb.der_dim == oracle::derivation_dimension(*bar.underlying));
    CHECK(rb.u_type == 0);
    CHECK(rb.pass());
  }
}

TEST_CASE("derivation tags") {
  auto rep = der_decomposition_check(ib_of("A1"));
  REQUIRE(rep.families.tags.size() == 5);
  CHECK(rep.families.tags.front() == DerivationTag::DLine);
  CHECK(rep.families.tags.back() == DerivationTag::UType);
  CHECK(tag_name(DerivationTag::Inner) == "inner");
  // The d-line is the derivative of delta_tau at tau = 1.
  Matrix d = delta_tau(ib_of("A1"), 2).matrix - Matrix::identity(4);
  CHECK(rep.families.basis.front() == d);
  CHECK_THROWS_AS(der_decomposition_check(ib_of("D4")), CapExceeded);
}

TEST_CASE("action on Ib / [Ib, Ib]") {
  auto ib = ib_of("A2");
  CHECK(abelianization_action(ib, delta_tau(ib, 2)).is_identity());
  CHECK(abelianization_action(ib, torus_automorphism(ib, {3, 5})).is_identity());
  CHECK(abelianization_action(ib, u_bar_automorphism(ib, u_unit(ib, 0, 1))).is_identity());
  auto lift = lift_diagram_automorphism(ib, DiagramAutomorphism{{1, 2, 0}});
  Matrix p = abelianization_action(ib, lift);
  CHECK_FALSE(p.is_identity());
  CHECK_FALSE((p * p).is_identity());
  CHECK((p * p * p).is_identity());

  auto a1 = ib_of("A1");
  auto e = exp_ad(a1.underlying, a1.underlying->basis_vector(0));
  CHECK(abelianization_action(a1, e).is_identity());
}

TEST_CASE("component separation") {
  for (const auto& t : {"A1", "A2", "B2", "G2"}) {
    CAPTURE(t);
    auto ib = ib_of(t);
    std::vector<AlgebraMap> lifts;
    for (const auto& th : diagram_automorphism_group(ib.simple.roots->extended_cartan()))
      lifts.push_back(lift_diagram_automorphism(ib, th));
    auto rep = component_separation_check(ib, lifts, 5, 99);
    CHECK(rep.samples == 20);
    CHECK(rep.pass());
    CHECK(rep.lifts == lifts.size());
  }
  // Two copies of the same lift are not separated.
  auto ib = ib_of("A2");
  auto lift = lift_diagram_automorphism(ib, DiagramAutomorphism{{1, 2, 0}});
  CHECK_THROWS_AS(component_separation_check(ib, {lift, lift}, 1, 1), FalsificationError);
}
