// Invariance properties: basis order, random automorphic images.

#include "doctest.h"
#include "oracles.hpp"

#include "bdouble/autgroup.hpp"

using namespace bdouble;

namespace {

std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("structure invariants do not depend on the basis order") {
  std::mt19937_64 rng(41);
  for (const auto& t : {"A1", "A2", "B2", "G2"}) {
    CAPTURE(t);
    auto ib = build_Ib(build_simple(parse_simple_type(t)));
    const LieAlgebra& alg = *ib.underlying;
    auto z = center(alg).size();
    auto d = derived_subalgebra(alg).size();
    auto der = derivations(alg).size();
    for (int rep = 0; rep < 3; ++rep) {
      LieAlgebra perm = permute_basis(alg, random_permutation(rng, alg.dim()));
      CHECK_FALSE(check_jacobi(perm));
      CHECK(center(perm).size() == z);
      CHECK(derived_subalgebra(perm).size() == d);
      CHECK(derivations(perm).size() == der);
      auto d1 = derived_subalgebra(perm);
      CHECK(bracket_span(perm, d1, d1).size() == bracket_span(alg, derived_subalgebra(alg),
                                                              derived_subalgebra(alg)).size());
    }
  }
}

TEST_CASE("permuting the basis permutes the bracket table") {
  std::mt19937_64 rng(43);
  auto g = build_simple(parse_simple_type("B2"));
  const LieAlgebra& alg = *g.algebra;
  auto p = random_permutation(rng, alg.dim());
  LieAlgebra perm = permute_basis(alg, p);
  Matrix m(alg.dim(), alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) m(p[i], i) = 1;
  auto ptr = std::make_shared<LieAlgebra>(perm);
  auto map = make_map(g.algebra, ptr, m);
  CHECK(check_homomorphism(map));
  CHECK(map.verified_bijective);
}

TEST_CASE("random exp ad of n + t b^- are automorphisms fixing the abelianization") {
  std::mt19937_64 rng(47);
  for (const auto& t : {"A2", "B2", "G2"}) {
    auto ib = build_Ib(build_simple(parse_simple_type(t)));
    for (int rep = 0; rep < 5; ++rep) {
      Vector x = zero_vector(ib.dim());
      for (std::size_t k = 0; k < ib.simple.positive_count(); ++k) x[k] = oracle::random_scalar(rng);
      for (auto i : ib.part_minus) x[i] = oracle::random_scalar(rng);
      auto m = exp_ad(ib.underlying, x);
      CHECK(is_verified_automorphism(m));
      CHECK(abelianization_action(ib, m).is_identity());
      // Automorphisms preserve the center and the derived algebra.
      std::vector<Vector> image;
      for (const auto& z : center(*ib.underlying)) image.push_back(m.apply(z));
      CHECK(same_span(image, center(*ib.underlying), ib.dim()));
    }
  }
}

TEST_CASE("Jacobi survives random changes of basis") {
  std::mt19937_64 rng(53);
  auto g = build_simple(parse_simple_type("A2"));
  auto ib = build_Ib(g);
  const std::size_t n = ib.dim();
  Matrix p = oracle::random_unimodular(rng, n);
  Matrix pinv = *inverse(p);
  // Structure constants in the basis given by the columns of p.
  auto alg = std::make_shared<LieAlgebra>("conj", ib.underlying->labels());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      alg->set_bracket(i, j, pinv.apply(bracket_of(*ib.underlying, p.column(i), p.column(j))));
  CHECK_FALSE(check_jacobi(*alg));
  CHECK(derivations(*alg).size() == 13);
  CHECK(center(*alg).size() == 2);
}
