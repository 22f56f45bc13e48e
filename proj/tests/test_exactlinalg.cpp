#include "doctest.h"
#include "oracles.hpp"

using namespace bdouble;

TEST_CASE("scalars parse and canonicalize") {
  CHECK(parse_scalar("3/5") == make_scalar(3, 5));
  CHECK(parse_scalar("-2") == Scalar(-2));
  CHECK(parse_scalar(" 6/4 ") == make_scalar(3, 2));
  CHECK(parse_scalar("+1/2") == make_scalar(1, 2));
  CHECK(to_string(make_scalar(6, -4)) == "-3/2");
  CHECK(to_string(parse_scalar("0/7")) == "0");
  CHECK_THROWS_AS(parse_scalar("1/0"), InputError);
  CHECK_THROWS_AS(parse_scalar("x"), InputError);
  CHECK_THROWS_AS(parse_scalar("1/-2"), InputError);
  CHECK_THROWS_AS(parse_scalar(""), InputError);
  CHECK_THROWS_AS(make_scalar(1, 0), InputError);
}

TEST_CASE("determinant agrees with the permutation expansion") {
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int rep = 0; rep < 6; ++rep) {
      Matrix m = oracle::random_matrix(rng, n, n);
      m(0, 0) += oracle::random_scalar(rng);
      CHECK(determinant(m) == oracle::leibniz_determinant(m));
    }
}

TEST_CASE("rank of matrices with a known rank") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 30; ++rep) {
    std::uniform_int_distribution<std::size_t> size(1, 7);
    std::size_t rows = size(rng), cols = size(rng);
    std::size_t k = std::uniform_int_distribution<std::size_t>(0, std::min(rows, cols))(rng);
    Matrix d(rows, cols);
    for (std::size_t i = 0; i < k; ++i) d(i, i) = oracle::random_scalar(rng) + 7;  // never zero
    Matrix m = oracle::random_unimodular(rng, rows) * d * oracle::random_unimodular(rng, cols);
    CAPTURE(rows);
    CAPTURE(cols);
    CHECK(rank(m) == k);
    auto ker = kernel_basis(m);
    CHECK(ker.size() == cols - k);
    for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
    CHECK(span_dimension(ker, cols) == ker.size());
  }
}

TEST_CASE("inverse and solve") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 6; ++n) {
    Matrix u = oracle::random_unimodular(rng, n);
    Matrix d = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = make_scalar(static_cast<long>(i) + 2, 3);
    Matrix m = u * d;
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK((m * *inv).is_identity());
    CHECK((*inv * m).is_identity());

    Vector x(n);
    for (auto& v : x) v = oracle::random_scalar(rng);
    auto sol = solve_system(m, m.apply(x));
    REQUIRE(sol);
    CHECK(*sol == x);
  }
  Matrix singular = Matrix::from_rows({{1, 2}, {2, 4}}, 2);
  CHECK_FALSE(inverse(singular));
  CHECK(determinant(singular) == 0);
  CHECK_FALSE(solve_system(singular, Vector{1, 0}));
  CHECK(solve_system(singular, Vector{1, 2}));
  CHECK_THROWS_AS(solve_system(singular, Vector{1}), InputError);
}

TEST_CASE("spans") {
  std::vector<Vector> a = {{1, 0, 1}, {0, 1, 1}};
  std::vector<Vector> b = {{1, 1, 2}, {1, -1, 0}};
  CHECK(same_span(a, b, 3));
  CHECK(in_span(a, Vector{2, 3, 5}));
  CHECK_FALSE(in_span(a, Vector{0, 0, 1}));
  auto c = coordinates_in(a, Vector{2, 3, 5});
  REQUIRE(c);
  CHECK(*c == Vector{2, 3});
  auto ann = annihilator(a, 3);
  REQUIRE(ann.size() == 1);
  CHECK(ann[0][0] + ann[0][2] == 0);
  CHECK(ann[0][1] + ann[0][2] == 0);
  CHECK(span_basis({}, 3).empty());
}

TEST_CASE("sparse eliminator reports independence") {
  SparseEliminator e(3);
  CHECK(e.add_row(Vector{1, 2, 3}));
  CHECK(e.add_row(Vector{0, 1, 1}));
  CHECK_FALSE(e.add_row(Vector{2, 5, 7}));
  CHECK(e.rank() == 2);
  auto ker = e.kernel_basis();
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] + 2 * ker[0][1] + 3 * ker[0][2] == 0);
  CHECK(ker[0][1] + ker[0][2] == 0);
}

TEST_CASE("rational eigenvalues") {
  std::mt19937_64 rng(5);
  Matrix d = Matrix::identity(4);
  d(0, 0) = -2;
  d(1, 1) = make_scalar(1, 3);
  d(2, 2) = -2;
  d(3, 3) = 5;
  Matrix p = oracle::random_unimodular(rng, 4);
  Matrix m = p * d * *inverse(p);
  CHECK(rational_eigenvalues(m) == std::vector<Scalar>{-2, make_scalar(1, 3), 5});

  Matrix jordan = Matrix::from_rows({{1, 1}, {0, 1}}, 2);
  CHECK_THROWS_AS(rational_eigenvalues(jordan), InputError);
  Matrix irrational = Matrix::from_rows({{0, 2}, {1, 0}}, 2);
  CHECK_THROWS_AS(rational_eigenvalues(irrational), InputError);
}
