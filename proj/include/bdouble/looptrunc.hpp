#pragma once

// Degree-truncated loop algebras C[t, 1/t] (x) g, the Borel quotient
// b~ / (t - eps) n~ with its normal form, and lifts of extended-diagram
// automorphisms to the loop algebra.

#include <map>
#include <stdexcept>
#include <utility>

#include "bdouble/diagaut.hpp"

namespace bdouble {

class WindowOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// sum c t^d b_i with lo <= d <= hi; keys (d, i), no zero coefficients.
struct PolyVector {
  int lo = 0, hi = 0;
  std::map<std::pair<int, std::size_t>, Scalar> terms;

  PolyVector() = default;
  PolyVector(int lo, int hi) : lo(lo), hi(hi) {}
  static PolyVector monomial(int lo, int hi, int degree, std::size_t index, Scalar coeff = 1);

  // Throws WindowOverflow for a degree outside [lo, hi].
  void add(int degree, std::size_t index, const Scalar& coeff);
  bool is_zero() const { return terms.empty(); }
  // Multiplication by t^k, window shifted along.
  PolyVector shifted(int k) const;
  PolyVector scaled(const Scalar& s) const;
  friend bool operator==(const PolyVector& a, const PolyVector& b) { return a.terms == b.terms; }
};

// [t^i x, t^j y] = t^(i+j) [x, y], in the window spanned by both inputs.
// Throws WindowOverflow when the result leaves it.
PolyVector poly_bracket(const LieAlgebra& g, const PolyVector& p, const PolyVector& q);

// Coordinates of p over (degree, index) in [lo, hi] x dim, and back.
Vector flatten(const PolyVector& p, int lo, int hi, std::size_t dim);
PolyVector unflatten(const Vector& v, int lo, int hi, std::size_t dim);

struct BorelQuotient {
  Scalar epsilon;
  ChevalleyAlgebra simple;
  AlgebraPtr algebra;
  // (degree, Chevalley index) of each normal basis vector: n and h at
  // degree 0, t h and t n^- at degree 1. Same layout as Ib.
  std::vector<std::pair<int, std::size_t>> normal_basis;

  PolyVector element(std::size_t i) const;
  // Normal form. Throws InputError for terms outside b~.
  Vector reduce(const PolyVector& p) const;
};

// Terms of p a rule applies to, and a single rule application; used to test
// that the normal form does not depend on the order of rewriting.
std::vector<std::pair<int, std::size_t>> reducible_terms(const BorelQuotient& q, const PolyVector& p);
void apply_rule(const BorelQuotient& q, PolyVector& p, std::pair<int, std::size_t> term);

BorelQuotient build_borel_quotient(const ChevalleyAlgebra& g, const Scalar& eps);

// x -> x (x in n), (0, y) -> t y (y in n^-), (a, b) -> (a - eps b) + 2 t b.
AlgebraMap gamma_eps(const DoubleAlgebra& g_eps_plus, const BorelQuotient& q);
// theta on an element of b~ (any degree >= 0), valued in V = b + b^-.
Vector theta_apply(const BorelQuotient& q, const PolyVector& p);
AlgebraMap theta_retraction(const BorelQuotient& q, const DoubleAlgebra& g_eps_plus);

struct LoopLift {
  ChevalleyAlgebra simple;
  DiagramAutomorphism diagram;
  int source_window = 0;  // domain degrees in [-N, N]
  int image_window = 0;   // images in [-W, W]
  std::size_t domain_dim = 0;
  bool complete = false;  // domain is the whole window
  Matrix matrix;          // flattened image x flattened source

  // Throws WindowOverflow outside the source window, InputError if the
  // domain is incomplete.
  PolyVector apply(const PolyVector& p) const;
};

// e_i, f_i at degree 0 for i >= 1, e_0 = t f_theta, f_0 = t^-1 e_theta,
// mapped to the generators of the permuted nodes and extended along
// left-normed bracket words staying in [-N, N]. Dependent words are checked
// against the images already assigned; a mismatch is a FalsificationError.
LoopLift lift_to_loop(const ChevalleyAlgebra& g, const DiagramAutomorphism& theta, int window = 2);

// lambda with lift(t x) = lambda t lift(x) over all basis vectors of degree
// in [-N, N-1]. Throws FalsificationError if the ratios disagree, if lambda
// is not +-1, or if lambda != 1 for a diagram automorphism of odd order.
Scalar semilinearity_lambda(const LoopLift& lift);

// omega lift omega == lift on the source window, omega(t^i x) = t^-i w(x).
bool omega_compatibility(const LoopLift& lift);

}  // namespace bdouble
