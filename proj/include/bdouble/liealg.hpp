#pragma once

// Finite-dimensional Lie algebras over Q given by a structure-constant table,
// and the generic queries the verification suites need.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bdouble/exactlinalg.hpp"

namespace bdouble {

// Sorted (basis index, coefficient) pairs without zeros.
using Terms = std::vector<std::pair<std::size_t, Scalar>>;

Terms to_terms(const Vector& v);
Vector to_dense(const Terms& t, std::size_t dim);

class LieAlgebra {
 public:
  LieAlgebra(std::string name, std::vector<std::string> labels);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Sets [b_i, b_j] = value and [b_j, b_i] = -value. i == j requires value == 0.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);
  const Terms& bracket_terms(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  void set_subspace(const std::string& name, std::vector<std::size_t> indices);
  bool has_subspace(const std::string& name) const { return subspaces_.count(name) > 0; }
  const std::vector<std::size_t>& subspace(const std::string& name) const;
  const std::map<std::string, std::vector<std::size_t>>& subspaces() const { return subspaces_; }
  std::vector<Vector> subspace_vectors(const std::string& name) const;

  Vector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Terms> table_;
  std::map<std::string, std::vector<std::size_t>> subspaces_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

Vector bracket_of(const LieAlgebra& g, const Vector& x, const Vector& y);
// Matrix of ad x, column j = [x, b_j].
Matrix ad_matrix(const LieAlgebra& g, const Vector& x);

struct JacobiWitness {
  std::size_t i, j, k;
  Vector cyclic_sum;
};
// Exhaustive over basis triples i < j < k; reports the first violation.
// nullopt means the identity holds.
std::optional<JacobiWitness> check_jacobi(const LieAlgebra& g);
bool is_antisymmetric(const LieAlgebra& g);

std::vector<Vector> center(const LieAlgebra& g);
std::vector<Vector> derived_subalgebra(const LieAlgebra& g);
// Span of [a, b] over a in `left`, b in `right`.
std::vector<Vector> bracket_span(const LieAlgebra& g, const std::vector<Vector>& left,
                                 const std::vector<Vector>& right);
std::vector<Vector> normalizer(const LieAlgebra& g, const std::vector<Vector>& subspace);
bool is_subalgebra(const LieAlgebra& g, const std::vector<Vector>& subspace);
bool is_ideal(const LieAlgebra& g, const std::vector<Vector>& subspace);
bool is_abelian(const LieAlgebra& g, const std::vector<Vector>& subspace);

struct WeightSpace {
  Vector weight;  // eigenvalue of each abelian basis vector
  std::vector<Vector> basis;
};

struct WeightDecomposition {
  std::vector<Vector> abelian;
  std::vector<WeightSpace> spaces;  // nonzero weights, sorted by weight
  std::vector<Vector> zero_space;

  std::vector<Vector> weights() const;
};

// Simultaneous eigenspaces of ad(c) for c in an abelian subspace acting
// diagonalizably over Q. Throws InputError for a non-abelian c or an action
// that is not diagonalizable over Q.
WeightDecomposition weight_decomposition(const LieAlgebra& g, const std::vector<Vector>& abelian);

bool is_ad_nilpotent(const LieAlgebra& g, const Vector& x);

struct GeneratedElement {
  Vector vector;
  // Seed number for seeds; otherwise positions (in `elements`) of the two
  // earlier elements whose bracket produced this one.
  std::optional<std::size_t> seed;
  std::size_t left = 0, right = 0;
};

struct GeneratedSubalgebra {
  std::vector<GeneratedElement> elements;  // an independent family
  std::vector<Vector> basis() const;
};

GeneratedSubalgebra generated_subalgebra(const LieAlgebra& g, const std::vector<Vector>& seeds);

struct DerivationOptions {
  std::size_t max_dim = 24;
};

// Basis of Der(g) as dim x dim matrices (column j = D(b_j)). Solves the
// Leibniz system row by row. Throws CapExceeded when dim > options.max_dim.
std::vector<Matrix> derivations(const LieAlgebra& g, DerivationOptions options = {});
bool is_derivation(const LieAlgebra& g, const Matrix& d);

// ---------------------------------------------------------------------------
// Maps

struct AlgebraMap {
  AlgebraPtr source;
  AlgebraPtr target;
  Matrix matrix;  // target.dim x source.dim
  bool verified_homomorphism = false;
  bool verified_bijective = false;

  Vector apply(const Vector& v) const { return matrix.apply(v); }
};

AlgebraMap make_map(AlgebraPtr source, AlgebraPtr target, Matrix matrix);
// Both flags set; nothing to check.
AlgebraMap identity_map(const AlgebraPtr& g);
// outer o inner. Flags are not carried over.
AlgebraMap compose(const AlgebraMap& outer, const AlgebraMap& inner);

// First basis pair (i, j) with m([b_i, b_j]) != [m b_i, m b_j].
std::optional<std::pair<std::size_t, std::size_t>> homomorphism_defect(const AlgebraMap& m);
// Full-basis check; sets both flags and returns verified_homomorphism.
bool check_homomorphism(AlgebraMap& m);
// Both flags set after check_homomorphism.
bool is_verified_automorphism(const AlgebraMap& m);

// exp(ad x) for ad-nilpotent x, as a verified automorphism. Throws InputError
// when x is not ad-nilpotent.
AlgebraMap exp_ad(const AlgebraPtr& g, const Vector& x);

struct Quotient {
  AlgebraPtr algebra;
  std::vector<std::size_t> kept;  // basis indices of the parent forming the complement
  Matrix projection;              // quotient.dim x parent.dim
};

// g / ideal, with the quotient basis taken from parent basis vectors (greedy
// complement of the ideal, in index order). Throws InputError when `ideal`
// is not an ideal.
Quotient quotient(const LieAlgebra& g, const std::vector<Vector>& ideal, const std::string& name);

// Relabels basis vector i as perm[i]; used to test basis-order independence.
LieAlgebra permute_basis(const LieAlgebra& g, const std::vector<std::size_t>& perm);

}  // namespace bdouble
