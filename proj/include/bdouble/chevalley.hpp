#pragma once

// Simple Lie algebras in a Chevalley basis.
//
// Basis order: e_a for the positive roots a (in RootSystem order), then the
// simple coroots h_1..h_r, then f_a in the same root order.

#include <memory>
#include <optional>

#include "bdouble/liealg.hpp"
#include "bdouble/rootsys.hpp"

namespace bdouble {

struct ChevalleyAlgebra {
  std::shared_ptr<const RootSystem> roots;
  AlgebraPtr algebra;

  std::size_t positive_count() const { return roots->positive_roots().size(); }
  std::size_t rank() const { return static_cast<std::size_t>(roots->rank()); }
  std::size_t dim() const { return 2 * positive_count() + rank(); }

  std::size_t e(std::size_t k) const { return k; }
  std::size_t h(std::size_t i) const { return positive_count() + i; }
  std::size_t f(std::size_t k) const { return positive_count() + rank() + k; }

  // e_a for positive a, f_{-a} for negative a. Throws InputError otherwise.
  std::size_t root_vector(const Root& a) const;
  // Root of a basis vector, nullopt for h_i.
  std::optional<Root> root_of(std::size_t index) const;

  // N_{a,b} for roots a, b with [X_a, X_b] = N_{a,b} X_{a+b}; 0 when a + b
  // is not a root.
  int structure_constant(const Root& a, const Root& b) const;
};

// Structure constants from the extraspecial-pair convention (sign + on
// extraspecial pairs), remaining signs from the quadratic relations among
// N's. Throws ConstructionError if the result fails the Jacobi identity.
ChevalleyAlgebra build_simple(const RootSystem& rs);
ChevalleyAlgebra build_simple(const SimpleType& st);

// Names h, n, b, n_minus, b_minus on a Chevalley-ordered basis.
void standard_subalgebras(LieAlgebra& g, std::size_t positive_count, std::size_t rank);

// kappa(b_i, b_j) = tr(ad b_i ad b_j).
Matrix killing_form(const LieAlgebra& g);

// e_a -> -f_a, f_a -> -e_a, h -> -h; verified automorphism.
AlgebraMap cartan_involution(const ChevalleyAlgebra& g);

}  // namespace bdouble
