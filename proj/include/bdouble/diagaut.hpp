#pragma once

// Extended Dynkin diagram automorphisms and their lifts to Ib.

#include <compare>
#include <string>
#include <vector>

#include "bdouble/doubles.hpp"

namespace bdouble {

struct DiagramAutomorphism {
  std::vector<std::size_t> perm;  // node i -> perm[i]; node 0 is the alpha_0 node

  std::size_t size() const { return perm.size(); }
  bool is_identity() const;
  std::size_t order() const;
  // (*this) o inner
  DiagramAutomorphism compose(const DiagramAutomorphism& inner) const;
  DiagramAutomorphism inverse() const;
  // Cycle notation, "id" for the identity.
  std::string label() const;

  static DiagramAutomorphism identity(std::size_t n);
  friend bool operator==(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;
  friend auto operator<=>(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;
};

bool preserves(const IntMatrix& a, const DiagramAutomorphism& theta);

// All node permutations with a[p(i)][p(j)] = a[i][j], sorted. Backtracking in
// an order that places high-degree nodes first.
std::vector<DiagramAutomorphism> diagram_automorphism_group(const IntMatrix& a);
// Closed under composition and inverse, contains the identity.
bool is_group(const std::vector<DiagramAutomorphism>& elements);

// Known |Aut| of the extended diagram of each type, used as a reference
// table by the verification suite.
std::size_t reference_automorphism_count(const SimpleType& st);

struct AffineRoot {
  Root finite;  // restriction to h
  int delta = 0;
  // Coordinates over the extended simple roots (node 0 first).
  IntVector node_coords(const RootSystem& rs) const;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

// Nonzero c-weights of Ib, computed from its weight decomposition.
struct IbRoots {
  std::vector<Root> roots;           // simple-root coordinates of each weight
  std::vector<Vector> root_vectors;  // spanning vector of each (1-dim) weight space
  bool t_component_zero = true;      // every weight vanishes on t h
  std::vector<std::size_t> simple;   // Delta(Ib) as indices into roots, node order
};

// Throws InputError when `ib` is not an Ib double.
IbRoots ib_roots(const DoubleAlgebra& ib);

struct PhiEntry {
  Root root;
  AffineRoot image;
};

// alpha -> alpha for positive alpha, alpha -> delta + alpha for negative.
std::vector<PhiEntry> phi_root_embedding(const DoubleAlgebra& ib);

struct RecoveredCartan {
  IntMatrix from_strings;  // -max{n : beta + n alpha in Phi(Ib)}
  IntMatrix from_ad;       // -max{n : (ad X_alpha)^n X_beta != 0}
};

// Node order matches RootSystem::extended_cartan. Refuses sl2 with InputError,
// where the root-string formula does not apply.
RecoveredCartan recover_extended_cartan(const DoubleAlgebra& ib);

// X_alpha for node alpha: e_{alpha_i} for i >= 1, t f_theta for node 0.
Vector node_root_vector(const DoubleAlgebra& ib, std::size_t node);

// The Gamma element with X_alpha -> X_{theta(alpha)}, theta on h dual to the
// node permutation, extended along bracket words. Throws FalsificationError
// if the extension is not an automorphism.
AlgebraMap lift_diagram_automorphism(const DoubleAlgebra& ib, const DiagramAutomorphism& theta);

}  // namespace bdouble
