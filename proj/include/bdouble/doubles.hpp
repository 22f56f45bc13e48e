#pragma once

// The contraction family g^eps_+ on V = b + b^-, its little sibling g^eps on
// b + n^-, the double Ib = b + t b^- and its quotient Ib/t h.
//
// Layout on b + b^- (g^eps_+, Ib): e_k at k, h_i at P + i, then the second
// summand: h'_i at P + r + i, f_k at P + 2r + k (Chevalley index + r).
// Layout on b + n^- (g^eps, Ib_bar): the Chevalley layout itself, f_k in the
// second summand.

#include <string>

#include "bdouble/chevalley.hpp"

namespace bdouble {

enum class DoubleKind { GEpsPlus, GEps, Ib, IbBar };

std::string kind_name(DoubleKind kind);

struct DoubleAlgebra {
  AlgebraPtr underlying;
  DoubleKind kind;
  Scalar epsilon;  // 0 for Ib and Ib_bar
  std::vector<std::size_t> part_b;
  std::vector<std::size_t> part_minus;
  ChevalleyAlgebra simple;

  bool full_minus() const { return kind == DoubleKind::GEpsPlus || kind == DoubleKind::Ib; }
  // Index of the first-summand copy of a Chevalley basis vector of b.
  std::size_t b_index(std::size_t chevalley) const { return chevalley; }
  // Index of the second-summand copy of a Chevalley basis vector of b^-
  // (n^- for the b + n^- layout).
  std::size_t minus_index(std::size_t chevalley) const;
  std::size_t dim() const { return underlying->dim(); }
};

// Subspaces named on every double: n, h, b, minus_n, minus; plus minus_h on
// the b + b^- layout. Ib additionally gets "c" = h + t h.
DoubleAlgebra build_g_eps_plus(const ChevalleyAlgebra& g, const Scalar& eps);
DoubleAlgebra build_g_eps(const ChevalleyAlgebra& g, const Scalar& eps);
DoubleAlgebra build_Ib(const ChevalleyAlgebra& g);
// Ib / t h, basis e_k, h_i, t f_k in the b + n^- layout.
DoubleAlgebra build_Ib_bar(const ChevalleyAlgebra& g);

// phi_eps(x, y) = (x, eps y) on b + b^-. Throws InputError for eps = 0.
Matrix phi_eps(const ChevalleyAlgebra& g, const Scalar& eps);
// [X, Y]_eps == phi^-1 [phi X, phi Y]_1 on all basis pairs.
bool phi_eps_check(const ChevalleyAlgebra& g, const Scalar& eps);

struct IotaEmbeddings {
  AlgebraMap iota_g;  // g -> g^1_+
  AlgebraMap iota_h;  // h (abelian) -> g^1_+
  bool image_g_is_ideal = false;
  bool image_h_is_center = false;
  bool direct_sum = false;  // images span with zero intersection
};

IotaEmbeddings iota_embeddings(const ChevalleyAlgebra& g);

// eta: g^0_+ -> Ib, (x, h, y) -> (x, kappa(2h + y, .)) with the functional
// on b pulled back to b^- through the Killing form. Verified isomorphism.
AlgebraMap eta_iso(const ChevalleyAlgebra& g);

// g^eps -> g, (x, y) -> x + eps y for eps != 0; for eps = 0 the
// identity-shaped map g^0 -> Ib_bar. Verified isomorphism.
AlgebraMap g_eps_isomorphism(const ChevalleyAlgebra& g, const Scalar& eps);

}  // namespace bdouble
