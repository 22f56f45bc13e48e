#include "bdouble/autgroup.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace bdouble {

namespace {

void require_borel_double(const DoubleAlgebra& d, const char* what) {
  if (d.kind != DoubleKind::Ib && d.kind != DoubleKind::IbBar)
    throw InputError(std::string(what) + ": expects Ib or Ib_bar, got " + kind_name(d.kind));
}

// (double index, Chevalley index) for every basis vector.
std::vector<std::pair<std::size_t, std::size_t>> chevalley_slots(const DoubleAlgebra& d) {
  const std::size_t p = d.simple.positive_count(), r = d.simple.rank();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t c = 0; c < p + r; ++c) out.emplace_back(d.b_index(c), c);
  for (std::size_t c = d.full_minus() ? p : p + r; c < 2 * p + r; ++c) out.emplace_back(d.minus_index(c), c);
  return out;
}

Scalar power(const Scalar& w, int k) {
  Scalar base = k < 0 ? Scalar(1 / w) : w;
  Scalar out = 1;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
  return out;
}

Vector flatten_matrix(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

AlgebraMap verified(AlgebraMap m, const char* what) {
  if (!check_homomorphism(m) || !m.verified_bijective)
    throw ConstructionError(std::string(what) + ": result is not an automorphism");
  return m;
}

}  // namespace

AlgebraMap delta_tau(const DoubleAlgebra& d, const Scalar& tau) {
  require_borel_double(d, "delta_tau");
  if (tau == 0) throw InputError("delta_tau: tau must be nonzero");
  Matrix m = Matrix::identity(d.dim());
  for (auto i : d.part_minus) m(i, i) = tau;
  return verified(make_map(d.underlying, d.underlying, std::move(m)), "delta_tau");
}

AlgebraMap u_bar_automorphism(const DoubleAlgebra& ib, const Matrix& u) {
  require_borel_double(ib, "u_bar_automorphism");
  const std::size_t n = ib.dim(), r = ib.simple.rank();
  if (u.rows() != n || u.cols() != r) throw InputError("u_bar_automorphism: u must be dim x rank");
  auto z = center(*ib.underlying);
  for (std::size_t i = 0; i < r; ++i)
    if (!in_span(z, u.column(i))) throw InputError("u_bar_automorphism: u is not valued in the center");
  Matrix m = Matrix::identity(n);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t col = ib.b_index(ib.simple.h(i));
    for (std::size_t row = 0; row < n; ++row) m(row, col) += u(row, i);
  }
  return verified(make_map(ib.underlying, ib.underlying, std::move(m)), "u_bar_automorphism");
}

AlgebraMap torus_automorphism(const DoubleAlgebra& d, const std::vector<Scalar>& weights) {
  const std::size_t r = d.simple.rank();
  if (weights.size() != r) throw InputError("torus_automorphism: need one weight per simple root");
  for (const auto& w : weights)
    if (w == 0) throw InputError("torus_automorphism: weights must be nonzero");
  Matrix m = Matrix::identity(d.dim());
  for (auto [idx, c] : chevalley_slots(d)) {
    auto root = d.simple.root_of(c);
    if (!root) continue;
    Scalar s = 1;
    for (std::size_t i = 0; i < r; ++i) s *= power(weights[i], root->coords[i]);
    m(idx, idx) = s;
  }
  return verified(make_map(d.underlying, d.underlying, std::move(m)), "torus_automorphism");
}

std::string tag_name(DerivationTag tag) {
  switch (tag) {
    case DerivationTag::DLine: return "d-line";
    case DerivationTag::Inner: return "inner";
    case DerivationTag::UType: return "u-type";
  }
  return "?";
}

DerivationReport der_decomposition_check(const DoubleAlgebra& d, DerivationOptions options) {
  require_borel_double(d, "der_decomposition_check");
  const LieAlgebra& g = *d.underlying;
  const std::size_t n = g.dim(), r = d.simple.rank();
  auto der = derivations(g, options);

  DerivationReport rep;
  rep.der_dim = der.size();
  rep.expected_dim = 1 + d.simple.dim() + (d.kind == DoubleKind::Ib ? r * r : 0);
  rep.families.algebra = d.underlying;

  SparseEliminator elim(n * n);
  auto add = [&](Matrix m, DerivationTag tag) {
    if (!elim.add_row(flatten_matrix(m))) return false;
    rep.families.basis.push_back(std::move(m));
    rep.families.tags.push_back(tag);
    return true;
  };
  bool independent = true;

  Matrix dline(n, n);
  for (auto i : d.part_minus) dline(i, i) = 1;
  independent = add(dline, DerivationTag::DLine) && independent;
  rep.d_line = 1;

  // ad is injective modulo the center; take ad b_i for a complement of it.
  SparseEliminator center_elim(n);
  for (const auto& z : center(g)) center_elim.add_row(z);
  for (std::size_t i = 0; i < n; ++i) {
    if (!center_elim.add_row(g.basis_vector(i))) continue;
    independent = add(ad_matrix(g, g.basis_vector(i)), DerivationTag::Inner) && independent;
    ++rep.inner;
  }

  if (d.kind == DoubleKind::Ib) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Matrix m(n, n);
        m(d.minus_index(d.simple.h(j)), d.b_index(d.simple.h(i))) = 1;
        independent = add(m, DerivationTag::UType) && independent;
        ++rep.u_type;
      }
  }

  rep.all_derivations = true;
  for (const auto& m : rep.families.basis)
    if (!is_derivation(g, m)) rep.all_derivations = false;
  rep.independent = independent;

  std::vector<Vector> fam, all;
  for (const auto& m : rep.families.basis) fam.push_back(flatten_matrix(m));
  for (const auto& m : der) all.push_back(flatten_matrix(m));
  rep.spans = same_span(fam, all, n * n);

  if (!rep.pass()) {
    std::ostringstream msg;
    msg << "der_decomposition_check(" << g.name() << "): dim Der " << rep.der_dim << ", expected "
        << rep.expected_dim << ", families " << rep.d_line << "+" << rep.inner << "+" << rep.u_type
        << (rep.all_derivations ? "" : ", non-derivation in family")
        << (rep.independent ? "" : ", families dependent") << (rep.spans ? "" : ", families do not span");
    throw FalsificationError(msg.str());
  }
  return rep;
}

Matrix abelianization_action(const DoubleAlgebra& ib, const AlgebraMap& m) {
  require_borel_double(ib, "abelianization_action");
  const LieAlgebra& g = *ib.underlying;
  const std::size_t r = ib.simple.rank();
  std::vector<std::size_t> hs;
  for (std::size_t i = 0; i < r; ++i) hs.push_back(ib.b_index(ib.simple.h(i)));

  // The h_i must be a complement of the derived algebra spanned by the rest.
  std::vector<Vector> rest;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (std::find(hs.begin(), hs.end(), i) == hs.end()) rest.push_back(g.basis_vector(i));
  if (!same_span(rest, derived_subalgebra(g), g.dim()))
    throw ConstructionError("abelianization_action: derived algebra is not spanned by the non-h basis");

  Matrix p(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) p(i, j) = m.matrix(hs[i], hs[j]);
  return p;
}

SeparationReport component_separation_check(const DoubleAlgebra& ib, const std::vector<AlgebraMap>& lifts,
                                            std::size_t per_family, std::uint64_t seed) {
  require_borel_double(ib, "component_separation_check");
  const std::size_t n = ib.dim(), r = ib.simple.rank();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  auto nonzero = [&] {
    long a = 0;
    while (a == 0) a = num(rng);
    long b = den(rng);
    return make_scalar(a, b);
  };
  auto any = [&] {
    long a = num(rng);
    long b = den(rng);
    return make_scalar(a, b);
  };

  SeparationReport rep;
  auto record = [&](const std::string& family, const AlgebraMap& m) {
    ++rep.samples;
    if (is_verified_automorphism(m)) ++rep.verified;
    else rep.failures.push_back(family + ": not a verified automorphism");
    if (abelianization_action(ib, m).is_identity()) ++rep.trivial_on_quotient;
    else rep.failures.push_back(family + ": acts nontrivially on Ib/[Ib,Ib]");
  };

  auto z = center(*ib.underlying);
  std::vector<std::size_t> nil;  // basis of n + t b^- (Ib) or n + t n^- (Ib_bar)
  for (std::size_t k = 0; k < ib.simple.positive_count(); ++k) nil.push_back(ib.b_index(ib.simple.e(k)));
  nil.insert(nil.end(), ib.part_minus.begin(), ib.part_minus.end());

  for (std::size_t s = 0; s < per_family; ++s) {
    record("delta_tau", delta_tau(ib, nonzero()));

    Matrix u(n, r);
    for (std::size_t i = 0; i < r; ++i) {
      Vector col = zero_vector(n);
      for (const auto& v : z) col = col + any() * v;
      u.set_column(i, col);
    }
    record("u_bar", u_bar_automorphism(ib, u));

    Vector x = zero_vector(n);
    for (auto i : nil) x[i] = any();
    record("exp_ad", exp_ad(ib.underlying, x));

    std::vector<Scalar> w;
    for (std::size_t i = 0; i < r; ++i) w.push_back(nonzero());
    record("torus", torus_automorphism(ib, w));
  }

  rep.lifts = lifts.size();
  std::vector<Matrix> images;
  rep.injective_on_gamma = true;
  for (const auto& l : lifts) {
    if (!is_verified_automorphism(l)) rep.failures.push_back("lift: not a verified automorphism");
    Matrix p = abelianization_action(ib, l);
    if (std::find(images.begin(), images.end(), p) != images.end()) rep.injective_on_gamma = false;
    images.push_back(std::move(p));
  }
  if (!rep.injective_on_gamma) rep.failures.push_back("p is not injective on the lifts");

  if (!rep.pass()) {
    std::ostringstream msg;
    msg << "component_separation_check(" << ib.underlying->name() << "): " << rep.failures.front();
    throw FalsificationError(msg.str());
  }
  return rep;
}

}  // namespace bdouble
