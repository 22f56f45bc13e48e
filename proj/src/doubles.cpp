#include "bdouble/doubles.hpp"

namespace bdouble {

std::string kind_name(DoubleKind kind) {
  switch (kind) {
    case DoubleKind::GEpsPlus: return "g_eps_plus";
    case DoubleKind::GEps: return "g_eps";
    case DoubleKind::Ib: return "Ib";
    case DoubleKind::IbBar: return "Ib_bar";
  }
  return "?";
}

std::size_t DoubleAlgebra::minus_index(std::size_t chevalley) const {
  const std::size_t p = simple.positive_count(), r = simple.rank();
  if (chevalley < p) throw InputError("minus_index: not in the opposite Borel");
  if (full_minus()) return chevalley + r;
  if (chevalley < p + r) throw InputError("minus_index: h has no copy in the n^- summand");
  return chevalley;
}

namespace {

enum class Side { B, M };

struct Slot {
  Side side;
  std::size_t chevalley;
};

struct Parts {
  Vector x, h, y;  // n, h, n^- components, each of length dim g
};

Parts split(const ChevalleyAlgebra& g, const Vector& z) {
  const std::size_t p = g.positive_count(), r = g.rank();
  Parts out{zero_vector(z.size()), zero_vector(z.size()), zero_vector(z.size())};
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] == 0) continue;
    (i < p ? out.x : i < p + r ? out.h : out.y)[i] = z[i];
  }
  return out;
}

class Builder {
 public:
  Builder(const ChevalleyAlgebra& g, DoubleKind kind, Scalar eps) : g_(g), kind_(kind), eps_(std::move(eps)) {
    const std::size_t p = g.positive_count(), r = g.rank();
    for (std::size_t c = 0; c < p + r; ++c) slots_.push_back({Side::B, c});
    std::size_t first = full() ? p : p + r;
    for (std::size_t c = first; c < g.dim(); ++c) slots_.push_back({Side::M, c});
  }

  DoubleAlgebra build() {
    const std::size_t n = slots_.size();
    auto alg = std::make_shared<LieAlgebra>(name(), labels());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) alg->set_bracket(i, j, bracket(slots_[i], slots_[j]));

    DoubleAlgebra d{nullptr, kind_, eps_, {}, {}, g_};
    const std::size_t p = g_.positive_count(), r = g_.rank();
    std::vector<std::size_t> nn, hh, mh, mn;
    for (std::size_t i = 0; i < n; ++i) {
      const Slot& s = slots_[i];
      (s.side == Side::B ? d.part_b : d.part_minus).push_back(i);
      if (s.side == Side::B) (s.chevalley < p ? nn : hh).push_back(i);
      else (s.chevalley < p + r ? mh : mn).push_back(i);
    }
    alg->set_subspace("n", nn);
    alg->set_subspace("h", hh);
    alg->set_subspace("b", d.part_b);
    alg->set_subspace("minus_n", mn);
    alg->set_subspace("minus", d.part_minus);
    if (full()) alg->set_subspace("minus_h", mh);
    if (kind_ == DoubleKind::Ib) {
      std::vector<std::size_t> c = hh;
      c.insert(c.end(), mh.begin(), mh.end());
      alg->set_subspace("c", c);
    }
    if (auto w = check_jacobi(*alg))
      throw ConstructionError(alg->name() + " fails Jacobi at (" + std::to_string(w->i) + "," +
                              std::to_string(w->j) + "," + std::to_string(w->k) + ")");
    d.underlying = alg;
    return d;
  }

 private:
  bool full() const { return kind_ == DoubleKind::GEpsPlus || kind_ == DoubleKind::Ib; }

  std::string name() const {
    std::string base = g_.algebra->name();
    switch (kind_) {
      case DoubleKind::GEpsPlus: return "g_eps_plus(" + base + "," + to_string(eps_) + ")";
      case DoubleKind::GEps: return "g_eps(" + base + "," + to_string(eps_) + ")";
      default: return "Ib(" + base + ")";
    }
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    const bool t = kind_ == DoubleKind::Ib;
    for (const auto& s : slots_) {
      const std::string& l = g_.algebra->labels()[s.chevalley];
      if (t) out.push_back(s.side == Side::B ? l : "t" + l);
      else out.push_back(s.side == Side::B ? "(" + l + ",0)" : "(0," + l + ")");
    }
    return out;
  }

  std::size_t index_of(Side side, std::size_t c) const {
    const std::size_t p = g_.positive_count(), r = g_.rank();
    if (side == Side::B) {
      if (c >= p + r) throw ConstructionError("n^- component landed in the b summand");
      return c;
    }
    if (full()) return c + r;
    if (c < p + r) throw ConstructionError("b component landed in the n^- summand");
    return c;
  }

  void place(Vector& out, Side side, const Vector& z, const Scalar& scale) const {
    if (scale == 0) return;
    for (std::size_t c = 0; c < z.size(); ++c)
      if (z[c] != 0) out[index_of(side, c)] += scale * z[c];
  }

  Vector bracket(const Slot& a, const Slot& b) const {
    if (a.side == Side::M && b.side == Side::B) return Scalar(-1) * bracket(b, a);
    Vector out = zero_vector(slots_.size());
    Vector z = bracket_of(*g_.algebra, g_.algebra->basis_vector(a.chevalley),
                          g_.algebra->basis_vector(b.chevalley));
    if (a.side == Side::B && b.side == Side::B) {
      place(out, Side::B, z, 1);
      return out;
    }
    if (a.side == Side::M) {
      if (kind_ != DoubleKind::Ib) place(out, Side::M, z, eps_);
      return out;
    }
    Parts s = split(g_, z);
    switch (kind_) {
      case DoubleKind::GEpsPlus:
        place(out, Side::B, s.x, eps_);
        place(out, Side::B, s.h, eps_ / 2);
        place(out, Side::M, s.h, make_scalar(1, 2));
        place(out, Side::M, s.y, 1);
        break;
      case DoubleKind::GEps:
        place(out, Side::B, s.x + s.h, eps_);
        place(out, Side::M, s.y, 1);
        break;
      case DoubleKind::Ib:
        place(out, Side::M, s.h + s.y, 1);
        break;
      case DoubleKind::IbBar:
        throw ConstructionError("Ib_bar is built as a quotient");
    }
    return out;
  }

  const ChevalleyAlgebra& g_;
  DoubleKind kind_;
  Scalar eps_;
  std::vector<Slot> slots_;
};

}  // namespace

DoubleAlgebra build_g_eps_plus(const ChevalleyAlgebra& g, const Scalar& eps) {
  return Builder(g, DoubleKind::GEpsPlus, eps).build();
}

DoubleAlgebra build_g_eps(const ChevalleyAlgebra& g, const Scalar& eps) {
  return Builder(g, DoubleKind::GEps, eps).build();
}

DoubleAlgebra build_Ib(const ChevalleyAlgebra& g) { return Builder(g, DoubleKind::Ib, 0).build(); }

DoubleAlgebra build_Ib_bar(const ChevalleyAlgebra& g) {
  DoubleAlgebra ib = build_Ib(g);
  Quotient q = quotient(*ib.underlying, ib.underlying->subspace_vectors("minus_h"),
                        "Ib_bar(" + g.algebra->name() + ")");
  const std::size_t p = g.positive_count(), r = g.rank();
  // The greedy complement keeps e_k, h_i, t f_k: exactly the Chevalley layout.
  std::vector<std::size_t> expected;
  for (std::size_t i = 0; i < p + r; ++i) expected.push_back(i);
  for (std::size_t k = 0; k < p; ++k) expected.push_back(p + 2 * r + k);
  if (q.kept != expected) throw ConstructionError("unexpected complement for Ib / t h");

  auto alg = std::make_shared<LieAlgebra>(*q.algebra);
  DoubleAlgebra d{nullptr, DoubleKind::IbBar, 0, {}, {}, g};
  std::vector<std::size_t> nn, hh, mn;
  for (std::size_t i = 0; i < p; ++i) nn.push_back(i);
  for (std::size_t i = p; i < p + r; ++i) hh.push_back(i);
  for (std::size_t i = p + r; i < g.dim(); ++i) mn.push_back(i);
  d.part_b = nn;
  d.part_b.insert(d.part_b.end(), hh.begin(), hh.end());
  d.part_minus = mn;
  alg->set_subspace("n", nn);
  alg->set_subspace("h", hh);
  alg->set_subspace("b", d.part_b);
  alg->set_subspace("minus_n", mn);
  alg->set_subspace("minus", mn);
  d.underlying = alg;
  return d;
}

Matrix phi_eps(const ChevalleyAlgebra& g, const Scalar& eps) {
  if (eps == 0) throw InputError("phi_eps is not invertible at eps = 0");
  const std::size_t p = g.positive_count(), r = g.rank(), n = g.dim() + r;
  Matrix m = Matrix::identity(n);
  for (std::size_t i = p + r; i < n; ++i) m(i, i) = eps;
  return m;
}

bool phi_eps_check(const ChevalleyAlgebra& g, const Scalar& eps) {
  Matrix phi = phi_eps(g, eps);
  Matrix phi_inv = phi_eps(g, 1 / eps);
  DoubleAlgebra ge = build_g_eps_plus(g, eps);
  DoubleAlgebra g1 = build_g_eps_plus(g, 1);
  const std::size_t n = ge.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector lhs = bracket_of(*ge.underlying, ge.underlying->basis_vector(i), ge.underlying->basis_vector(j));
      Vector rhs = phi_inv.apply(bracket_of(*g1.underlying, phi.column(i), phi.column(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

IotaEmbeddings iota_embeddings(const ChevalleyAlgebra& g) {
  DoubleAlgebra g1 = build_g_eps_plus(g, 1);
  AlgebraPtr target = g1.underlying;
  const std::size_t p = g.positive_count(), r = g.rank(), n = g1.dim();
  const Scalar half = make_scalar(1, 2);

  Matrix mg(n, g.dim());
  for (std::size_t k = 0; k < p; ++k) {
    mg(g1.b_index(g.e(k)), g.e(k)) = 1;
    mg(g1.minus_index(g.f(k)), g.f(k)) = 1;
  }
  std::vector<std::string> hlabels;
  Matrix mh(n, r);
  for (std::size_t i = 0; i < r; ++i) {
    mg(g1.b_index(g.h(i)), g.h(i)) = half;
    mg(g1.minus_index(g.h(i)), g.h(i)) = half;
    mh(g1.b_index(g.h(i)), i) = -1;
    mh(g1.minus_index(g.h(i)), i) = 1;
    hlabels.push_back("H" + std::to_string(i + 1));
  }
  auto h_alg = std::make_shared<const LieAlgebra>("h(" + g.algebra->name() + ")", hlabels);

  IotaEmbeddings out{make_map(g.algebra, target, mg), make_map(h_alg, target, mh)};
  check_homomorphism(out.iota_g);
  check_homomorphism(out.iota_h);
  std::vector<Vector> img_g, img_h;
  for (std::size_t j = 0; j < g.dim(); ++j) img_g.push_back(mg.column(j));
  for (std::size_t j = 0; j < r; ++j) img_h.push_back(mh.column(j));
  out.image_g_is_ideal = is_ideal(*target, img_g);
  out.image_h_is_center = same_span(img_h, center(*target), n);
  std::vector<Vector> both = img_g;
  both.insert(both.end(), img_h.begin(), img_h.end());
  out.direct_sum = span_dimension(img_g, n) == g.dim() && span_dimension(img_h, n) == r &&
                   span_dimension(both, n) == n;
  return out;
}

AlgebraMap eta_iso(const ChevalleyAlgebra& g) {
  DoubleAlgebra g0 = build_g_eps_plus(g, 0);
  DoubleAlgebra ib = build_Ib(g);
  const std::size_t p = g.positive_count(), r = g.rank(), n = g0.dim();
  Matrix kappa = killing_form(*g.algebra);

  // kappa(w, b) for w in b^- (columns) against the basis of b (rows); b^* is
  // g / n and pairs perfectly with b^-.
  std::vector<std::size_t> bm;
  for (std::size_t c = p; c < g.dim(); ++c) bm.push_back(c);
  Matrix pairing(p + r, bm.size());
  for (std::size_t a = 0; a < p + r; ++a)
    for (std::size_t w = 0; w < bm.size(); ++w) pairing(a, w) = kappa(a, bm[w]);

  Matrix m(n, n);
  for (std::size_t c = 0; c < p + r; ++c) m(ib.b_index(c), g0.b_index(c)) = 1;
  for (std::size_t c = p; c < g.dim(); ++c) {
    // 2h + y for the second-summand basis vector c.
    Vector z = zero_vector(g.dim());
    z[c] = c < p + r ? 2 : 1;
    Vector functional(p + r);
    for (std::size_t a = 0; a < p + r; ++a) functional[a] = kappa.row(a)[c] * z[c];
    auto w = solve_system(pairing, functional);
    if (!w) throw ConstructionError("eta: functional outside the image of b^-");
    for (std::size_t k = 0; k < bm.size(); ++k)
      if ((*w)[k] != 0) m(ib.minus_index(bm[k]), g0.minus_index(c)) = (*w)[k];
  }
  AlgebraMap out = make_map(g0.underlying, ib.underlying, std::move(m));
  check_homomorphism(out);
  return out;
}

AlgebraMap g_eps_isomorphism(const ChevalleyAlgebra& g, const Scalar& eps) {
  DoubleAlgebra ge = build_g_eps(g, eps);
  const std::size_t n = g.dim();
  if (eps == 0) {
    DoubleAlgebra bar = build_Ib_bar(g);
    AlgebraMap out = make_map(ge.underlying, bar.underlying, Matrix::identity(n));
    check_homomorphism(out);
    return out;
  }
  Matrix m = Matrix::identity(n);
  for (auto i : ge.part_minus) m(i, i) = eps;
  AlgebraMap out = make_map(ge.underlying, g.algebra, std::move(m));
  check_homomorphism(out);
  return out;
}

}  // namespace bdouble
