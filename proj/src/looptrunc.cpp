#include "bdouble/looptrunc.hpp"

#include <algorithm>

namespace bdouble {

// ---------------------------------------------------------------------------
// PolyVector

PolyVector PolyVector::monomial(int lo, int hi, int degree, std::size_t index, Scalar coeff) {
  PolyVector p(lo, hi);
  p.add(degree, index, coeff);
  return p;
}

void PolyVector::add(int degree, std::size_t index, const Scalar& coeff) {
  if (coeff == 0) return;
  if (degree < lo || degree > hi)
    throw WindowOverflow("degree " + std::to_string(degree) + " outside window [" + std::to_string(lo) +
                         ", " + std::to_string(hi) + "]");
  auto key = std::make_pair(degree, index);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

PolyVector PolyVector::shifted(int k) const {
  PolyVector p(lo + k, hi + k);
  for (const auto& [key, c] : terms) p.terms.emplace(std::make_pair(key.first + k, key.second), c);
  return p;
}

PolyVector PolyVector::scaled(const Scalar& s) const {
  PolyVector p(lo, hi);
  if (s == 0) return p;
  for (const auto& [key, c] : terms) p.terms.emplace(key, s * c);
  return p;
}

PolyVector poly_bracket(const LieAlgebra& g, const PolyVector& p, const PolyVector& q) {
  PolyVector out(std::min(p.lo, q.lo), std::max(p.hi, q.hi));
  for (const auto& [kp, cp] : p.terms)
    for (const auto& [kq, cq] : q.terms)
      for (const auto& [k, s] : g.bracket_terms(kp.second, kq.second))
        out.add(kp.first + kq.first, k, cp * cq * s);
  return out;
}

Vector flatten(const PolyVector& p, int lo, int hi, std::size_t dim) {
  Vector v = zero_vector(static_cast<std::size_t>(hi - lo + 1) * dim);
  for (const auto& [key, c] : p.terms) {
    if (key.first < lo || key.first > hi)
      throw WindowOverflow("degree " + std::to_string(key.first) + " outside flattening window");
    v[static_cast<std::size_t>(key.first - lo) * dim + key.second] = c;
  }
  return v;
}

PolyVector unflatten(const Vector& v, int lo, int hi, std::size_t dim) {
  PolyVector p(lo, hi);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) p.add(lo + static_cast<int>(i / dim), i % dim, v[i]);
  return p;
}

// ---------------------------------------------------------------------------
// Borel quotient

namespace {

enum class Part { N, H, NMinus };

Part part_of(const ChevalleyAlgebra& g, std::size_t c) {
  if (c < g.positive_count()) return Part::N;
  if (c < g.positive_count() + g.rank()) return Part::H;
  return Part::NMinus;
}

// Lowest degree at which a term is in normal form.
int normal_degree(Part part) { return part == Part::NMinus ? 1 : 0; }
// Highest normal degree: t x -> eps x for x in n; t^(j+1) y -> eps t^j y for
// y in b^-, j >= 1.
int top_degree(Part part) { return part == Part::N ? 0 : 1; }

void check_in_b_tilde(const BorelQuotient& q, const PolyVector& p) {
  for (const auto& [key, c] : p.terms)
    if (key.first < normal_degree(part_of(q.simple, key.second)))
      throw InputError("term t^" + std::to_string(key.first) + " " + q.simple.algebra->labels()[key.second] +
                       " is outside b~");
}

}  // namespace

std::vector<std::pair<int, std::size_t>> reducible_terms(const BorelQuotient& q, const PolyVector& p) {
  check_in_b_tilde(q, p);
  std::vector<std::pair<int, std::size_t>> out;
  for (const auto& [key, c] : p.terms)
    if (key.first > top_degree(part_of(q.simple, key.second))) out.push_back(key);
  return out;
}

void apply_rule(const BorelQuotient& q, PolyVector& p, std::pair<int, std::size_t> term) {
  auto it = p.terms.find(term);
  if (it == p.terms.end() || term.first <= top_degree(part_of(q.simple, term.second)))
    throw InputError("apply_rule: term is not reducible");
  Scalar c = it->second;
  p.terms.erase(it);
  p.add(term.first - 1, term.second, q.epsilon * c);
}

PolyVector BorelQuotient::element(std::size_t i) const {
  const auto& [d, c] = normal_basis.at(i);
  return PolyVector::monomial(0, 2, d, c);
}

Vector BorelQuotient::reduce(const PolyVector& p) const {
  PolyVector work = p;
  for (auto red = reducible_terms(*this, work); !red.empty(); red = reducible_terms(*this, work))
    apply_rule(*this, work, red.back());  // highest degree first
  const std::size_t r = simple.rank();
  Vector out = zero_vector(normal_basis.size());
  for (const auto& [key, c] : work.terms) out[key.second + (key.first == 1 ? r : 0)] += c;
  return out;
}

BorelQuotient build_borel_quotient(const ChevalleyAlgebra& g, const Scalar& eps) {
  BorelQuotient q{eps, g, nullptr, {}};
  const std::size_t p = g.positive_count(), r = g.rank();
  std::vector<std::string> labels;
  const auto& gl = g.algebra->labels();
  for (std::size_t c = 0; c < p + r; ++c) {
    q.normal_basis.emplace_back(0, c);
    labels.push_back(gl[c]);
  }
  for (std::size_t c = p; c < g.dim(); ++c) {
    q.normal_basis.emplace_back(1, c);
    labels.push_back("t" + gl[c]);
  }
  auto alg = std::make_shared<LieAlgebra>("bt/(t-" + to_string(eps) + ")nt(" + g.algebra->name() + ")", labels);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      alg->set_bracket(i, j, q.reduce(poly_bracket(*g.algebra, q.element(i), q.element(j))));
  if (auto w = check_jacobi(*alg))
    throw ConstructionError(alg->name() + " fails Jacobi at (" + std::to_string(w->i) + "," +
                            std::to_string(w->j) + "," + std::to_string(w->k) + ")");
  q.algebra = alg;
  return q;
}

AlgebraMap gamma_eps(const DoubleAlgebra& gp, const BorelQuotient& q) {
  if (gp.kind != DoubleKind::GEpsPlus || gp.epsilon != q.epsilon)
    throw InputError("gamma_eps: source must be g_eps_plus with the quotient's eps");
  const ChevalleyAlgebra& g = q.simple;
  const std::size_t n = gp.dim();
  Matrix m(n, n);
  for (std::size_t c = 0; c < g.dim(); ++c) {
    PolyVector img(0, 2);
    std::size_t src;
    switch (part_of(g, c)) {
      case Part::N:
        src = gp.b_index(c);
        img.add(0, c, 1);
        m.set_column(src, q.reduce(img));
        break;
      case Part::H:
        src = gp.b_index(c);
        img.add(0, c, 1);
        m.set_column(src, q.reduce(img));
        src = gp.minus_index(c);
        img = PolyVector(0, 2);
        img.add(0, c, -q.epsilon);
        img.add(1, c, 2);
        m.set_column(src, q.reduce(img));
        break;
      case Part::NMinus:
        src = gp.minus_index(c);
        img.add(1, c, 1);
        m.set_column(src, q.reduce(img));
        break;
    }
  }
  AlgebraMap out = make_map(gp.underlying, q.algebra, std::move(m));
  check_homomorphism(out);
  return out;
}

Vector theta_apply(const BorelQuotient& q, const PolyVector& p) {
  check_in_b_tilde(q, p);
  const ChevalleyAlgebra& g = q.simple;
  const std::size_t r = g.rank();
  const Scalar& eps = q.epsilon;
  Vector out = zero_vector(g.dim() + r);
  auto power = [&](int d) {
    Scalar s = 1;
    for (int k = 0; k < d; ++k) s *= eps;
    return s;
  };
  for (const auto& [key, c] : p.terms) {
    const auto [d, idx] = key;
    switch (part_of(g, idx)) {
      case Part::N:  // P x -> P(eps) x
        out[idx] += c * power(d);
        break;
      case Part::NMinus:  // t R y -> R(eps) y
        out[idx + r] += c * power(d - 1);
        break;
      case Part::H: {
        Scalar q0 = d == 0 ? 1 : 0;
        if (eps != 0) {
          out[idx] += c * (power(d) + q0) / 2;
          out[idx + r] += c * (power(d) - q0) / (2 * eps);
        } else {  // (Q(0) h, Q'(0) h / 2)
          out[idx] += c * q0;
          if (d == 1) out[idx + r] += c / 2;
        }
        break;
      }
    }
  }
  return out;
}

AlgebraMap theta_retraction(const BorelQuotient& q, const DoubleAlgebra& gp) {
  if (gp.kind != DoubleKind::GEpsPlus || gp.epsilon != q.epsilon)
    throw InputError("theta_retraction: target must be g_eps_plus with the quotient's eps");
  const std::size_t n = q.normal_basis.size();
  Matrix m(gp.dim(), n);
  for (std::size_t i = 0; i < n; ++i) m.set_column(i, theta_apply(q, q.element(i)));
  AlgebraMap out = make_map(q.algebra, gp.underlying, std::move(m));
  check_homomorphism(out);
  return out;
}

// ---------------------------------------------------------------------------
// Loop lifts

namespace {

PolyVector generator(const ChevalleyAlgebra& g, std::size_t node, bool raising, int lo, int hi) {
  const RootSystem& rs = *g.roots;
  std::size_t top = g.positive_count() - 1;
  if (node == 0)
    return raising ? PolyVector::monomial(lo, hi, 1, g.f(top)) : PolyVector::monomial(lo, hi, -1, g.e(top));
  std::size_t k = static_cast<std::size_t>(rs.positive_index(rs.node_root(node)));
  return PolyVector::monomial(lo, hi, 0, raising ? g.e(k) : g.f(k));
}

Vector concat(const Vector& a, const Vector& b) {
  Vector v = a;
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

}  // namespace

LoopLift lift_to_loop(const ChevalleyAlgebra& g, const DiagramAutomorphism& theta, int window) {
  const RootSystem& rs = *g.roots;
  if (window < 2) throw InputError("lift_to_loop: window must be at least 2");
  if (theta.size() != rs.node_count() || !preserves(rs.extended_cartan(), theta))
    throw InputError("not an automorphism of the extended diagram");
  const int n = window;
  const int max_mark = *std::max_element(rs.marks().begin(), rs.marks().end());
  const int w = (n + 1) * max_mark + 1;
  const std::size_t dim = g.dim();
  const LieAlgebra& alg = *g.algebra;

  struct Pair {
    PolyVector src, img;
  };
  std::vector<Pair> gens, elements;
  for (std::size_t node = 0; node < rs.node_count(); ++node)
    for (bool raising : {true, false})
      gens.push_back({generator(g, node, raising, -n, n), generator(g, theta.perm[node], raising, -w, w)});

  const std::size_t src_cols = static_cast<std::size_t>(2 * n + 1) * dim;
  const std::size_t img_cols = static_cast<std::size_t>(2 * w + 1) * dim;
  SparseEliminator src_elim(src_cols), pair_elim(src_cols + img_cols);
  auto offer = [&](const PolyVector& s, const PolyVector& i) {
    Vector fs = flatten(s, -n, n, dim);
    bool fresh = src_elim.add_row(fs);
    bool fresh_pair = pair_elim.add_row(concat(fs, flatten(i, -w, w, dim)));
    if (fresh != fresh_pair)
      throw FalsificationError("lift of " + theta.label() + " is inconsistent on a dependent bracket word");
    if (fresh) elements.push_back({s, i});
  };
  for (const auto& gen : gens) offer(gen.src, gen.img);
  for (std::size_t k = 0; k < elements.size(); ++k)
    for (const auto& gen : gens) {
      PolyVector s;
      try {
        s = poly_bracket(alg, gen.src, elements[k].src);
      } catch (const WindowOverflow&) {
        continue;  // word leaves the source window
      }
      if (s.is_zero()) continue;
      offer(s, poly_bracket(alg, gen.img, elements[k].img));
    }

  LoopLift out{g, theta, n, w, elements.size(), elements.size() == src_cols, Matrix()};
  if (out.complete) {
    std::vector<Vector> scols, icols;
    for (const auto& e : elements) {
      scols.push_back(flatten(e.src, -n, n, dim));
      icols.push_back(flatten(e.img, -w, w, dim));
    }
    auto inv = inverse(Matrix::from_columns(scols, src_cols));
    if (!inv) throw ConstructionError("lift_to_loop: independent words are not a basis");
    out.matrix = Matrix::from_columns(icols, img_cols) * *inv;
  }
  return out;
}

PolyVector LoopLift::apply(const PolyVector& p) const {
  if (!complete) throw InputError("loop lift is not defined on the whole window");
  const std::size_t dim = simple.dim();
  return unflatten(matrix.apply(flatten(p, -source_window, source_window, dim)), -image_window, image_window,
                   dim);
}

Scalar semilinearity_lambda(const LoopLift& lift) {
  const int n = lift.source_window;
  const std::size_t dim = lift.simple.dim();
  std::optional<Scalar> lambda;
  for (int d = -n; d <= n - 1; ++d)
    for (std::size_t c = 0; c < dim; ++c) {
      PolyVector a = lift.apply(PolyVector::monomial(-n, n, d, c)).shifted(1);
      PolyVector b = lift.apply(PolyVector::monomial(-n, n, d + 1, c));
      if (a.is_zero()) throw FalsificationError("lift kills a basis vector");
      const auto& [key, coeff] = *a.terms.begin();
      auto it = b.terms.find(key);
      Scalar ratio = it == b.terms.end() ? Scalar(0) : it->second / coeff;
      if (!(b == a.scaled(ratio)))
        throw FalsificationError("lift(t x) is not proportional to t lift(x) for t^" + std::to_string(d) + " " +
                                 lift.simple.algebra->labels()[c]);
      if (lambda && *lambda != ratio)
        throw FalsificationError("semilinearity ratios disagree: " + to_string(*lambda) + " vs " + to_string(ratio));
      lambda = ratio;
    }
  if (!lambda) throw InputError("semilinearity_lambda: window too small");
  if (*lambda != 1 && *lambda != -1) throw FalsificationError("lambda = " + to_string(*lambda) + " is not +-1");
  if (lift.diagram.order() % 2 == 1 && *lambda != 1)
    throw FalsificationError("lambda = -1 for an automorphism of odd order");
  return *lambda;
}

bool omega_compatibility(const LoopLift& lift) {
  const ChevalleyAlgebra& g = lift.simple;
  Matrix w = cartan_involution(g).matrix;
  auto omega = [&](const PolyVector& p) {
    PolyVector out(-p.hi, -p.lo);
    for (const auto& [key, c] : p.terms)
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (w(k, key.second) != 0) out.add(-key.first, k, c * w(k, key.second));
    return out;
  };
  const int n = lift.source_window;
  for (int d = -n; d <= n; ++d)
    for (std::size_t c = 0; c < g.dim(); ++c) {
      PolyVector x = PolyVector::monomial(-n, n, d, c);
      if (!(omega(lift.apply(omega(x))) == lift.apply(x))) return false;
    }
  return true;
}

}  // namespace bdouble
