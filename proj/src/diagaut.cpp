#include "bdouble/diagaut.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bdouble {

// ---------------------------------------------------------------------------
// DiagramAutomorphism

DiagramAutomorphism DiagramAutomorphism::identity(std::size_t n) {
  DiagramAutomorphism d;
  d.perm.resize(n);
  std::iota(d.perm.begin(), d.perm.end(), std::size_t{0});
  return d;
}

bool DiagramAutomorphism::is_identity() const { return *this == identity(size()); }

std::size_t DiagramAutomorphism::order() const {
  std::size_t k = 1;
  for (DiagramAutomorphism p = *this; !p.is_identity(); p = compose(p)) ++k;
  return k;
}

DiagramAutomorphism DiagramAutomorphism::compose(const DiagramAutomorphism& inner) const {
  if (inner.size() != size()) throw InputError("compose: diagram sizes differ");
  DiagramAutomorphism d;
  for (auto i : inner.perm) d.perm.push_back(perm[i]);
  return d;
}

DiagramAutomorphism DiagramAutomorphism::inverse() const {
  DiagramAutomorphism d;
  d.perm.resize(size());
  for (std::size_t i = 0; i < size(); ++i) d.perm[perm[i]] = i;
  return d;
}

std::string DiagramAutomorphism::label() const {
  std::string out;
  std::vector<bool> seen(size(), false);
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      if (j != i) out += " ";
      out += std::to_string(j);
      seen[j] = true;
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

bool preserves(const IntMatrix& a, const DiagramAutomorphism& theta) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[theta.perm[i]][theta.perm[j]] != a[i][j]) return false;
  return true;
}

namespace {

// Sorted row and column entries; equal for nodes an automorphism can swap.
std::pair<IntVector, IntVector> signature(const IntMatrix& a, std::size_t i) {
  IntVector row = a[i], col;
  for (const auto& r : a) col.push_back(r[i]);
  std::sort(row.begin(), row.end());
  std::sort(col.begin(), col.end());
  return {row, col};
}

void search(const IntMatrix& a, const std::vector<std::size_t>& order, std::size_t depth,
            std::vector<long>& image, std::vector<bool>& used, std::vector<DiagramAutomorphism>& out) {
  const std::size_t n = a.size();
  if (depth == n) {
    DiagramAutomorphism d;
    for (auto v : image) d.perm.push_back(static_cast<std::size_t>(v));
    out.push_back(std::move(d));
    return;
  }
  std::size_t node = order[depth];
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (used[cand] || signature(a, node) != signature(a, cand) || a[node][node] != a[cand][cand]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k) {
      std::size_t other = order[k];
      std::size_t img = static_cast<std::size_t>(image[other]);
      ok = a[node][other] == a[cand][img] && a[other][node] == a[img][cand];
    }
    if (!ok) continue;
    image[node] = static_cast<long>(cand);
    used[cand] = true;
    search(a, order, depth + 1, image, used, out);
    used[cand] = false;
    image[node] = -1;
  }
}

}  // namespace

std::vector<DiagramAutomorphism> diagram_automorphism_group(const IntMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw InputError("diagram_automorphism_group: matrix is not square");
  std::vector<std::size_t> degree(n, 0), order(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && a[i][j] != 0) ++degree[i];
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return degree[x] > degree[y]; });

  std::vector<DiagramAutomorphism> out;
  std::vector<long> image(n, -1);
  std::vector<bool> used(n, false);
  search(a, order, 0, image, used, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_group(const std::vector<DiagramAutomorphism>& elements) {
  if (elements.empty()) return false;
  std::set<DiagramAutomorphism> s(elements.begin(), elements.end());
  if (!s.count(DiagramAutomorphism::identity(elements.front().size()))) return false;
  for (const auto& x : elements) {
    if (!s.count(x.inverse())) return false;
    for (const auto& y : elements)
      if (!s.count(x.compose(y))) return false;
  }
  return true;
}

std::size_t reference_automorphism_count(const SimpleType& st) {
  const auto r = static_cast<std::size_t>(st.rank);
  switch (st.family) {
    case Family::A: return r == 1 ? 2 : 2 * (r + 1);
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return r == 4 ? 24 : 8;
    case Family::E: return r == 6 ? 6 : r == 7 ? 2 : 1;
    case Family::F: return 1;
    case Family::G: return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Roots of Ib

IntVector AffineRoot::node_coords(const RootSystem& rs) const {
  // n delta + a with delta = (alpha_0 + delta) + theta:
  // node 0 gets n, node i gets a_i + n * mark_i.
  IntVector out(rs.node_count());
  out[0] = delta;
  for (int i = 0; i < rs.rank(); ++i)
    out[static_cast<std::size_t>(i) + 1] = finite.coords[i] + delta * rs.marks()[static_cast<std::size_t>(i) + 1];
  return out;
}

namespace {

void require_ib(const DoubleAlgebra& ib) {
  if (ib.kind != DoubleKind::Ib) throw InputError("expected an Ib double, got " + kind_name(ib.kind));
}

}  // namespace

IbRoots ib_roots(const DoubleAlgebra& ib) {
  require_ib(ib);
  const LieAlgebra& alg = *ib.underlying;
  const RootSystem& rs = *ib.simple.roots;
  const std::size_t r = ib.simple.rank();
  auto c = alg.subspace_vectors("c");
  WeightDecomposition wd = weight_decomposition(alg, c);

  Matrix cartan(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) cartan(i, j) = rs.cartan()[i][j];

  IbRoots out;
  for (const auto& space : wd.spaces) {
    if (space.basis.size() != 1) throw FalsificationError("Ib weight space of dimension != 1");
    Vector on_h(space.weight.begin(), space.weight.begin() + static_cast<long>(r));
    for (std::size_t i = r; i < space.weight.size(); ++i)
      if (space.weight[i] != 0) out.t_component_zero = false;
    // weight(h_j) = <alpha, alpha_j^vee> = sum_m c_m a_jm.
    auto coords = solve_system(cartan, on_h);
    if (!coords) throw ConstructionError("weight outside the root lattice");
    Root a{IntVector(r)};
    for (std::size_t i = 0; i < r; ++i) {
      if ((*coords)[i].get_den() != 1) throw FalsificationError("non-integral Ib weight");
      a.coords[i] = static_cast<int>((*coords)[i].get_num().get_si());
    }
    out.roots.push_back(a);
    out.root_vectors.push_back(space.basis.front());
  }

  // Delta(Ib): weights whose space is not in the second derived algebra.
  auto d1 = derived_subalgebra(alg);
  auto d2 = bracket_span(alg, d1, d1);
  std::vector<std::size_t> simple;
  for (std::size_t k = 0; k < out.roots.size(); ++k)
    if (!in_span(d2, out.root_vectors[k])) simple.push_back(k);
  if (simple.size() != rs.node_count()) throw FalsificationError("Delta(Ib) has the wrong size");
  // Node order: the negative root first, then the simple roots by index.
  out.simple.assign(rs.node_count(), out.roots.size());
  for (auto k : simple)
    for (std::size_t node = 0; node < rs.node_count(); ++node)
      if (out.roots[k] == rs.node_root(node)) out.simple[node] = k;
  for (auto k : out.simple)
    if (k == out.roots.size()) throw FalsificationError("Delta(Ib) does not match the extended simple roots");
  return out;
}

std::vector<PhiEntry> phi_root_embedding(const DoubleAlgebra& ib) {
  IbRoots roots = ib_roots(ib);
  std::vector<PhiEntry> out;
  for (const auto& a : roots.roots) out.push_back({a, AffineRoot{a, a.is_positive() ? 0 : 1}});
  return out;
}

RecoveredCartan recover_extended_cartan(const DoubleAlgebra& ib) {
  require_ib(ib);
  const SimpleType& st = ib.simple.roots->simple_type();
  if (st.family == Family::A && st.rank == 1)
    throw InputError("the root-string formula for the extended Cartan matrix does not apply to sl2");
  IbRoots roots = ib_roots(ib);
  const LieAlgebra& alg = *ib.underlying;
  const std::size_t n = roots.simple.size();
  auto in_phi = [&](const Root& x) {
    return std::find(roots.roots.begin(), roots.roots.end(), x) != roots.roots.end();
  };

  RecoveredCartan out{IntMatrix(n, IntVector(n, 2)), IntMatrix(n, IntVector(n, 2))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Root& a = roots.roots[roots.simple[i]];
      const Root& b = roots.roots[roots.simple[j]];
      int m = 0;
      while (in_phi(b + (m + 1) * a)) ++m;
      out.from_strings[i][j] = -m;

      const Vector& xa = roots.root_vectors[roots.simple[i]];
      Vector v = roots.root_vectors[roots.simple[j]];
      int k = 0;
      for (v = bracket_of(alg, xa, v); !is_zero(v); v = bracket_of(alg, xa, v)) ++k;
      out.from_ad[i][j] = -k;
    }
  return out;
}

Vector node_root_vector(const DoubleAlgebra& ib, std::size_t node) {
  require_ib(ib);
  const RootSystem& rs = *ib.simple.roots;
  if (node >= rs.node_count()) throw InputError("node index out of range");
  Vector v = zero_vector(ib.dim());
  if (node == 0)
    v[ib.minus_index(ib.simple.f(rs.positive_roots().size() - 1))] = 1;
  else
    v[ib.b_index(ib.simple.root_vector(rs.node_root(node)))] = 1;
  return v;
}

AlgebraMap lift_diagram_automorphism(const DoubleAlgebra& ib, const DiagramAutomorphism& theta) {
  require_ib(ib);
  const RootSystem& rs = *ib.simple.roots;
  const std::size_t r = ib.simple.rank(), n = ib.dim();
  if (theta.size() != rs.node_count() || !preserves(rs.extended_cartan(), theta))
    throw InputError("not an automorphism of the extended diagram");

  // theta on h: L(alpha_i)(theta h_j) = alpha_i(h_j), L(alpha_i) = node theta(i).
  // With theta h_j = sum_k u_k h_k: sum_k u_k <L(alpha_i), alpha_k^vee> = a_ji.
  Matrix lhs(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    Root li = rs.node_root(theta.perm[i + 1]);
    for (std::size_t k = 0; k < r; ++k) lhs(i, k) = rs.pairing_with_coroot(li, static_cast<int>(k));
  }
  std::vector<Vector> sources, images;
  for (std::size_t j = 0; j < r; ++j) {
    Vector rhs(r);
    for (std::size_t i = 0; i < r; ++i) rhs[i] = rs.cartan()[j][i];
    auto u = solve_system(lhs, rhs);
    if (!u) throw ConstructionError("theta on h is not invertible");
    Vector img = zero_vector(n);
    for (std::size_t k = 0; k < r; ++k) img[ib.b_index(ib.simple.h(k))] = (*u)[k];
    sources.push_back(ib.underlying->basis_vector(ib.b_index(ib.simple.h(j))));
    images.push_back(img);
  }

  std::vector<Vector> seeds;
  for (std::size_t node = 0; node < rs.node_count(); ++node) seeds.push_back(node_root_vector(ib, node));
  GeneratedSubalgebra gen = generated_subalgebra(*ib.underlying, seeds);
  std::vector<Vector> replay;
  for (const auto& el : gen.elements) {
    if (el.seed)
      replay.push_back(node_root_vector(ib, theta.perm[*el.seed]));
    else
      replay.push_back(bracket_of(*ib.underlying, replay[el.left], replay[el.right]));
    sources.push_back(el.vector);
    images.push_back(replay.back());
  }
  if (sources.size() != n) throw FalsificationError("X_alpha and h do not span Ib");
  auto inv = inverse(Matrix::from_columns(sources, n));
  if (!inv) throw FalsificationError("X_alpha and h are not a basis of Ib");
  AlgebraMap m = make_map(ib.underlying, ib.underlying, Matrix::from_columns(images, n) * *inv);
  if (!check_homomorphism(m) || !m.verified_bijective)
    throw FalsificationError("lift of " + theta.label() + " is not an automorphism");
  return m;
}

}  // namespace bdouble
