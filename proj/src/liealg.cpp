#include "bdouble/liealg.hpp"

#include <algorithm>
#include <functional>

namespace bdouble {

Terms to_terms(const Vector& v) {
  Terms t;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) t.emplace_back(i, v[i]);
  return t;
}

Vector to_dense(const Terms& t, std::size_t dim) {
  Vector v = zero_vector(dim);
  for (const auto& [i, c] : t) v[i] += c;
  return v;
}

// ---------------------------------------------------------------------------
// LieAlgebra

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)), table_(labels_.size() * labels_.size()) {}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  if (i >= dim() || j >= dim() || value.size() != dim())
    throw InputError("set_bracket: index or size out of range");
  if (i == j) {
    if (!is_zero(value)) throw InputError("set_bracket: [b, b] must be zero");
    return;
  }
  table_[i * dim() + j] = to_terms(value);
  table_[j * dim() + i] = to_terms(Scalar(-1) * value);
}

void LieAlgebra::set_subspace(const std::string& name, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (!indices.empty() && indices.back() >= dim()) throw InputError("subspace index out of range");
  subspaces_[name] = std::move(indices);
}

const std::vector<std::size_t>& LieAlgebra::subspace(const std::string& name) const {
  auto it = subspaces_.find(name);
  if (it == subspaces_.end()) throw InputError("no subspace named '" + name + "' in " + name_);
  return it->second;
}

std::vector<Vector> LieAlgebra::subspace_vectors(const std::string& name) const {
  std::vector<Vector> out;
  for (auto i : subspace(name)) out.push_back(basis_vector(i));
  return out;
}

// ---------------------------------------------------------------------------
// Brackets

namespace {

void check_size(const LieAlgebra& g, const Vector& v) {
  if (v.size() != g.dim())
    throw InputError("vector of length " + std::to_string(v.size()) + " in algebra of dim " +
                     std::to_string(g.dim()));
}

// acc += c [b_i, v]
void add_bracket_with(const LieAlgebra& g, std::size_t i, const Vector& v, const Scalar& c, Vector& acc) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    Scalar cj = c * v[j];
    for (const auto& [k, s] : g.bracket_terms(i, j)) acc[k] += cj * s;
  }
}

Vector basis_bracket(const LieAlgebra& g, std::size_t i, std::size_t j) {
  return to_dense(g.bracket_terms(i, j), g.dim());
}

}  // namespace

Vector bracket_of(const LieAlgebra& g, const Vector& x, const Vector& y) {
  check_size(g, x);
  check_size(g, y);
  Vector acc = zero_vector(g.dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) add_bracket_with(g, i, y, x[i], acc);
  return acc;
}

Matrix ad_matrix(const LieAlgebra& g, const Vector& x) {
  check_size(g, x);
  const std::size_t n = g.dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, s] : g.bracket_terms(i, j)) m(k, j) += x[i] * s;
  }
  return m;
}

std::optional<JacobiWitness> check_jacobi(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Vector> br(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) br[i * n + j] = basis_bracket(g, i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector acc = zero_vector(n);
        add_bracket_with(g, i, br[j * n + k], 1, acc);
        add_bracket_with(g, j, br[k * n + i], 1, acc);
        add_bracket_with(g, k, br[i * n + j], 1, acc);
        if (!is_zero(acc)) return JacobiWitness{i, j, k, acc};
      }
  return std::nullopt;
}

bool is_antisymmetric(const LieAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (!g.bracket_terms(i, i).empty()) return false;
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Vector a = basis_bracket(g, i, j), b = basis_bracket(g, j, i);
      if (!is_zero(a + b)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Subspaces

std::vector<Vector> center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  SparseEliminator elim(n);
  // Row (i, k): x -> coefficient of b_k in [b_i, x].
  for (std::size_t i = 0; i < n; ++i) {
    Matrix rows(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, s] : g.bracket_terms(i, j)) rows(k, j) += s;
    for (std::size_t k = 0; k < n; ++k) elim.add_row(rows.row(k));
  }
  return elim.kernel_basis();
}

std::vector<Vector> bracket_span(const LieAlgebra& g, const std::vector<Vector>& left,
                                 const std::vector<Vector>& right) {
  std::vector<Vector> out;
  for (const auto& a : left)
    for (const auto& b : right) out.push_back(bracket_of(g, a, b));
  return span_basis(out, g.dim());
}

std::vector<Vector> derived_subalgebra(const LieAlgebra& g) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      if (!g.bracket_terms(i, j).empty()) out.push_back(basis_bracket(g, i, j));
  return span_basis(out, g.dim());
}

std::vector<Vector> normalizer(const LieAlgebra& g, const std::vector<Vector>& subspace) {
  const std::size_t n = g.dim();
  auto ann = annihilator(subspace, n);
  SparseEliminator elim(n);
  // x in N(S) iff a([s, x]) = 0 for every s in S, a in ann(S).
  for (const auto& s : subspace) {
    Matrix ad = ad_matrix(g, s);
    for (const auto& a : ann) {
      Vector row = zero_vector(n);
      for (std::size_t k = 0; k < n; ++k) {
        if (a[k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) row[j] += a[k] * ad(k, j);
      }
      elim.add_row(row);
    }
  }
  return elim.kernel_basis();
}

bool is_subalgebra(const LieAlgebra& g, const std::vector<Vector>& subspace) {
  auto basis = span_basis(subspace, g.dim());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!in_span(basis, bracket_of(g, basis[i], basis[j]))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& g, const std::vector<Vector>& subspace) {
  auto basis = span_basis(subspace, g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (const auto& s : basis)
      if (!in_span(basis, bracket_of(g, g.basis_vector(i), s))) return false;
  return true;
}

bool is_abelian(const LieAlgebra& g, const std::vector<Vector>& subspace) {
  for (std::size_t i = 0; i < subspace.size(); ++i)
    for (std::size_t j = i + 1; j < subspace.size(); ++j)
      if (!is_zero(bracket_of(g, subspace[i], subspace[j]))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Weights

std::vector<Vector> WeightDecomposition::weights() const {
  std::vector<Vector> out;
  for (const auto& s : spaces) out.push_back(s.weight);
  return out;
}

WeightDecomposition weight_decomposition(const LieAlgebra& g, const std::vector<Vector>& abelian) {
  for (const auto& c : abelian) check_size(g, c);
  if (!is_abelian(g, abelian)) throw InputError("weight_decomposition: subspace is not abelian");
  const std::size_t n = g.dim();

  std::vector<WeightSpace> parts;
  {
    WeightSpace all;
    for (std::size_t i = 0; i < n; ++i) all.basis.push_back(g.basis_vector(i));
    parts.push_back(std::move(all));
  }
  for (const auto& c : abelian) {
    Matrix ad = ad_matrix(g, c);
    std::vector<WeightSpace> next;
    for (const auto& part : parts) {
      const std::size_t k = part.basis.size();
      Matrix restricted(k, k);
      for (std::size_t j = 0; j < k; ++j) {
        auto coords = coordinates_in(part.basis, ad.apply(part.basis[j]));
        if (!coords) throw InputError("weight_decomposition: space not invariant");
        restricted.set_column(j, *coords);
      }
      for (const auto& lambda : rational_eigenvalues(restricted)) {
        Matrix shifted = restricted - lambda * Matrix::identity(k);
        WeightSpace sub;
        sub.weight = part.weight;
        sub.weight.push_back(lambda);
        for (const auto& coords : kernel_basis(shifted)) {
          Vector v = zero_vector(n);
          for (std::size_t j = 0; j < k; ++j)
            if (coords[j] != 0) v = v + coords[j] * part.basis[j];
          sub.basis.push_back(v);
        }
        next.push_back(std::move(sub));
      }
    }
    parts = std::move(next);
  }

  WeightDecomposition out;
  out.abelian = abelian;
  for (auto& p : parts) {
    p.basis = span_basis(p.basis, n);
    if (is_zero(p.weight))
      out.zero_space = std::move(p.basis);
    else
      out.spaces.push_back(std::move(p));
  }
  std::sort(out.spaces.begin(), out.spaces.end(),
            [](const WeightSpace& a, const WeightSpace& b) { return a.weight < b.weight; });
  return out;
}

bool is_ad_nilpotent(const LieAlgebra& g, const Vector& x) {
  Matrix p = ad_matrix(g, x);
  for (std::size_t power = 1; power < g.dim(); power *= 2) p = p * p;
  return p.is_zero();
}

// ---------------------------------------------------------------------------
// Generation

std::vector<Vector> GeneratedSubalgebra::basis() const {
  std::vector<Vector> out;
  for (const auto& e : elements) out.push_back(e.vector);
  return out;
}

GeneratedSubalgebra generated_subalgebra(const LieAlgebra& g, const std::vector<Vector>& seeds) {
  GeneratedSubalgebra out;
  SparseEliminator elim(g.dim());
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    check_size(g, seeds[s]);
    if (elim.add_row(seeds[s])) out.elements.push_back({seeds[s], s, 0, 0});
  }
  for (std::size_t k = 0; k < out.elements.size(); ++k)
    for (std::size_t l = 0; l < k; ++l) {
      Vector v = bracket_of(g, out.elements[l].vector, out.elements[k].vector);
      if (!is_zero(v) && elim.add_row(v)) out.elements.push_back({std::move(v), std::nullopt, l, k});
    }
  return out;
}

// ---------------------------------------------------------------------------
// Derivations

std::vector<Matrix> derivations(const LieAlgebra& g, DerivationOptions options) {
  const std::size_t n = g.dim();
  if (n > options.max_dim)
    throw CapExceeded("derivation solve for dim " + std::to_string(n) + " exceeds cap " +
                      std::to_string(options.max_dim));
  // Unknown D(a, b) (coefficient of b_a in D b_b) sits at a * n + b.
  auto var = [n](std::size_t a, std::size_t b) { return a * n + b; };
  // by_out[j][k]: pairs (a, c) with c the b_k-coefficient of [b_a, b_j].
  std::vector<std::vector<std::vector<std::pair<std::size_t, Scalar>>>> by_out(
      n, std::vector<std::vector<std::pair<std::size_t, Scalar>>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : g.bracket_terms(a, j)) by_out[j][k].emplace_back(a, c);

  SparseEliminator elim(n * n);
  std::map<std::size_t, Scalar> row;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // D[b_i, b_j] - [D b_i, b_j] - [b_i, D b_j], component k.
        row.clear();
        for (const auto& [m, c] : g.bracket_terms(i, j)) row[var(k, m)] += c;
        for (const auto& [a, c] : by_out[j][k]) row[var(a, i)] -= c;
        for (const auto& [a, c] : by_out[i][k]) row[var(a, j)] += c;
        SparseRow sparse;
        for (const auto& [col, c] : row)
          if (c != 0) sparse.emplace_back(col, c);
        if (!sparse.empty()) elim.add_row(sparse);
      }

  std::vector<Matrix> out;
  for (const auto& v : elim.kernel_basis()) {
    Matrix d(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) d(a, b) = v[var(a, b)];
    out.push_back(std::move(d));
  }
  return out;
}

bool is_derivation(const LieAlgebra& g, const Matrix& d) {
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n) throw InputError("is_derivation: matrix size mismatch");
  std::vector<Vector> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = d.column(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector lhs = d.apply(basis_bracket(g, i, j));
      Vector rhs = bracket_of(g, img[i], g.basis_vector(j)) + bracket_of(g, g.basis_vector(i), img[j]);
      if (lhs != rhs) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Maps

AlgebraMap make_map(AlgebraPtr source, AlgebraPtr target, Matrix matrix) {
  if (!source || !target) throw InputError("make_map: null algebra");
  if (matrix.rows() != target->dim() || matrix.cols() != source->dim())
    throw InputError("make_map: matrix is " + std::to_string(matrix.rows()) + "x" +
                     std::to_string(matrix.cols()) + ", expected " + std::to_string(target->dim()) +
                     "x" + std::to_string(source->dim()));
  AlgebraMap m;
  m.source = std::move(source);
  m.target = std::move(target);
  m.matrix = std::move(matrix);
  return m;
}

AlgebraMap identity_map(const AlgebraPtr& g) {
  AlgebraMap m = make_map(g, g, Matrix::identity(g->dim()));
  m.verified_homomorphism = m.verified_bijective = true;
  return m;
}

AlgebraMap compose(const AlgebraMap& outer, const AlgebraMap& inner) {
  if (outer.source->dim() != inner.target->dim()) throw InputError("compose: dimension mismatch");
  return make_map(inner.source, outer.target, outer.matrix * inner.matrix);
}

std::optional<std::pair<std::size_t, std::size_t>> homomorphism_defect(const AlgebraMap& m) {
  const LieAlgebra& src = *m.source;
  const LieAlgebra& tgt = *m.target;
  if (m.matrix.rows() != tgt.dim() || m.matrix.cols() != src.dim())
    throw InputError("homomorphism_defect: matrix size mismatch");
  std::vector<Vector> img(src.dim());
  for (std::size_t i = 0; i < src.dim(); ++i) img[i] = m.matrix.column(i);
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = i + 1; j < src.dim(); ++j) {
      Vector lhs = m.matrix.apply(basis_bracket(src, i, j));
      if (lhs != bracket_of(tgt, img[i], img[j])) return std::make_pair(i, j);
    }
  return std::nullopt;
}

bool check_homomorphism(AlgebraMap& m) {
  m.verified_homomorphism = !homomorphism_defect(m).has_value();
  m.verified_bijective = m.matrix.rows() == m.matrix.cols() && rank(m.matrix) == m.matrix.rows();
  return m.verified_homomorphism;
}

bool is_verified_automorphism(const AlgebraMap& m) {
  return m.verified_homomorphism && m.verified_bijective && m.source->dim() == m.target->dim();
}

AlgebraMap exp_ad(const AlgebraPtr& g, const Vector& x) {
  if (!is_ad_nilpotent(*g, x)) throw InputError("exp_ad: element is not ad-nilpotent");
  const std::size_t n = g->dim();
  Matrix a = ad_matrix(*g, x);
  Matrix sum = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = make_scalar(1, static_cast<long>(k)) * (term * a);
    if (term.is_zero()) break;
    sum = sum + term;
  }
  AlgebraMap m = make_map(g, g, std::move(sum));
  if (!check_homomorphism(m) || !m.verified_bijective)
    throw ConstructionError("exp_ad: result failed the automorphism check");
  return m;
}

Quotient quotient(const LieAlgebra& g, const std::vector<Vector>& ideal, const std::string& name) {
  for (const auto& v : ideal) check_size(g, v);
  if (!is_ideal(g, ideal)) throw InputError("quotient: subspace is not an ideal");
  const std::size_t n = g.dim();
  auto ideal_basis = span_basis(ideal, n);

  SparseEliminator elim(n);
  for (const auto& v : ideal_basis) elim.add_row(v);
  Quotient q;
  for (std::size_t i = 0; i < n; ++i)
    if (elim.add_row(g.basis_vector(i))) q.kept.push_back(i);

  std::vector<Vector> columns;
  for (auto i : q.kept) columns.push_back(g.basis_vector(i));
  columns.insert(columns.end(), ideal_basis.begin(), ideal_basis.end());
  auto inv = inverse(Matrix::from_columns(columns, n));
  if (!inv) throw ConstructionError("quotient: complement is not a basis");

  const std::size_t k = q.kept.size();
  q.projection = Matrix(k, n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n; ++c) q.projection(r, c) = (*inv)(r, c);

  std::vector<std::string> labels;
  for (auto i : q.kept) labels.push_back(g.labels()[i]);
  auto alg = std::make_shared<LieAlgebra>(name, labels);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      alg->set_bracket(a, b, q.projection.apply(basis_bracket(g, q.kept[a], q.kept[b])));
  q.algebra = alg;
  return q;
}

LieAlgebra permute_basis(const LieAlgebra& g, const std::vector<std::size_t>& perm) {
  const std::size_t n = g.dim();
  if (perm.size() != n) throw InputError("permute_basis: wrong permutation length");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw InputError("permute_basis: not a permutation");
    seen[p] = true;
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[perm[i]] = g.labels()[i];
  LieAlgebra out(g.name(), labels);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = zero_vector(n);
      for (const auto& [k, c] : g.bracket_terms(i, j)) v[perm[k]] = c;
      out.set_bracket(perm[i], perm[j], v);
    }
  for (const auto& [name, idx] : g.subspaces()) {
    std::vector<std::size_t> mapped;
    for (auto i : idx) mapped.push_back(perm[i]);
    out.set_subspace(name, mapped);
  }
  return out;
}

}  // namespace bdouble
