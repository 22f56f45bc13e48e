#include "bdouble/chevalley.hpp"

#include <functional>
#include <map>

namespace bdouble {

namespace {

using PairTable = std::map<std::pair<std::size_t, std::size_t>, int>;

// Positive-pair structure constants N_{a,b}, a + b a root, keyed by positive
// root indices. Filled height by height so every constant the special-pair
// formula needs has a smaller sum.
class ConstantSolver {
 public:
  explicit ConstantSolver(const RootSystem& rs) : rs_(rs) {}

  void solve() {
    const auto& pos = rs_.positive_roots();
    for (std::size_t s = 0; s < pos.size(); ++s) {
      const Root& xi = pos[s];
      std::optional<std::pair<std::size_t, std::size_t>> extra;
      for (std::size_t a = 0; a < pos.size(); ++a) {
        int b = rs_.positive_index(xi - pos[a]);
        if (b < 0 || a >= static_cast<std::size_t>(b)) continue;
        std::pair<std::size_t, std::size_t> key{a, static_cast<std::size_t>(b)};
        if (!extra) {
          extra = key;
          table_[key] = string_bound(pos[a], pos[key.second]) + 1;
        } else {
          table_[key] = special(pos[a], pos[key.second], pos[extra->first], pos[extra->second]);
        }
        table_[{key.second, key.first}] = -table_[key];
      }
    }
  }

  // General N_{a,b} from the positive table.
  int n(const Root& a, const Root& b) const {
    Root sum = a + b;
    if (!rs_.is_root(sum)) return 0;
    bool pa = a.is_positive(), pb = b.is_positive();
    if (pa && pb) return table_.at({index(a), index(b)});
    if (!pa && !pb) return -n(-a, -b);
    Root g = -sum;
    // N_{a,b}/(g,g) = N_{b,g}/(a,a) = N_{g,a}/(b,b) for a + b + g = 0.
    Scalar value = g.is_positive() == pb ? rs_.inner(g, g) / rs_.inner(a, a) * n(b, g)
                                         : rs_.inner(g, g) / rs_.inner(b, b) * n(g, a);
    if (value.get_den() != 1) throw ConstructionError("non-integral structure constant");
    return static_cast<int>(value.get_num().get_si());
  }

 private:
  std::size_t index(const Root& a) const { return static_cast<std::size_t>(rs_.positive_index(a)); }

  // Largest p with b - p a a root.
  int string_bound(const Root& a, const Root& b) const {
    int p = 0;
    while (rs_.is_root(b - (p + 1) * a)) ++p;
    return p;
  }

  // N_{a,b} for a special pair (a, b) with extraspecial pair (a1, b1) of the
  // same sum, from the four-root relation on a, b, -a1, -b1.
  int special(const Root& a, const Root& b, const Root& a1, const Root& b1) const {
    Root xi = a + b;
    Scalar t = 0;
    Root d1 = b - a1, d2 = a - a1;
    if (rs_.is_root(d1)) t += Scalar(n(b, -a1) * n(a, -b1)) / rs_.inner(d1, d1);
    if (rs_.is_root(d2)) t += Scalar(n(-a1, a) * n(b, -b1)) / rs_.inner(d2, d2);
    Scalar value = rs_.inner(xi, xi) / table_.at({index(a1), index(b1)}) * t;
    if (value.get_den() != 1) throw ConstructionError("non-integral structure constant");
    return static_cast<int>(value.get_num().get_si());
  }

  const RootSystem& rs_;
  PairTable table_;
};

}  // namespace

std::size_t ChevalleyAlgebra::root_vector(const Root& a) const {
  int k = roots->positive_index(a);
  if (k >= 0) return e(static_cast<std::size_t>(k));
  k = roots->positive_index(-a);
  if (k >= 0) return f(static_cast<std::size_t>(k));
  throw InputError(to_string(a) + " is not a root");
}

std::optional<Root> ChevalleyAlgebra::root_of(std::size_t index) const {
  const std::size_t p = positive_count(), r = rank();
  if (index < p) return roots->positive_roots()[index];
  if (index < p + r) return std::nullopt;
  if (index < dim()) return -roots->positive_roots()[index - p - r];
  throw InputError("basis index out of range");
}

int ChevalleyAlgebra::structure_constant(const Root& a, const Root& b) const {
  Root sum = a + b;
  if (!roots->is_root(sum)) return 0;
  auto coeff = bracket_of(*algebra, algebra->basis_vector(root_vector(a)),
                          algebra->basis_vector(root_vector(b)))[root_vector(sum)];
  return static_cast<int>(coeff.get_num().get_si());
}

void standard_subalgebras(LieAlgebra& g, std::size_t positive_count, std::size_t rank) {
  std::vector<std::size_t> h, n, nm;
  for (std::size_t i = 0; i < rank; ++i) h.push_back(positive_count + i);
  for (std::size_t k = 0; k < positive_count; ++k) {
    n.push_back(k);
    nm.push_back(positive_count + rank + k);
  }
  std::vector<std::size_t> b = n, bm = nm;
  b.insert(b.end(), h.begin(), h.end());
  bm.insert(bm.end(), h.begin(), h.end());
  g.set_subspace("h", h);
  g.set_subspace("n", n);
  g.set_subspace("n_minus", nm);
  g.set_subspace("b", b);
  g.set_subspace("b_minus", bm);
}

ChevalleyAlgebra build_simple(const RootSystem& rs) {
  ChevalleyAlgebra out;
  out.roots = std::make_shared<const RootSystem>(rs);
  const auto& pos = rs.positive_roots();
  const std::size_t p = pos.size(), r = static_cast<std::size_t>(rs.rank()), dim = 2 * p + r;

  std::vector<std::string> labels;
  for (const auto& a : pos) labels.push_back("E" + to_string(a));
  for (std::size_t i = 0; i < r; ++i) labels.push_back("H" + std::to_string(i + 1));
  for (const auto& a : pos) labels.push_back("F" + to_string(a));
  auto g = std::make_shared<LieAlgebra>(rs.simple_type().name(), labels);
  out.algebra = g;

  ConstantSolver solver(rs);
  solver.solve();

  for (std::size_t k = 0; k < p; ++k) {
    const Root& a = pos[k];
    for (std::size_t i = 0; i < r; ++i) {
      int c = rs.pairing_with_coroot(a, static_cast<int>(i));
      if (c == 0) continue;
      Vector v = zero_vector(dim);
      v[out.e(k)] = c;
      g->set_bracket(out.h(i), out.e(k), v);
      v = zero_vector(dim);
      v[out.f(k)] = -c;
      g->set_bracket(out.h(i), out.f(k), v);
    }
    Vector hv = zero_vector(dim);
    auto co = rs.coroot_coords(a);
    for (std::size_t i = 0; i < r; ++i) hv[out.h(i)] = co[i];
    g->set_bracket(out.e(k), out.f(k), hv);
  }

  std::vector<Root> signed_roots;
  for (const auto& a : pos) signed_roots.push_back(a);
  for (const auto& a : pos) signed_roots.push_back(-a);
  for (std::size_t x = 0; x < signed_roots.size(); ++x)
    for (std::size_t y = x + 1; y < signed_roots.size(); ++y) {
      const Root &a = signed_roots[x], &b = signed_roots[y];
      int nab = solver.n(a, b);
      if (nab == 0) continue;
      Vector v = zero_vector(dim);
      v[out.root_vector(a + b)] = nab;
      g->set_bracket(out.root_vector(a), out.root_vector(b), v);
    }

  standard_subalgebras(*g, p, r);
  if (auto w = check_jacobi(*g))
    throw ConstructionError("Chevalley table for " + g->name() + " fails Jacobi at (" +
                            std::to_string(w->i) + "," + std::to_string(w->j) + "," +
                            std::to_string(w->k) + ")");
  return out;
}

ChevalleyAlgebra build_simple(const SimpleType& st) { return build_simple(generate_roots(st)); }

Matrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_matrix(g, g.basis_vector(i)));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar t = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (ads[i](a, b) != 0 && ads[j](b, a) != 0) t += ads[i](a, b) * ads[j](b, a);
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

AlgebraMap cartan_involution(const ChevalleyAlgebra& g) {
  const std::size_t n = g.dim();
  Matrix m(n, n);
  for (std::size_t k = 0; k < g.positive_count(); ++k) {
    m(g.f(k), g.e(k)) = -1;
    m(g.e(k), g.f(k)) = -1;
  }
  for (std::size_t i = 0; i < g.rank(); ++i) m(g.h(i), g.h(i)) = -1;
  AlgebraMap out = make_map(g.algebra, g.algebra, std::move(m));
  if (!check_homomorphism(out) || !out.verified_bijective)
    throw ConstructionError("Cartan involution is not an automorphism of " + g.algebra->name());
  return out;
}

}  // namespace bdouble
