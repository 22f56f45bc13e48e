#include "bdouble/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace bdouble {

namespace {

bool rank_allowed(Family f, int r) {
  switch (f) {
    case Family::A: return r >= 1;
    case Family::B: return r >= 2;
    case Family::C: return r >= 2;
    case Family::D: return r >= 3;
    case Family::E: return r >= 6 && r <= 8;
    case Family::F: return r == 4;
    case Family::G: return r == 2;
  }
  return false;
}

char family_letter(Family f) { return static_cast<char>('A' + static_cast<int>(f)); }

}  // namespace

SimpleType::SimpleType(Family f, int r) : family(f), rank(r) {
  if (!rank_allowed(f, r))
    throw InputError(std::string("invalid rank ") + std::to_string(r) + " for type " +
                     family_letter(f));
}

std::string SimpleType::name() const { return family_letter(family) + std::to_string(rank); }

SimpleType parse_simple_type(const std::string& text) {
  if (text.size() < 2) throw InputError("unknown simple type '" + text + "'");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (letter < 'A' || letter > 'G') throw InputError("unknown simple type '" + text + "'");
  std::string digits = text.substr(1);
  if (digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
      }))
    throw InputError("unknown simple type '" + text + "'");
  return SimpleType(static_cast<Family>(letter - 'A'), std::stoi(digits));
}

IntMatrix cartan_matrix(const SimpleType& st) {
  const int r = st.rank;
  IntMatrix a(r, IntVector(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) {  // 1-based simple edge
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (st.family) {
    case Family::A:
      for (int i = 1; i < r; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < r - 1; ++i) link(i, i + 1);
      a[r - 2][r - 1] = -1;
      a[r - 1][r - 2] = -2;
      break;
    case Family::C:
      for (int i = 1; i < r - 1; ++i) link(i, i + 1);
      a[r - 2][r - 1] = -2;
      a[r - 1][r - 2] = -1;
      break;
    case Family::D:
      for (int i = 1; i < r - 1; ++i) link(i, i + 1);
      link(r - 2, r);
      break;
    case Family::E:
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < r; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(1, 2);
      link(3, 4);
      a[1][2] = -1;
      a[2][1] = -2;
      break;
    case Family::G:
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

// ---------------------------------------------------------------------------
// Root

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Root::is_positive() const {
  return std::any_of(coords.begin(), coords.end(), [](int c) { return c > 0; });
}

Root Root::operator-() const {
  Root r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

Root operator+(const Root& a, const Root& b) {
  Root r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Root operator-(const Root& a, const Root& b) { return a + (-b); }

Root operator*(int k, const Root& a) {
  Root r = a;
  for (auto& c : r.coords) c *= k;
  return r;
}

std::string to_string(const Root& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r.coords[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// RootSystem

int RootSystem::positive_index(const Root& r) const {
  auto it = std::lower_bound(positive_.begin(), positive_.end(), r, [](const Root& a, const Root& b) {
    int ha = a.height(), hb = b.height();
    return ha != hb ? ha < hb : a.coords < b.coords;
  });
  if (it != positive_.end() && *it == r) return static_cast<int>(it - positive_.begin());
  return -1;
}

bool RootSystem::is_root(const Root& r) const {
  return positive_index(r) >= 0 || positive_index(-r) >= 0;
}

int RootSystem::pairing_with_coroot(const Root& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += beta.coords[j] * cartan_[i][j];
  return s;
}

Scalar RootSystem::inner(const Root& a, const Root& b) const {
  Scalar s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < rank(); ++j)
      if (b.coords[j] != 0) s += a.coords[i] * b.coords[j] * symmetrizer_[i] * cartan_[i][j];
  }
  return s;
}

IntVector RootSystem::coroot_coords(const Root& alpha) const {
  Scalar len = inner(alpha, alpha);
  IntVector out(rank());
  for (int i = 0; i < rank(); ++i) {
    Scalar c = alpha.coords[i] * 2 * symmetrizer_[i] / len;
    if (c.get_den() != 1) throw ConstructionError("non-integral coroot coordinates");
    out[i] = static_cast<int>(c.get_num().get_si());
  }
  return out;
}

Root RootSystem::node_root(std::size_t node) const {
  if (node == 0) return lowest_root();
  Root r{IntVector(rank(), 0)};
  r.coords[node - 1] = 1;
  return r;
}

RootSystem generate_roots(const SimpleType& st) {
  RootSystem rs(st);
  const int r = st.rank;
  rs.cartan_ = cartan_matrix(st);

  // Symmetrizer d_i with d_i a_ij = d_j a_ji, found along the (connected) diagram.
  std::vector<Scalar> d(r, Scalar(0));
  d[0] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (d[i] != 0 && d[j] == 0 && rs.cartan_[i][j] != 0) {
          d[j] = d[i] * rs.cartan_[i][j] / rs.cartan_[j][i];
          changed = true;
        }
  }
  Scalar smallest = *std::min_element(d.begin(), d.end());
  for (auto& x : d) x /= smallest;
  rs.symmetrizer_ = d;

  // Height-by-height closure: beta + alpha_i is a root iff q > 0 in the
  // alpha_i-string p..q through beta, with p - q = <beta, alpha_i^vee>.
  std::vector<Root> layer;
  for (int i = 0; i < r; ++i) {
    Root s{IntVector(r, 0)};
    s.coords[i] = 1;
    layer.push_back(s);
  }
  std::vector<Root> all;
  auto known = [&](const Root& x) { return std::find(all.begin(), all.end(), x) != all.end(); };
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), [](const Root& a, const Root& b) { return a.coords < b.coords; });
    all.insert(all.end(), layer.begin(), layer.end());
    std::vector<Root> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < r; ++i) {
        Root ai{IntVector(r, 0)};
        ai.coords[i] = 1;
        if (beta == ai) continue;
        int p = 0;
        while (true) {
          Root down = beta - (p + 1) * ai;
          if (!down.is_positive() || !known(down)) break;
          ++p;
        }
        int q = p - rs.pairing_with_coroot(beta, i);
        Root up = beta + ai;
        if (q > 0 && std::find(next.begin(), next.end(), up) == next.end()) next.push_back(up);
      }
    }
    layer = std::move(next);
  }
  rs.positive_ = std::move(all);

  auto ext = extended_cartan_and_marks(rs);
  rs.extended_cartan_ = std::move(ext.matrix);
  rs.marks_ = std::move(ext.marks);
  return rs;
}

Root lowest_root(const RootSystem& rs) {
  // The unique root below every other root: minimal height among negatives.
  Root best = -rs.positive_roots().front();
  for (const auto& a : rs.positive_roots())
    if ((-a).height() < best.height()) best = -a;
  return best;
}

ExtendedCartanData extended_cartan_and_marks(const RootSystem& rs) {
  const std::size_t n = rs.node_count();
  ExtendedCartanData out;
  out.matrix.assign(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    Root ai = rs.node_root(i);
    Scalar len = rs.inner(ai, ai);
    for (std::size_t j = 0; j < n; ++j) {
      Scalar v = 2 * rs.inner(rs.node_root(j), ai) / len;
      if (v.get_den() != 1) throw ConstructionError("non-integral extended Cartan entry");
      out.matrix[i][j] = static_cast<int>(v.get_num().get_si());
    }
  }
  // Relation sum_i m_i node_i = 0 on h*: kernel of the r x (r+1) coordinate matrix.
  Matrix coords(static_cast<std::size_t>(rs.rank()), n);
  for (std::size_t j = 0; j < n; ++j) {
    Root a = rs.node_root(j);
    for (int i = 0; i < rs.rank(); ++i) coords(static_cast<std::size_t>(i), j) = a.coords[i];
  }
  auto ker = kernel_basis(coords);
  if (ker.size() != 1) throw ConstructionError("node roots do not satisfy a unique relation");
  Vector m = ker.front();
  Scalar scale = 1 / m[0];
  for (auto& x : m) {
    x *= scale;
    if (x.get_den() != 1 || x <= 0) throw ConstructionError("marks are not positive integers");
    out.marks.push_back(static_cast<int>(x.get_num().get_si()));
  }
  return out;
}

}  // namespace bdouble
