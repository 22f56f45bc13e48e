#include "bdouble/exactlinalg.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace bdouble {

Scalar make_scalar(long numerator, long denominator) {
  if (denominator == 0) throw InputError("zero denominator");
  Scalar s(numerator, denominator);
  s.canonicalize();
  return s;
}

Scalar parse_scalar(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(start), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  };
  auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-')
    throw InputError("not a rational number: '" + text + "'");
  Integer n(strip_plus(num)), d(strip_plus(den));
  if (d == 0) throw InputError("zero denominator in '" + text + "'");
  Scalar s(n, d);
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Scalar(0));
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(entries_.begin() + static_cast<long>(i * cols_),
                entries_.begin() + static_cast<long>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  if (v.size() != rows_) throw InputError("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw InputError("matrix/vector size mismatch");
  Vector r(rows_, Scalar(0));
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j] == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (a != 0) r[i] += a * v[j];
    }
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s == 0; });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product size mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj != 0) r(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum size mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference size mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
  return r;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r = m;
  for (auto& e : r.entries_) e *= s;
  return r;
}

// ---------------------------------------------------------------------------
// SparseEliminator

namespace {

using IntMap = std::map<std::size_t, Integer>;

void make_primitive(IntMap& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntMap to_integer_row(const SparseRow& row) {
  Integer l = 1;
  for (const auto& [c, v] : row) {
    if (v == 0) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  IntMap out;
  for (const auto& [c, v] : row) {
    if (v == 0) continue;
    Integer x = l / v.get_den();
    x *= v.get_num();
    out[c] += x;
    if (out[c] == 0) out.erase(c);
  }
  return out;
}

// row <- (p/g) row - (a/g) pivot, where p is the pivot's lead and a = row[col].
void eliminate(IntMap& row, std::size_t col,
               const std::vector<std::pair<std::size_t, Integer>>& pivot) {
  const Integer& lead = pivot.front().second;
  Integer a = row.at(col);
  Integer g;
  mpz_gcd(g.get_mpz_t(), lead.get_mpz_t(), a.get_mpz_t());
  Integer scale_row = lead / g;
  Integer scale_piv = a / g;
  if (scale_row != 1)
    for (auto& [c, v] : row) v *= scale_row;
  for (const auto& [c, v] : pivot) {
    auto it = row.find(c);
    if (it == row.end()) {
      row.emplace(c, -scale_piv * v);
    } else {
      it->second -= scale_piv * v;
      if (it->second == 0) row.erase(it);
    }
  }
}

}  // namespace

SparseEliminator::SparseEliminator(std::size_t cols) : cols_(cols), pivot_of_col_(cols, -1) {}

bool SparseEliminator::has_pivot(std::size_t col) const {
  return col < cols_ && pivot_of_col_[col] >= 0;
}

bool SparseEliminator::add_row(const SparseRow& row) {
  IntMap r = to_integer_row(row);
  if (!r.empty() && r.rbegin()->first >= cols_) throw InputError("row column out of range");
  auto it = r.begin();
  while (it != r.end()) {
    std::size_t c = it->first;
    long p = pivot_of_col_[c];
    if (p < 0) {
      ++it;
      continue;
    }
    eliminate(r, c, pivots_[static_cast<std::size_t>(p)]);
    make_primitive(r);
    it = r.upper_bound(c);
  }
  if (r.empty()) return false;
  make_primitive(r);
  if (r.begin()->second < 0)
    for (auto& [c, v] : r) v = -v;
  std::size_t lead = r.begin()->first;
  pivot_of_col_[lead] = static_cast<long>(pivots_.size());
  pivots_.emplace_back(r.begin(), r.end());
  return true;
}

bool SparseEliminator::add_row(const Vector& row) {
  if (row.size() != cols_) throw InputError("row length mismatch");
  SparseRow s;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) s.emplace_back(j, row[j]);
  return add_row(s);
}

std::vector<SparseEliminator::IntRow> SparseEliminator::fully_reduced() const {
  // Back substitution, largest lead column first; each row is cleared at the
  // pivot columns of rows that are already fully reduced.
  std::vector<std::size_t> order(pivots_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pivots_[a].front().first > pivots_[b].front().first;
  });
  std::vector<IntRow> reduced(pivots_.size());
  for (std::size_t idx : order) {
    IntMap r(pivots_[idx].begin(), pivots_[idx].end());
    std::size_t lead = r.begin()->first;
    auto it = r.upper_bound(lead);
    while (it != r.end()) {
      std::size_t c = it->first;
      long p = pivot_of_col_[c];
      if (p < 0) {
        ++it;
        continue;
      }
      eliminate(r, c, reduced[static_cast<std::size_t>(p)]);
      make_primitive(r);
      it = r.upper_bound(c);
    }
    if (r.begin()->second < 0)
      for (auto& [c, v] : r) v = -v;
    reduced[idx] = IntRow(r.begin(), r.end());
  }
  return reduced;
}

std::vector<Vector> SparseEliminator::kernel_basis() const {
  auto reduced = fully_reduced();
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivot_of_col_[f] >= 0) continue;
    Vector v(cols_, Scalar(0));
    v[f] = 1;
    for (const auto& row : reduced) {
      auto it = std::find_if(row.begin(), row.end(), [f](const auto& e) { return e.first == f; });
      if (it == row.end()) continue;
      Scalar x(it->second, row.front().second);
      x.canonicalize();
      v[row.front().first] = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> SparseEliminator::reduced_rows() const {
  auto reduced = fully_reduced();
  std::sort(reduced.begin(), reduced.end(),
            [](const IntRow& a, const IntRow& b) { return a.front().first < b.front().first; });
  std::vector<Vector> rows;
  for (const auto& row : reduced) {
    Vector v(cols_, Scalar(0));
    for (const auto& [c, x] : row) {
      Scalar s(x, row.front().second);
      s.canonicalize();
      v[c] = s;
    }
    rows.push_back(std::move(v));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Dense front ends

namespace {

SparseEliminator eliminate_rows(const Matrix& m) {
  SparseEliminator e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.add_row(m.row(i));
  return e;
}

}  // namespace

std::size_t rank(const Matrix& m) { return eliminate_rows(m).rank(); }

std::vector<Vector> kernel_basis(const Matrix& m) { return eliminate_rows(m).kernel_basis(); }

std::optional<Vector> solve_system(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw InputError("solve_system: right-hand side has wrong length");
  std::size_t n = m.cols();
  SparseEliminator e(n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vector row = m.row(i);
    row.push_back(b[i]);
    e.add_row(row);
  }
  if (e.has_pivot(n)) return std::nullopt;
  Vector x(n, Scalar(0));
  for (const auto& row : e.reduced_rows()) {
    std::size_t lead = 0;
    while (row[lead] == 0) ++lead;
    x[lead] = row[n];
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  std::size_t n = m.rows();
  SparseEliminator e(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector row = m.row(i);
    row.resize(2 * n, Scalar(0));
    row[n + i] = 1;
    e.add_row(row);
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!e.has_pivot(j)) return std::nullopt;
  Matrix inv(n, n);
  for (const auto& row : e.reduced_rows()) {
    std::size_t lead = 0;
    while (row[lead] == 0) ++lead;
    for (std::size_t j = 0; j < n; ++j) inv(lead, j) = row[n + j];
  }
  return inv;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  std::size_t n = m.rows();
  std::vector<Vector> a;
  for (std::size_t i = 0; i < n; ++i) a.push_back(m.row(i));
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Scalar f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim) {
  SparseEliminator e(dim);
  for (const auto& v : vectors) e.add_row(v);
  return e.reduced_rows();
}

std::size_t span_dimension(const std::vector<Vector>& vectors, std::size_t dim) {
  SparseEliminator e(dim);
  for (const auto& v : vectors) e.add_row(v);
  return e.rank();
}

bool in_span(const std::vector<Vector>& vectors, const Vector& v) {
  SparseEliminator e(v.size());
  for (const auto& w : vectors) e.add_row(w);
  return !e.add_row(v);
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim) {
  std::size_t ra = span_dimension(a, dim);
  if (ra != span_dimension(b, dim)) return false;
  std::vector<Vector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_dimension(both, dim) == ra;
}

std::optional<Vector> coordinates_in(const std::vector<Vector>& basis, const Vector& v) {
  if (basis.empty()) {
    if (is_zero(v)) return Vector{};
    return std::nullopt;
  }
  return solve_system(Matrix::from_columns(basis, v.size()), v);
}

std::vector<Vector> annihilator(const std::vector<Vector>& vectors, std::size_t dim) {
  SparseEliminator e(dim);
  for (const auto& v : vectors) e.add_row(v);
  return e.kernel_basis();
}

// ---------------------------------------------------------------------------
// Eigenvalues

namespace {

// All positive divisors of |n| (n != 0), found by trial division. The values
// fed here are products of small eigenvalues, so their prime factors are small;
// a large leftover cofactor is treated as prime, and any root missed because
// of that makes the split check below fail loudly.
std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Integer, unsigned>> factors;
  for (unsigned long p = 2; p < 100000 && Integer(p) * p <= n; ++p) {
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k) factors.emplace_back(Integer(p), k);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, k] : factors) {
    std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned e = 1; e <= k; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

Scalar evaluate(const std::vector<Integer>& coeffs, const Scalar& x) {
  Scalar acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + Scalar(*it);
  return acc;
}

}  // namespace

std::vector<Scalar> rational_eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("eigenvalues of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return {};

  // Minimal polynomial: first power of m dependent on the lower ones.
  auto flatten = [n](const Matrix& p) {
    Vector v(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = p(i, j);
    return v;
  };
  std::vector<Vector> powers{flatten(Matrix::identity(n))};
  Matrix current = Matrix::identity(n);
  Vector relation;
  for (std::size_t k = 1; k <= n; ++k) {
    current = current * m;
    Vector flat = flatten(current);
    auto sol = coordinates_in(powers, flat);
    if (sol) {
      relation = *sol;
      break;
    }
    powers.push_back(std::move(flat));
  }
  // x^k - sum relation_i x^i
  std::size_t degree = relation.size();
  std::vector<Scalar> poly(degree + 1);
  for (std::size_t i = 0; i < degree; ++i) poly[i] = -relation[i];
  poly[degree] = 1;

  Integer l = 1;
  for (const auto& c : poly) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> coeffs;
  for (const auto& c : poly) coeffs.push_back(Integer(c * l));

  std::vector<Scalar> roots;
  if (coeffs.front() == 0) {
    roots.push_back(0);
    coeffs.erase(coeffs.begin());
    if (coeffs.front() == 0)
      throw InputError("matrix is not diagonalizable (repeated eigenvalue 0)");
  }
  auto num_divs = divisors(coeffs.front());
  auto den_divs = divisors(coeffs.back());
  for (const auto& p : num_divs)
    for (const auto& q : den_divs)
      for (int sign : {1, -1}) {
        Scalar x(sign * p, q);
        x.canonicalize();
        if (std::find(roots.begin(), roots.end(), x) != roots.end()) continue;
        if (evaluate(coeffs, x) == 0) roots.push_back(x);
      }
  if (roots.size() != degree)
    throw InputError("matrix is not diagonalizable over Q with rational eigenvalues");
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace bdouble
