#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bdouble/exactlinalg.hpp"

namespace bdouble {

using IntVector = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

enum class Family { A, B, C, D, E, F, G };

struct SimpleType {
  Family family;
  int rank;

  // Throws InputError when the rank is not allowed for the family.
  SimpleType(Family family, int rank);
  std::string name() const;  // "A2", "G2", ...
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

// Case-insensitive "A2", "d4", "E6". Throws InputError on anything else.
SimpleType parse_simple_type(const std::string& text);

// Standard Cartan matrix with a[i][j] = <alpha_j, alpha_i^vee>, rows indexed by
// the coroot, Bourbaki numbering (B: alpha_r short, C: alpha_r long,
// F4: alpha_1, alpha_2 long, G2: alpha_1 short).
IntMatrix cartan_matrix(const SimpleType& st);

struct Root {
  IntVector coords;  // simple-root coordinates

  int height() const;
  bool is_positive() const;
  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b);
  friend Root operator*(int k, const Root& a);
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

std::string to_string(const Root& r);

class RootSystem {
 public:
  const SimpleType& simple_type() const { return type_; }
  int rank() const { return type_.rank; }
  const IntMatrix& cartan() const { return cartan_; }
  // Ordered by height, then lexicographically on coordinates.
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& highest_root() const { return positive_.back(); }
  Root lowest_root() const { return -highest_root(); }
  const IntMatrix& extended_cartan() const { return extended_cartan_; }
  const IntVector& marks() const { return marks_; }

  // Index into positive_roots(), or -1.
  int positive_index(const Root& r) const;
  bool is_root(const Root& r) const;

  // <beta, alpha_i^vee>
  int pairing_with_coroot(const Root& beta, int i) const;
  // Invariant form on the root lattice; the shortest roots have (a, a) = 2.
  Scalar inner(const Root& a, const Root& b) const;
  // Coordinates of alpha^vee in the basis of simple coroots (integers).
  IntVector coroot_coords(const Root& alpha) const;

  // Number of extended-diagram nodes (rank + 1); node 0 is the lowest root.
  std::size_t node_count() const { return static_cast<std::size_t>(rank()) + 1; }
  // Finite part (restriction to h) of node i: alpha_0 for i = 0, alpha_i else.
  Root node_root(std::size_t node) const;

  friend RootSystem generate_roots(const SimpleType& st);

 private:
  explicit RootSystem(SimpleType st) : type_(st) {}

  SimpleType type_;
  IntMatrix cartan_;
  std::vector<Root> positive_;
  std::vector<Scalar> symmetrizer_;  // (alpha_i, alpha_i) / 2
  IntMatrix extended_cartan_;
  IntVector marks_;
};

// Closure of the simple roots under root strings.
RootSystem generate_roots(const SimpleType& st);

Root lowest_root(const RootSystem& rs);

struct ExtendedCartanData {
  IntMatrix matrix;  // (rank+1)^2, node 0 = alpha_0 + delta
  IntVector marks;   // mark of node 0 is 1
};

// Entries from pairings <beta, alpha^vee> of the node roots; marks from the
// unique positive integral relation among node roots restricted to h.
ExtendedCartanData extended_cartan_and_marks(const RootSystem& rs);

}  // namespace bdouble
