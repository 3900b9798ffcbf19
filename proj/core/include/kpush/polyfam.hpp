#pragma once

// Partitions, Schur and Grothendieck polynomials.

#include <string>
#include <string_view>
#include <vector>

#include "kpush/algebra.hpp"

namespace kpush {

class Partition {
 public:
  Partition() = default;
  // Throws InvalidArgument unless weakly decreasing and nonnegative. Trailing
  // zeros are dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // "[41]", "[0]" for the empty partition; "[10,2]" once a part exceeds 9.
  static Partition parse(std::string_view s);
  std::string to_string() const;

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  // i-th part, zero past the end.
  int part(int i) const { return i < length() ? parts_[i] : 0; }

  bool fits(int rows, int cols) const { return length() <= rows && (parts_.empty() || parts_[0] <= cols); }
  // Diagram containment.
  bool contained_in(const Partition& other) const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// All partitions with at most `rows` parts, each at most `cols`. Ordered by
// size; within a size up to `cols` the larger partition (lexicographically)
// comes first, beyond that the smaller one. For rows = 2, cols = 5 this is
// [0],[1],[2],[11],[3],[21],[4],[31],[22],[5],[41],[32],[33],[42],[51],...
std::vector<Partition> rectangle_partitions(int rows, int cols);

// Complement in the rows x cols rectangle: (cols - J_rows, ..., cols - J_1).
Partition complement(const Partition& j, int rows, int cols);

// Table x1, x2 used by schur_pair when none is given.
TablePtr schur_table();

// (x1^{a+1} x2^b - x2^{a+1} x1^b) / (x1 - x2) over a table containing x1, x2.
LaurentPolynomial schur_pair(int a, int b, const TablePtr& table = schur_table());
// Schur polynomial of a partition with at most two parts.
LaurentPolynomial schur_pair(const Partition& p, const TablePtr& table = schur_table());

// G_{ab} of the dual of a rank-2 bundle in the Grothendieck roots z1, z2 of
// the bundle:
//   (1-z1)^{a+1}(1-z2)^b / (1 - z1/z2) + (1-z2)^{a+1}(1-z1)^b / (1 - z2/z1).
LaurentPolynomial grothendieck_pair(int a, int b, const TablePtr& table);
LaurentPolynomial grothendieck_pair(const Partition& p, const TablePtr& table);

// Grothendieck polynomial of the partition in n variables: isobaric divided
// differences pi_{w0} applied to x^{lambda + delta}, then x_i -> 1 - 1/t_i.
// The table must contain t1..tn.
LaurentPolynomial grothendieck_general(const Partition& a, int n, const TablePtr& table);

// Same construction with the variables left as x_i (for tests).
LaurentPolynomial grothendieck_in_x(const Partition& a, int n, const TablePtr& x_table);

}  // namespace kpush
