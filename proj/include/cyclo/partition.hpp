// partition.hpp - partitions, multipartitions, boxes and ribbons.
//
// Boxes use 1-based (column, row) coordinates plus a 0-based component index.
// Everything here is independent of the Cherednik parameters.
#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cyclo {

class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; throws InputError unless weakly decreasing
  // and nonnegative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // Row length, 1-based; zero past the last row.
  int part(int row) const {
    return row >= 1 && row <= length() ? parts_[row - 1] : 0;
  }
  int column_length(int col) const;
  Partition conjugate() const;

  bool operator==(const Partition&) const = default;
  // Canonical order: size ascending, then parts lexicographically descending.
  std::strong_ordering operator<=>(const Partition& other) const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Componentwise sum of parts: (lambda + mu)_i = lambda_i + mu_i.
Partition operator+(const Partition& a, const Partition& b);
// Every part multiplied by k.
Partition scale(const Partition& p, int k);

struct Box {
  int x = 1;     // column
  int y = 1;     // row
  int comp = 0;  // component index

  int content() const { return x - y; }
  bool operator==(const Box&) const = default;
  auto operator<=>(const Box&) const = default;
};

class Multipartition {
 public:
  Multipartition() = default;
  // The empty multipartition of the given level.
  explicit Multipartition(int level);
  explicit Multipartition(std::vector<Partition> components);

  int level() const { return static_cast<int>(components_.size()); }
  int size() const { return size_; }
  const Partition& operator[](int i) const { return components_.at(i); }
  const std::vector<Partition>& components() const { return components_; }
  Multipartition with_component(int i, Partition p) const;

  bool operator==(const Multipartition&) const = default;
  // Canonical order: size ascending, then the component sequence
  // lexicographically descending (component 0 compared first).
  std::strong_ordering operator<=>(const Multipartition& other) const;

 private:
  std::vector<Partition> components_;
  int size_ = 0;
};

// JSON-style compact text, e.g. "[[7,3,1],[2]]" and "[[]]" for the empty
// level-one multipartition.
std::string to_string(const Partition& p);
std::string to_string(const Multipartition& m);

std::vector<Partition> enumerate_partitions(int n);
// All of P_level(n) in canonical order.
std::vector<Multipartition> enumerate_multipartitions(int level, int n);
// Number of elements of P_level(n), by the generating-function recursion.
long count_multipartitions(int level, int n);

std::vector<Box> boxes(const Multipartition& m);
std::vector<Box> addable_boxes(const Partition& p, int comp = 0);
std::vector<Box> removable_boxes(const Partition& p, int comp = 0);
std::vector<Box> addable_boxes(const Multipartition& m);
std::vector<Box> removable_boxes(const Multipartition& m);
bool is_addable(const Multipartition& m, const Box& b);
bool is_removable(const Multipartition& m, const Box& b);

Multipartition add_box(const Multipartition& m, const Box& b);
Multipartition remove_box(const Multipartition& m, const Box& b);

Partition transpose(const Partition& p);
Multipartition transpose(const Multipartition& m);

struct Division {
  Partition quotient;   // nu'
  Partition remainder;  // nu''
};

// nu = e * nu' + nu'' row by row, with nu'' having every column length
// repeated fewer than e times (nu''_i - nu''_{i+1} < e). Computed bottom-up:
// each remainder row is the smallest value >= the row below it that is
// congruent to nu_i modulo e.
Division divide_with_remainder(const Partition& nu, int e);

enum class RibbonDirection { add, remove };

struct RibbonMove {
  Partition result;
  int height = 0;  // rows spanned minus one
  int sign() const { return height % 2 == 0 ? 1 : -1; }
  bool operator==(const RibbonMove&) const = default;
};

// Every partition reachable by adding (removing) one r-ribbon, i.e. a
// connected skew shape of r boxes without a 2x2 square, in canonical order.
std::vector<RibbonMove> ribbon_moves(const Partition& nu, int r, RibbonDirection dir);

}  // namespace cyclo
