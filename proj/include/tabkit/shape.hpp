#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace tabkit {

// Weakly decreasing non-negative parts; trailing zeros are dropped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }
  std::vector<int> padded(int n) const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);
bool is_horizontal_strip(const Partition& outer, const Partition& inner);
bool is_vertical_strip(const Partition& outer, const Partition& inner);
// All partitions fitting in a rows x cols box.
std::vector<Partition> partitions_in_box(int rows, int cols);
// Partitions of n with at most max_rows rows (max_rows < 0: unbounded).
std::vector<Partition> partitions_of(int n, int max_rows = -1, int max_cols = -1);
// Complement of p inside (k^n) rotated; requires k >= p[0] and p.length() <= n.
Partition delta_shape(const Partition& p, int n, int k);
// Adds d to each of the first n parts.
Partition add_rect(const Partition& p, int n, int d);

struct SkewShape {
  Partition outer;
  Partition inner;
  int size() const { return outer.size() - inner.size(); }
  bool operator==(const SkewShape&) const = default;
};

// Weakly decreasing integer vector of fixed level.
class GenPartition {
 public:
  GenPartition() = default;
  explicit GenPartition(std::vector<int> parts);
  GenPartition(std::initializer_list<int> parts) : GenPartition(std::vector<int>(parts)) {}
  static GenPartition zero(int n) { return GenPartition(std::vector<int>(n, 0)); }
  static GenPartition pad(const Partition& p, int n);

  int level() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }
  int last() const { return parts_.empty() ? 0 : parts_.back(); }
  int degree() const;    // sum of parts
  int abs_size() const;  // sum of |parts|
  bool is_partition() const { return last() >= 0; }
  Partition to_partition() const;

  auto operator<=>(const GenPartition&) const = default;
  bool operator==(const GenPartition&) const = default;

 private:
  std::vector<int> parts_;
};

GenPartition star(const GenPartition& l);
std::pair<Partition, Partition> plus_minus(const GenPartition& l);
GenPartition add_rect(const GenPartition& l, int d);
GenPartition concat_levels(const GenPartition& a, const GenPartition& b);
// Number of cells in column col (col != 0) of the generalized diagram.
int column_length(const GenPartition& l, int col);
// Smallest d >= 0 with l + (d^n) a partition.
inline int min_shift(const GenPartition& l) { return l.last() < 0 ? -l.last() : 0; }
// All generalized partitions of level n with parts in [lo, hi].
std::vector<GenPartition> gen_partitions(int n, int lo, int hi);
GenPartition delta_shape(const GenPartition& l, int k);

std::string to_string(const Partition& p);
std::string to_string(const GenPartition& g);

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const GenPartition& g);
Partition partition_from_json(const nlohmann::json& j);
GenPartition gen_partition_from_json(const nlohmann::json& j);

}  // namespace tabkit
