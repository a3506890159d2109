#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

/// A partition: a weakly decreasing list of positive parts. The empty
/// partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// Parses "3,1,1". The empty string and "0" denote the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based); zero past the end.
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  bool is_rectangular() const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Transpose of the Young diagram.
Partition conjugate(const Partition& p);

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// True iff consecutive part differences (with a trailing zero) are all < e.
/// `std::nullopt` stands for e = infinity.
bool is_e_restricted(const Partition& p, std::optional<int> e);

/// The e-core, computed on an e-runner abacus of first-column hook lengths.
Partition e_core(const Partition& p, int e);

/// Hook length of the cell (row, col), both 0-based.
int hook_length(const Partition& p, int row, int col);

struct HookData {
  int largest_hook = 0;        // L
  int top_multiplicity = 0;    // b, multiplicity of the largest part
  int smallest_main_hook = 0;  // l
  std::vector<int> main_hooks; // l, l+1, ..., L
};

/// Largest hook, top-part multiplicity and main hooks. Throws on the empty partition.
HookData hook_data(const Partition& p);

/// An r-tuple of partitions (components may be empty).
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> components);
  /// Level-one multipartition.
  MultiPartition(const Partition& p);  // NOLINT(google-explicit-constructor)

  /// Parses "2,1|1"; components are separated by '|', and may be empty.
  static MultiPartition parse(std::string_view text);

  const std::vector<Partition>& components() const { return components_; }
  const Partition& component(int k) const { return components_[static_cast<std::size_t>(k)]; }
  int level() const { return static_cast<int>(components_.size()); }
  int size() const { return n_; }
  /// offsets()[k] = sum of the sizes of components before k.
  const std::vector<int>& offsets() const { return offsets_; }

  std::string to_string() const;

  auto operator<=>(const MultiPartition& o) const { return components_ <=> o.components_; }
  bool operator==(const MultiPartition& o) const { return components_ == o.components_; }

 private:
  std::vector<Partition> components_;
  std::vector<int> offsets_;
  int n_ = 0;
};

/// All multipartitions of n with r components.
std::vector<MultiPartition> multipartitions_of(int n, int r);

/// Dominance of multipartitions of the same size and level. Reflexive.
/// Throws std::invalid_argument on a size or level mismatch.
bool dominates(const MultiPartition& a, const MultiPartition& b);
/// Strict dominance: dominates(a, b) and a != b.
bool strictly_dominates(const MultiPartition& a, const MultiPartition& b);

/// Position of a node: component, row, column (all 0-based).
struct Node {
  int comp = 0;
  int row = 0;
  int col = 0;
  auto operator<=>(const Node&) const = default;
};

/// A filling of a multipartition shape by 1..n, stored as its reading word
/// (components in order, rows top to bottom, left to right).
class Tableau {
 public:
  Tableau(MultiPartition shape, std::vector<int> reading_word);

  const MultiPartition& shape() const { return shape_; }
  const std::vector<int>& reading_word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }

  int entry(const Node& node) const;
  Node node_of(int k) const { return nodes_[static_cast<std::size_t>(k - 1)]; }
  /// Column minus row of the node holding k.
  int content(int k) const;

  bool is_row_standard() const;
  bool is_standard() const;

  /// The tableau with entries i and i+1 interchanged.
  Tableau swapped(int i) const;

  /// "1 2/3|4": rows separated by '/', components by '|'.
  std::string to_string() const;

  auto operator<=>(const Tableau& o) const { return word_ <=> o.word_; }
  bool operator==(const Tableau& o) const { return shape_ == o.shape_ && word_ == o.word_; }

 private:
  MultiPartition shape_;
  std::vector<int> word_;
  std::vector<Node> nodes_;
};

enum class TableauFlavor { RowStandard, Standard };

/// The tableau filled with 1..n along rows, component by component.
Tableau initial_tableau(const MultiPartition& shape);

/// All tableaux of the requested flavor, sorted lexicographically by reading word.
std::vector<Tableau> tableaux(const MultiPartition& shape, TableauFlavor flavor);

/// A permutation of {1..n} acting on the right: (k)w = images()[k-1], and
/// (k)(uv) = ((k)u)v. Generator s_i swaps i and i+1.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);
  /// 1-based image list; throws unless it is a permutation of 1..n.
  explicit Permutation(std::vector<int> images);
  /// The product s_{i1} s_{i2} ... s_{ik}.
  static Permutation from_word(int n, std::span<const int> word);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  int length() const;
  /// A reduced expression (i1, ..., ik) with this = s_{i1} ... s_{ik}.
  std::vector<int> reduced_word() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& v) const;

  /// w s_i.
  Permutation times_generator(int i) const;
  /// s_i w.
  Permutation generator_times(int i) const;
  /// l(w s_i) < l(w).
  bool has_right_descent(int i) const;
  /// l(s_i w) < l(w).
  bool has_left_descent(int i) const;

  /// Lehmer-code rank in [0, n!).
  std::uint32_t rank() const;
  static Permutation unrank(int n, std::uint32_t rank);

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// The permutation d with t^lambda d = t (t row-standard).
Permutation d_of(const Tableau& t);

/// Indices i with s_i in the Young subgroup of the shape.
std::set<int> young_subgroup_generators(const MultiPartition& shape);

std::uint64_t factorial(int n);

}  // namespace hecke
