#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace pieri {

/// Young diagram stored as weakly decreasing row lengths with trailing zeros
/// trimmed, so the empty diagram has no rows.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> rows);
  YoungDiagram(std::initializer_list<int> rows) : YoungDiagram(std::vector<int>(rows)) {}

  std::span<const int> rows() const { return rows_; }
  /// Length of row i (0-based); rows past the end read as 0.
  int row(std::size_t i) const { return i < rows_.size() ? rows_[i] : 0; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int size() const;
  bool empty() const { return rows_.empty(); }
  bool contains(const YoungDiagram& inner) const;

  /// Row vector zero-padded (never truncated) to `length` entries.
  std::vector<int> padded(std::size_t length) const;

  std::string to_string() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> rows_;
};

/// Output order for diagram tables: by size, then reverse-lexicographic,
/// so (2) precedes (1,1).
struct DiagramOrder {
  bool operator()(const YoungDiagram& a, const YoungDiagram& b) const;
};

using DiagramTable = std::map<YoungDiagram, std::uint64_t, DiagramOrder>;

/// Fixed-length sequence of nonnegative integers; zeros are kept because the
/// position identifies a tensor factor.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
  static Composition zeros(std::size_t length) { return Composition(std::vector<int>(length, 0)); }

  std::span<const int> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int total() const;

  std::string to_string() const;

  friend Composition operator+(const Composition& a, const Composition& b);
  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

struct SkewShape {
  YoungDiagram outer;
  YoungDiagram inner;

  SkewShape(YoungDiagram outer_, YoungDiagram inner_ = {});
  int size() const { return outer.size() - inner.size(); }
  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

/// Filling of a skew shape. entries[r] holds the boxes of row r, i.e. columns
/// inner.row(r) .. outer.row(r)-1.
struct SkewTableau {
  SkewShape shape;
  std::vector<std::vector<int>> entries;

  bool is_semistandard() const;
  /// Multiplicities of the values 1..length.
  Composition content(std::size_t length) const;
  /// Entries row by row, top to bottom, left to right.
  std::vector<int> reading_word() const;

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
};

/// a interlaces b: a_j >= b_j >= a_{j+1} for all j.
bool interlaces(const YoungDiagram& a, const YoungDiagram& b);

/// Number of semistandard tableaux of the given skew shape and content.
/// Returns 0 when the content total does not match the number of boxes.
std::uint64_t kostka(const SkewShape& shape, const Composition& content);

/// All semistandard tableaux of the shape and content, sorted
/// lexicographically by reading word.
std::vector<SkewTableau> enumerate_skew_ssyt(const SkewShape& shape, const Composition& content);

/// Fills F_i / F_{i-1} with i. Throws unless each F_i interlaces F_{i-1}.
SkewTableau chain_to_tableau(std::span<const YoungDiagram> chain);
/// Inverse of chain_to_tableau; `steps` is the number of horizontal strips.
std::vector<YoungDiagram> tableau_to_chain(const SkewTableau& tableau, std::size_t steps);

/// Decomposition of rho^D (x) rho^(p_1) (x) ... (x) rho^(p_l) for GL_n.
DiagramTable gl_iterated_pieri(const YoungDiagram& d, const Composition& p, int n);

/// Dimension of the irreducible GL_n representation labelled by d.
std::uint64_t gl_dim(const YoungDiagram& d, int n);

/// Partitions of `total` with at most `max_rows` rows.
std::vector<YoungDiagram> partitions(int total, int max_rows);

/// Compositions of `total` with part i bounded by bounds[i].
std::vector<Composition> bounded_compositions(int total, std::span<const int> bounds);

}  // namespace pieri
