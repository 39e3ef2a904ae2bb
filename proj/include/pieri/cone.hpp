#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pieri/diagrams.hpp"
#include "pieri/poset.hpp"

namespace pieri {

/// Upper-triangular array c(s, t), 1 <= s < t <= ell, stored in
/// lexicographic (s, t) order.
class PairArray {
 public:
  PairArray() = default;
  explicit PairArray(int ell) : ell_(ell), values_(static_cast<std::size_t>(ell * (ell - 1) / 2), 0) {}
  PairArray(int ell, std::vector<int> values);

  int ell() const { return ell_; }
  int at(int s, int t) const { return values_[slot(s, t)]; }
  int& at(int s, int t) { return values_[slot(s, t)]; }
  std::span<const int> values() const { return values_; }

  friend bool operator==(const PairArray&, const PairArray&) = default;
  friend auto operator<=>(const PairArray&, const PairArray&) = default;

 private:
  std::size_t slot(int s, int t) const;

  int ell_ = 0;
  std::vector<int> values_;
};

/// Grading label of a cone point: top row F, bottom row D, tensor degrees P.
struct MultiDegree {
  YoungDiagram f;
  YoungDiagram d;
  Composition p;

  std::string to_string() const;
  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
};

/// Block label (E, A, B, C) that splits a fiber into Kostka-product pieces.
struct BlockKey {
  YoungDiagram e;
  Composition a;
  Composition b;
  PairArray c;

  friend bool operator==(const BlockKey&, const BlockKey&) = default;
  friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};

struct Functionals {
  Composition a;
  Composition b;
  PairArray c;
  Composition p;
};

/// Order-preserving nonnegative integer function on the poset, stored as a
/// value vector in the poset's canonical element order.
class ConePoint {
 public:
  /// Validates membership; throws pieri::Error otherwise.
  ConePoint(PosetPtr poset, std::vector<int> values);
  static ConePoint zero(PosetPtr poset);
  static ConePoint from_map(PosetPtr poset, const std::map<GammaElement, int>& values);

  const GammaPoset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }
  std::span<const int> values() const { return values_; }
  int value(const GammaElement& e) const { return values_[poset_->index_of(e)]; }
  int max_value() const;

  friend bool operator==(const ConePoint& a, const ConePoint& b) {
    return *a.poset_ == *b.poset_ && a.values_ == b.values_;
  }
  friend bool operator<(const ConePoint& a, const ConePoint& b) { return a.values_ < b.values_; }

 private:
  PosetPtr poset_;
  std::vector<int> values_;
};

bool is_member(const GammaPoset& poset, std::span<const int> values);
/// Throws pieri::Error when an element of the poset has no value.
bool is_member(const GammaPoset& poset, const std::map<GammaElement, int>& values);

/// Values on gamma row `level`, in index order.
Composition row(const ConePoint& f, int level);

Functionals functionals(const ConePoint& f);

/// p_i = a_i + b_i + sum of c over pairs containing i.
Composition s_of_abc(const Composition& a, const Composition& b, const PairArray& c);

MultiDegree degree_of(const ConePoint& f);
BlockKey block_of(const ConePoint& f);

/// Lattice points of the fiber polytope with top row F, bottom row D and
/// degrees P, in lexicographic order of their value vectors.
std::vector<ConePoint> enumerate_fiber(const PosetPtr& poset, const YoungDiagram& f, const YoungDiagram& d,
                                       const Composition& p);

ConePoint add(const ConePoint& f, const ConePoint& g);
inline ConePoint operator+(const ConePoint& f, const ConePoint& g) { return add(f, g); }

/// Random member with values <= max_value: elements are visited from the top
/// of the order down, each drawing uniformly below the minimum of its
/// already-assigned upper neighbours.
ConePoint random_member(const PosetPtr& poset, int max_value, std::mt19937_64& rng);

}  // namespace pieri
