#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pieri {

using Integer = boost::multiprecision::cpp_int;

/// Variables of the polynomial ring, 1-based:
///   x(i, j)   1 <= i <= n, 1 <= j <= k
///   y(i, j)   1 <= i <= n, 1 <= j <= ell
///   rxk(i, j) the variable r_{i, k+j}, 1 <= i <= k, 1 <= j <= ell
///   rkk(s, t) the variable r_{k+s, k+t}, 1 <= s < t <= ell
struct Variable {
  enum class Kind { x, y, rxk, rkk };

  Kind kind = Kind::x;
  int i = 0;
  int j = 0;

  static Variable x(int i, int j) { return {Kind::x, i, j}; }
  static Variable y(int i, int j) { return {Kind::y, i, j}; }
  static Variable rxk(int i, int j) { return {Kind::rxk, i, j}; }
  static Variable rkk(int s, int t) { return {Kind::rkk, s, t}; }

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Variable layout for fixed (n, k, ell). Variable indices follow the
/// monomial order, index 0 being the greatest variable:
///   x11 > x21 > ... > xn1 > x12 > ... > xnk
///   > y11 > ... > yn1 > y12 > ... > ynl
///   > r_{1,k+1} > ... > r_{k,k+1} > r_{1,k+2} > ... > r_{k,k+l}
///   > r_{k+1,k+2} > r_{k+1,k+3} > ... > r_{k+l-1,k+l}
class PolyRing {
 public:
  PolyRing(int n, int k, int ell);

  int n() const { return n_; }
  int k() const { return k_; }
  int ell() const { return ell_; }
  std::size_t num_vars() const { return num_vars_; }

  bool contains(const Variable& v) const;
  std::size_t index(const Variable& v) const;
  Variable variable(std::size_t index) const;
  /// x[i,j], y[i,j], or r[a,b] with the actual column indices of r.
  std::string name(std::size_t index) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.ell_ == b.ell_;
  }

 private:
  int n_, k_, ell_;
  std::size_t y_offset_, rxk_offset_, rkk_offset_, num_vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(int n, int k, int ell) { return std::make_shared<const PolyRing>(n, k, ell); }

/// Dense exponent vector indexed like PolyRing variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}

  std::size_t num_vars() const { return exps_.size(); }
  int exponent(std::size_t var) const { return exps_[var]; }
  void set_exponent(std::size_t var, int e);
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::span<const std::uint16_t> exponents() const { return exps_; }

  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  std::size_t hash() const;

 private:
  std::vector<std::uint16_t> exps_;
  int degree_ = 0;
};

/// Graded lexicographic comparison: total degree, then the first differing
/// exponent in variable order (larger exponent wins).
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial monomial;
  Integer coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse integer polynomial; terms sorted descending, no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const RingPtr& ring, const Integer& c);
  static Polynomial variable(const RingPtr& ring, const Variable& v);
  static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  /// Throws pieri::Error on the zero polynomial.
  const Monomial& leading_monomial() const;
  const Integer& leading_coefficient() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Integer& c, const Polynomial& p);
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Terms in descending order joined by " + " / " - ", factors by "*",
  /// powers as "^e", e.g. "x[1,1]*y[2,1] - x[2,1]*y[1,1]". Zero prints "0".
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string monomial_to_string(const PolyRing& ring, const Monomial& m);

Monomial leading_monomial(const Polynomial& p);

/// Exact determinant by cofactor expansion. The 0x0 determinant is 1.
Polynomial determinant(const RingPtr& ring, const std::vector<std::vector<Polynomial>>& matrix);

/// Derivation given on generators; unlisted variables map to 0.
using Derivation = std::vector<std::pair<Variable, Polynomial>>;

Polynomial apply_derivation(const Derivation& d, const Polynomial& p);

}  // namespace pieri
