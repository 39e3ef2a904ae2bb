#include "pieri/polyring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "pieri/error.hpp"

namespace pieri {

PolyRing::PolyRing(int n, int k, int ell) : n_(n), k_(k), ell_(ell) {
  if (n < 1 || k < 1 || ell < 1) throw Error("ring parameters must be positive");
  y_offset_ = static_cast<std::size_t>(n * k);
  rxk_offset_ = y_offset_ + static_cast<std::size_t>(n * ell);
  rkk_offset_ = rxk_offset_ + static_cast<std::size_t>(k * ell);
  num_vars_ = rkk_offset_ + static_cast<std::size_t>(ell * (ell - 1) / 2);
}

bool PolyRing::contains(const Variable& v) const {
  switch (v.kind) {
    case Variable::Kind::x: return v.i >= 1 && v.i <= n_ && v.j >= 1 && v.j <= k_;
    case Variable::Kind::y: return v.i >= 1 && v.i <= n_ && v.j >= 1 && v.j <= ell_;
    case Variable::Kind::rxk: return v.i >= 1 && v.i <= k_ && v.j >= 1 && v.j <= ell_;
    case Variable::Kind::rkk: return v.i >= 1 && v.j > v.i && v.j <= ell_;
  }
  return false;
}

std::size_t PolyRing::index(const Variable& v) const {
  if (!contains(v)) throw Error("variable out of range for this ring");
  const auto i = static_cast<std::size_t>(v.i - 1);
  const auto j = static_cast<std::size_t>(v.j - 1);
  switch (v.kind) {
    case Variable::Kind::x: return j * static_cast<std::size_t>(n_) + i;
    case Variable::Kind::y: return y_offset_ + j * static_cast<std::size_t>(n_) + i;
    case Variable::Kind::rxk: return rxk_offset_ + j * static_cast<std::size_t>(k_) + i;
    case Variable::Kind::rkk: {
      std::size_t before = 0;
      for (int a = 1; a < v.i; ++a) before += static_cast<std::size_t>(ell_ - a);
      return rkk_offset_ + before + static_cast<std::size_t>(v.j - v.i - 1);
    }
  }
  return 0;
}

Variable PolyRing::variable(std::size_t index) const {
  if (index >= num_vars_) throw Error("variable index out of range");
  const auto n = static_cast<std::size_t>(n_);
  const auto k = static_cast<std::size_t>(k_);
  if (index < y_offset_) return Variable::x(static_cast<int>(index % n) + 1, static_cast<int>(index / n) + 1);
  if (index < rxk_offset_) {
    const auto r = index - y_offset_;
    return Variable::y(static_cast<int>(r % n) + 1, static_cast<int>(r / n) + 1);
  }
  if (index < rkk_offset_) {
    const auto r = index - rxk_offset_;
    return Variable::rxk(static_cast<int>(r % k) + 1, static_cast<int>(r / k) + 1);
  }
  auto r = index - rkk_offset_;
  for (int s = 1; s < ell_; ++s) {
    const auto width = static_cast<std::size_t>(ell_ - s);
    if (r < width) return Variable::rkk(s, s + 1 + static_cast<int>(r));
    r -= width;
  }
  throw Error("variable index out of range");
}

std::string PolyRing::name(std::size_t index) const {
  const auto v = variable(index);
  auto pair = [](char c, int a, int b) { return std::string(1, c) + "[" + std::to_string(a) + "," + std::to_string(b) + "]"; };
  switch (v.kind) {
    case Variable::Kind::x: return pair('x', v.i, v.j);
    case Variable::Kind::y: return pair('y', v.i, v.j);
    case Variable::Kind::rxk: return pair('r', v.i, k_ + v.j);
    case Variable::Kind::rkk: return pair('r', k_ + v.i, k_ + v.j);
  }
  return {};
}

void Monomial::set_exponent(std::size_t var, int e) {
  if (e < 0 || e > 0xFFFF) throw Error("exponent out of range");
  degree_ += e - exps_[var];
  exps_[var] = static_cast<std::uint16_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.exps_.size() != b.exps_.size()) throw Error("monomials from different rings");
  Monomial out(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) out.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] + b.exps_[i]);
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  const std::size_t n = std::min(ea.size(), eb.size());
  for (std::size_t i = 0; i < n; ++i)
    if (ea[i] != eb[i]) return ea[i] <=> eb[i];
  return ea.size() <=> eb.size();
}

namespace {

bool descending(const Term& a, const Term& b) { return compare_monomials(a.monomial, b.monomial) > 0; }

Monomial unit(const RingPtr& ring) { return Monomial(ring->num_vars()); }

}  // namespace

Polynomial Polynomial::constant(const RingPtr& ring, const Integer& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({unit(ring), c});
  return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, const Variable& v) {
  Polynomial p(ring);
  Monomial m = unit(ring);
  m.set_exponent(ring->index(v), 1);
  p.terms_.push_back({std::move(m), 1});
  return p;
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::vector<Term> terms) {
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  for (auto& t : terms) {
    if (t.monomial.num_vars() != ring->num_vars()) throw Error("monomial does not belong to the ring");
    acc[std::move(t.monomial)] += t.coefficient;
  }
  Polynomial p(ring);
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, std::move(c)});
  std::sort(p.terms_.begin(), p.terms_.end(), descending);
  return p;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw Error("leading monomial of the zero polynomial");
  return terms_.front().monomial;
}

const Integer& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error("leading coefficient of the zero polynomial");
  return terms_.front().coefficient;
}

Monomial leading_monomial(const Polynomial& p) { return p.leading_monomial(); }

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

namespace {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!(*a.ring() == *b.ring())) throw Error("polynomials from different rings");
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  Polynomial out(a.ring_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && descending(*ia, *ib))) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || descending(*ib, *ia)) {
      out.terms_.push_back(*ib++);
    } else {
      Integer c = ia->coefficient + ib->coefficient;
      if (c != 0) out.terms_.push_back({ia->monomial, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) acc[ta.monomial * tb.monomial] += ta.coefficient * tb.coefficient;
  Polynomial out(a.ring_);
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.push_back({m, std::move(c)});
  std::sort(out.terms_.begin(), out.terms_.end(), descending);
  return out;
}

Polynomial operator*(const Integer& c, const Polynomial& p) {
  Polynomial out(p.ring_);
  if (c == 0) return out;
  out.terms_ = p.terms_;
  for (auto& t : out.terms_) t.coefficient *= c;
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string monomial_to_string(const PolyRing& ring, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coefficient < 0;
    const Integer magnitude = negative ? Integer(-t.coefficient) : t.coefficient;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (t.monomial.is_one()) {
      os << magnitude;
    } else {
      if (magnitude != 1) os << magnitude << '*';
      os << monomial_to_string(*ring_, t.monomial);
    }
  }
  return os.str();
}

namespace {

Polynomial det_rec(const RingPtr& ring, const std::vector<std::vector<Polynomial>>& m, std::vector<std::size_t>& rows,
                   std::vector<bool>& used_cols) {
  if (rows.empty()) return Polynomial::constant(ring, 1);
  const std::size_t r = rows.front();
  rows.erase(rows.begin());
  Polynomial total(ring);
  // Expansion along the first remaining row; the sign alternates over the
  // remaining columns.
  int position = 0;
  for (std::size_t c = 0; c < m.size(); ++c) {
    if (used_cols[c]) continue;
    const int sign = (position++ % 2 == 0) ? 1 : -1;
    if (m[r][c].is_zero()) continue;
    used_cols[c] = true;
    Polynomial minor = det_rec(ring, m, rows, used_cols);
    used_cols[c] = false;
    if (minor.is_zero()) continue;
    Polynomial term = m[r][c] * minor;
    total = sign > 0 ? total + term : total - term;
  }
  rows.insert(rows.begin(), r);
  return total;
}

}  // namespace

Polynomial determinant(const RingPtr& ring, const std::vector<std::vector<Polynomial>>& matrix) {
  for (const auto& row : matrix)
    if (row.size() != matrix.size()) throw Error("determinant of a non-square matrix");
  std::vector<std::size_t> rows(matrix.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  std::vector<bool> used(matrix.size(), false);
  return det_rec(ring, matrix, rows, used);
}

Polynomial apply_derivation(const Derivation& d, const Polynomial& p) {
  const auto& ring = p.ring();
  std::vector<std::pair<std::size_t, const Polynomial*>> images;
  for (const auto& [v, image] : d) images.emplace_back(ring->index(v), &image);

  Polynomial out(ring);
  for (const auto& t : p.terms()) {
    for (const auto& [var, image] : images) {
      const int e = t.monomial.exponent(var);
      if (e == 0 || image->is_zero()) continue;
      Monomial rest = t.monomial;
      rest.set_exponent(var, e - 1);
      out = out + Polynomial::from_terms(ring, {{std::move(rest), t.coefficient * e}}) * *image;
    }
  }
  return out;
}

}  // namespace pieri
