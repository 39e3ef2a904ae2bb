#include "pieri/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "pieri/error.hpp"

namespace pieri {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 0) throw Error("negative row length in Young diagram");
    if (i + 1 < rows_.size() && rows_[i] < rows_[i + 1])
      throw Error("Young diagram rows must be weakly decreasing");
  }
}

int YoungDiagram::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

bool YoungDiagram::contains(const YoungDiagram& inner) const {
  if (inner.num_rows() > num_rows()) return false;
  for (int i = 0; i < inner.num_rows(); ++i)
    if (inner.rows_[i] > rows_[i]) return false;
  return true;
}

std::vector<int> YoungDiagram::padded(std::size_t length) const {
  std::vector<int> out(rows_);
  if (out.size() < length) out.resize(length, 0);
  return out;
}

std::string YoungDiagram::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < rows_.size(); ++i) os << (i ? "," : "") << rows_[i];
  os << ')';
  return os.str();
}

bool DiagramOrder::operator()(const YoungDiagram& a, const YoungDiagram& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return b < a;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 0) throw Error("composition parts must be nonnegative");
}

int Composition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Composition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ']';
  return os.str();
}

Composition operator+(const Composition& a, const Composition& b) {
  if (a.size() != b.size()) throw Error("composition length mismatch");
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return Composition(std::move(out));
}

SkewShape::SkewShape(YoungDiagram outer_, YoungDiagram inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
  if (!outer.contains(inner)) throw Error("skew shape inner diagram must lie inside outer");
}

bool SkewTableau::is_semistandard() const {
  const auto rows = static_cast<std::size_t>(shape.outer.num_rows());
  if (entries.size() != rows) return false;
  for (std::size_t r = 0; r < rows; ++r) {
    const int lo = shape.inner.row(r);
    if (entries[r].size() != static_cast<std::size_t>(shape.outer.row(r) - lo)) return false;
    for (std::size_t i = 0; i < entries[r].size(); ++i) {
      if (entries[r][i] < 1) return false;
      if (i > 0 && entries[r][i - 1] > entries[r][i]) return false;
      if (r > 0) {
        const int col = lo + static_cast<int>(i);
        const int above_lo = shape.inner.row(r - 1);
        if (col >= above_lo && col < shape.outer.row(r - 1) &&
            entries[r - 1][col - above_lo] >= entries[r][i])
          return false;
      }
    }
  }
  return true;
}

Composition SkewTableau::content(std::size_t length) const {
  std::vector<int> counts(length, 0);
  for (const auto& row : entries)
    for (int v : row) {
      if (v < 1 || static_cast<std::size_t>(v) > length) throw Error("tableau entry outside content range");
      ++counts[v - 1];
    }
  return Composition(std::move(counts));
}

std::vector<int> SkewTableau::reading_word() const {
  std::vector<int> word;
  for (const auto& row : entries) word.insert(word.end(), row.begin(), row.end());
  return word;
}

bool interlaces(const YoungDiagram& a, const YoungDiagram& b) {
  const auto rows = static_cast<std::size_t>(std::max(a.num_rows(), b.num_rows()));
  for (std::size_t j = 0; j < rows; ++j)
    if (!(a.row(j) >= b.row(j) && b.row(j) >= a.row(j + 1))) return false;
  return true;
}

namespace {

// Column-by-column backtracking over the boxes of a skew shape. Each box is
// bounded below by its left neighbour (rows weak) and upper neighbour + 1
// (columns strict), and above by the number of boxes still to come below it
// in the same column.
class TableauFiller {
 public:
  TableauFiller(const SkewShape& shape, const Composition& content)
      : shape_(shape), remaining_(content.parts().begin(), content.parts().end()),
        max_value_(static_cast<int>(content.size())) {
    const int rows = shape.outer.num_rows();
    grid_.resize(rows);
    for (int r = 0; r < rows; ++r) grid_[r].assign(shape.outer.row(r), 0);
    const int cols = shape.outer.row(0);
    for (int c = 0; c < cols; ++c) {
      std::vector<int> column_rows;
      for (int r = 0; r < rows; ++r)
        if (in_shape(r, c)) column_rows.push_back(r);
      for (std::size_t i = 0; i < column_rows.size(); ++i) {
        boxes_.push_back({column_rows[i], c});
        below_.push_back(static_cast<int>(column_rows.size() - i - 1));
      }
    }
  }

  template <typename Visit>
  void run(Visit&& visit) {
    step(0, visit);
  }

  SkewTableau snapshot() const {
    SkewTableau t{shape_, {}};
    t.entries.resize(grid_.size());
    for (std::size_t r = 0; r < grid_.size(); ++r)
      t.entries[r].assign(grid_[r].begin() + shape_.inner.row(r), grid_[r].end());
    return t;
  }

 private:
  bool in_shape(int r, int c) const {
    return r >= 0 && c >= 0 && c >= shape_.inner.row(r) && c < shape_.outer.row(r);
  }

  template <typename Visit>
  void step(std::size_t i, Visit& visit) {
    if (i == boxes_.size()) {
      visit(*this);
      return;
    }
    const auto [r, c] = boxes_[i];
    int lo = 1;
    if (in_shape(r, c - 1)) lo = std::max(lo, grid_[r][c - 1]);
    if (in_shape(r - 1, c)) lo = std::max(lo, grid_[r - 1][c] + 1);
    const int hi = max_value_ - below_[i];
    for (int v = lo; v <= hi; ++v) {
      if (remaining_[v - 1] == 0) continue;
      --remaining_[v - 1];
      grid_[r][c] = v;
      step(i + 1, visit);
      ++remaining_[v - 1];
    }
    grid_[r][c] = 0;
  }

  const SkewShape& shape_;
  std::vector<int> remaining_;
  int max_value_;
  std::vector<std::vector<int>> grid_;
  std::vector<std::pair<int, int>> boxes_;
  std::vector<int> below_;
};

}  // namespace

std::uint64_t kostka(const SkewShape& shape, const Composition& content) {
  if (content.total() != shape.size()) return 0;
  std::uint64_t count = 0;
  TableauFiller filler(shape, content);
  filler.run([&](const TableauFiller&) { ++count; });
  return count;
}

std::vector<SkewTableau> enumerate_skew_ssyt(const SkewShape& shape, const Composition& content) {
  std::vector<SkewTableau> out;
  if (content.total() != shape.size()) return out;
  TableauFiller filler(shape, content);
  filler.run([&](const TableauFiller& f) { out.push_back(f.snapshot()); });
  std::sort(out.begin(), out.end(), [](const SkewTableau& a, const SkewTableau& b) {
    return a.reading_word() < b.reading_word();
  });
  return out;
}

SkewTableau chain_to_tableau(std::span<const YoungDiagram> chain) {
  if (chain.empty()) throw Error("empty chain");
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!interlaces(chain[i], chain[i - 1])) throw Error("not a horizontal-strip chain");
  SkewTableau t{SkewShape(chain.back(), chain.front()), {}};
  t.entries.resize(chain.back().num_rows());
  for (std::size_t r = 0; r < t.entries.size(); ++r)
    for (std::size_t i = 1; i < chain.size(); ++i)
      t.entries[r].insert(t.entries[r].end(), chain[i].row(r) - chain[i - 1].row(r), static_cast<int>(i));
  return t;
}

std::vector<YoungDiagram> tableau_to_chain(const SkewTableau& tableau, std::size_t steps) {
  if (!tableau.is_semistandard()) throw Error("tableau is not semistandard");
  std::vector<YoungDiagram> chain;
  chain.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    std::vector<int> rows(tableau.entries.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      rows[r] = tableau.shape.inner.row(r);
      for (int v : tableau.entries[r]) {
        if (static_cast<std::size_t>(v) > steps) throw Error("tableau entry exceeds chain length");
        if (static_cast<std::size_t>(v) <= i) ++rows[r];
      }
    }
    chain.emplace_back(std::move(rows));
  }
  return chain;
}

DiagramTable gl_iterated_pieri(const YoungDiagram& d, const Composition& p, int n) {
  if (n < 1) throw Error("n must be positive");
  if (d.num_rows() > n) throw Error("diagram has more rows than n");
  DiagramTable out;
  for (auto& f : partitions(d.size() + p.total(), n)) {
    if (!f.contains(d)) continue;
    if (auto m = kostka(SkewShape(f, d), p); m > 0) out.emplace(std::move(f), m);
  }
  return out;
}

std::uint64_t gl_dim(const YoungDiagram& d, int n) {
  using boost::multiprecision::cpp_int;
  if (n < 1) throw Error("n must be positive");
  if (d.num_rows() > n) throw Error("diagram has more rows than n");
  cpp_int num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= d.row(i) - d.row(j) + j - i;
      den *= j - i;
    }
  return static_cast<std::uint64_t>(num / den);
}

namespace {

void partitions_rec(int remaining, int max_part, int rows_left, std::vector<int>& cur,
                    std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (rows_left == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, rows_left - 1, cur, out);
    cur.pop_back();
  }
}

void compositions_rec(int remaining, std::span<const int> bounds, std::size_t i, std::vector<int>& cur,
                      std::vector<Composition>& out) {
  if (i == bounds.size()) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  int tail = 0;
  for (std::size_t j = i + 1; j < bounds.size(); ++j) tail += bounds[j];
  for (int v = std::max(0, remaining - tail); v <= std::min(remaining, bounds[i]); ++v) {
    cur[i] = v;
    compositions_rec(remaining - v, bounds, i + 1, cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<YoungDiagram> partitions(int total, int max_rows) {
  std::vector<YoungDiagram> out;
  if (total < 0 || max_rows < 0) return out;
  std::vector<int> cur;
  partitions_rec(total, total, max_rows, cur, out);
  return out;
}

std::vector<Composition> bounded_compositions(int total, std::span<const int> bounds) {
  std::vector<Composition> out;
  if (total < 0) return out;
  std::vector<int> cur(bounds.size(), 0);
  compositions_rec(total, bounds, 0, cur, out);
  return out;
}

}  // namespace pieri
