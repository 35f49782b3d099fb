#include "qtorus/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qtorus {

SparseVec make_sparse(std::vector<std::pair<int, Scalar>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [i, v] : entries) {
    if (!out.empty() && out.back().first == i)
      out.back().second += v;
    else
      out.emplace_back(i, std::move(v));
    if (out.back().second.is_zero()) out.pop_back();
  }
  return out;
}

namespace {

// y + a x for sorted sparse rows over any coefficient type with the usual ops.
template <class E>
std::vector<std::pair<int, E>> merge_axpy(const std::vector<std::pair<int, E>>& y, const E& ay, const E& a,
                                          const std::vector<std::pair<int, E>>& x) {
  std::vector<std::pair<int, E>> out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.emplace_back(y[i].first, ay * y[i].second);
      ++i;
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      E v = ay * y[i].second + a * x[j].second;
      if (!v.is_zero()) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseVec axpy(const SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a.is_zero()) return y;
  return merge_axpy<Scalar>(y, Scalar(1), a, x);
}

Scalar sparse_at(const SparseVec& v, int index) {
  auto it = std::lower_bound(v.begin(), v.end(), index, [](const auto& e, int i) { return e.first < i; });
  if (it != v.end() && it->first == index) return it->second;
  return Scalar();
}

std::vector<Scalar> to_dense(const SparseVec& v, int size) {
  std::vector<Scalar> out(static_cast<std::size_t>(size));
  for (const auto& [i, c] : v) out.at(static_cast<std::size_t>(i)) = c;
  return out;
}

void SparseMatrix::add(int row, int col, const Scalar& value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) throw std::out_of_range("matrix index out of range");
  if (value.is_zero()) return;
  entries_.push_back({row, col, value});
  dirty_ = true;
}

void SparseMatrix::finalize() const {
  if (!dirty_) return;
  std::sort(entries_.begin(), entries_.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<MatrixEntry> out;
  for (auto& e : entries_) {
    if (!out.empty() && out.back().row == e.row && out.back().col == e.col)
      out.back().value += e.value;
    else
      out.push_back(std::move(e));
    if (out.back().value.is_zero()) out.pop_back();
  }
  entries_ = std::move(out);
  dirty_ = false;
}

const std::vector<MatrixEntry>& SparseMatrix::entries() const {
  finalize();
  return entries_;
}

std::vector<SparseVec> SparseMatrix::row_vectors() const {
  std::vector<SparseVec> out(static_cast<std::size_t>(rows_));
  for (const auto& e : entries()) out[static_cast<std::size_t>(e.row)].emplace_back(e.col, e.value);
  return out;
}

std::vector<SparseVec> SparseMatrix::column_vectors() const {
  std::vector<SparseVec> out(static_cast<std::size_t>(cols_));
  for (const auto& e : entries()) out[static_cast<std::size_t>(e.col)].emplace_back(e.row, e.value);
  return out;
}

SparseVec SparseMatrix::multiply(const SparseVec& x) const {
  std::vector<std::pair<int, Scalar>> acc;
  for (const auto& e : entries()) {
    Scalar xv = sparse_at(x, e.col);
    if (!xv.is_zero()) acc.emplace_back(e.row, e.value * xv);
  }
  return make_sparse(std::move(acc));
}

SparseMatrix SparseMatrix::diagonal(const std::vector<Scalar>& d) {
  const int n = static_cast<int>(d.size());
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.add(i, i, d[static_cast<std::size_t>(i)]);
  return m;
}

SparseMatrix SparseMatrix::from_rows(int cols, const std::vector<SparseVec>& rows) {
  SparseMatrix m(static_cast<int>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) m.add(static_cast<int>(r), c, v);
  return m;
}

bool EchelonForm::is_pivot(int col) const { return std::binary_search(pivots.begin(), pivots.end(), col); }

std::vector<int> EchelonForm::non_pivot_columns() const {
  std::vector<int> out;
  std::size_t k = 0;
  for (int c = 0; c < cols; ++c) {
    if (k < pivots.size() && pivots[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

SparseVec EchelonForm::reduce(SparseVec v) const {
  for (std::size_t r = 0; r < rows.size() && !v.empty(); ++r) {
    if (v.back().first < pivots[r]) break;
    Scalar a = sparse_at(v, pivots[r]);
    if (!a.is_zero()) v = axpy(v, -a, rows[r]);
  }
  return v;
}

void EchelonForm::make_reduced() {
  for (int r = rank() - 2; r >= 0; --r) {
    SparseVec& row = rows[static_cast<std::size_t>(r)];
    for (std::size_t s = static_cast<std::size_t>(r) + 1; s < rows.size(); ++s) {
      Scalar a = sparse_at(row, pivots[s]);
      if (!a.is_zero()) row = axpy(row, -a, rows[s]);
    }
  }
}

namespace {

using PolyRow = std::vector<std::pair<int, Poly>>;

PolyRow to_poly_row(const SparseVec& v) {
  Poly l(1);
  for (const auto& [i, c] : v) {
    if (c.den() == l) continue;
    Poly g = Poly::gcd(l, c.den());
    l = Poly::divexact(l, g) * c.den();
  }
  PolyRow out;
  out.reserve(v.size());
  for (const auto& [i, c] : v) out.emplace_back(i, c.num() * Poly::divexact(l, c.den()));
  return out;
}

void make_primitive(PolyRow& row) {
  if (row.empty()) return;
  Poly g = row.front().second;
  for (std::size_t i = 1; i < row.size(); ++i) {
    if (g.degree() == 0 && abs(g.coeff(0)) == 1) break;
    g = Poly::gcd(g, row[i].second);
  }
  if (g.leading() < 0) g = -g;
  if (g == Poly(1)) return;
  for (auto& [i, c] : row) c = Poly::divexact(c, g);
}

int poly_cost(const Poly& p) { return p.degree() - p.valuation() + static_cast<int>(p.term_count()); }

// Shared bucket driver: repeatedly takes the smallest leading column, chooses
// the cheapest pivot row in that bucket (ties to the lowest row id) and clears
// the column from the remaining rows of the bucket.
template <class Row, class Cost, class Eliminate, class Finish>
EchelonForm bucket_eliminate(std::vector<Row> rows, int cols, Cost cost, Eliminate eliminate, Finish finish,
                             bool parallel) {
  std::map<int, std::vector<int>> buckets;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!rows[r].empty()) buckets[rows[r].front().first].push_back(static_cast<int>(r));

  EchelonForm ef;
  ef.cols = cols;
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    const int col = node.key();
    std::vector<int>& ids = node.mapped();
    std::sort(ids.begin(), ids.end());
    int best = ids.front();
    int best_cost = cost(rows[static_cast<std::size_t>(best)]);
    for (int id : ids) {
      int c = cost(rows[static_cast<std::size_t>(id)]);
      if (c < best_cost) {
        best = id;
        best_cost = c;
      }
    }
    const Row& pivot_row = rows[static_cast<std::size_t>(best)];
    std::vector<int> others;
    for (int id : ids)
      if (id != best) others.push_back(id);
    const long n_others = static_cast<long>(others.size());
#pragma omp parallel for schedule(dynamic) if (parallel && n_others > 8)
    for (long k = 0; k < n_others; ++k) eliminate(rows[static_cast<std::size_t>(others[static_cast<std::size_t>(k)])], pivot_row);
    for (int id : others) {
      const Row& r = rows[static_cast<std::size_t>(id)];
      if (!r.empty()) buckets[r.front().first].push_back(id);
    }
    ef.pivots.push_back(col);
    ef.rows.push_back(finish(pivot_row));
  }
  return ef;
}

}  // namespace

EchelonForm echelonize(const std::vector<SparseVec>& rows, int cols, Backend backend) {
  for (const auto& r : rows)
    for (const auto& [i, c] : r)
      if (i < 0 || i >= cols) throw std::out_of_range("echelonize: column index out of range");

  if (backend == Backend::Reference) {
    return bucket_eliminate(
        rows, cols, [](const SparseVec& r) { return r.front().second.weight(); },
        [](SparseVec& r, const SparseVec& p) {
          Scalar f = r.front().second / p.front().second;
          r = axpy(r, -f, p);
        },
        [](const SparseVec& p) {
          Scalar inv = p.front().second.inverse();
          SparseVec out = p;
          for (auto& [i, c] : out) c *= inv;
          return out;
        },
        false);
  }

  std::vector<PolyRow> prows;
  prows.reserve(rows.size());
  for (const auto& r : rows) {
    prows.push_back(to_poly_row(r));
    make_primitive(prows.back());
  }
  return bucket_eliminate(
      std::move(prows), cols, [](const PolyRow& r) { return poly_cost(r.front().second); },
      [](PolyRow& r, const PolyRow& p) {
        const Poly& a = r.front().second;
        const Poly& b = p.front().second;
        Poly g = Poly::gcd(a, b);
        Poly fr = Poly::divexact(b, g);
        Poly fp = -Poly::divexact(a, g);
        r = merge_axpy<Poly>(r, fr, fp, p);
        make_primitive(r);
      },
      [](const PolyRow& p) {
        SparseVec out;
        out.reserve(p.size());
        const Poly& lead = p.front().second;
        for (const auto& [i, c] : p) out.emplace_back(i, Scalar(c, lead));
        return out;
      },
      true);
}

RankKernel rank_and_kernel(const SparseMatrix& m, Backend backend) {
  EchelonForm ef = echelonize(m.row_vectors(), m.cols(), backend);
  RankKernel out;
  out.rank = ef.rank();
  for (int f : ef.non_pivot_columns()) {
    std::map<int, Scalar> x;
    x[f] = Scalar(1);
    for (int r = ef.rank() - 1; r >= 0; --r) {
      Scalar s;
      for (const auto& [j, a] : ef.rows[static_cast<std::size_t>(r)]) {
        if (j == ef.pivots[static_cast<std::size_t>(r)]) continue;
        auto it = x.find(j);
        if (it != x.end()) s += a * it->second;
      }
      if (!s.is_zero()) x[ef.pivots[static_cast<std::size_t>(r)]] = -s;
    }
    out.kernel_basis.emplace_back(x.begin(), x.end());
  }
  return out;
}

std::optional<SparseVec> solve_linear(const SparseMatrix& m, const SparseVec& rhs, Backend backend) {
  const int n = m.cols();
  std::vector<SparseVec> rows = m.row_vectors();
  for (const auto& [i, c] : rhs) {
    if (i < 0 || i >= m.rows()) throw std::out_of_range("solve_linear: rhs index out of range");
    rows[static_cast<std::size_t>(i)].emplace_back(n, c);
  }
  EchelonForm ef = echelonize(rows, n + 1, backend);
  if (!ef.pivots.empty() && ef.pivots.back() == n) return std::nullopt;
  std::map<int, Scalar> x;
  for (int r = ef.rank() - 1; r >= 0; --r) {
    const auto& row = ef.rows[static_cast<std::size_t>(r)];
    Scalar s;
    for (const auto& [j, a] : row) {
      if (j == ef.pivots[static_cast<std::size_t>(r)]) continue;
      if (j == n) {
        s += a;
        continue;
      }
      auto it = x.find(j);
      if (it != x.end()) s -= a * it->second;
    }
    if (!s.is_zero()) x[ef.pivots[static_cast<std::size_t>(r)]] = s;
  }
  return SparseVec(x.begin(), x.end());
}

QuotientResult quotient_dimension(int ambient, const std::vector<SparseVec>& generators, Backend backend) {
  EchelonForm ef = echelonize(generators, ambient, backend);
  return {ambient - ef.rank(), ef.non_pivot_columns()};
}

}  // namespace qtorus
