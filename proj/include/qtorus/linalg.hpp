#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtorus/scalar.hpp"

namespace qtorus {

/// Sparse vector over Q(mu): (index, value) pairs sorted by index, no zeros.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec make_sparse(std::vector<std::pair<int, Scalar>> entries);
SparseVec axpy(const SparseVec& y, const Scalar& a, const SparseVec& x);  // y + a x
Scalar sparse_at(const SparseVec& v, int index);
std::vector<Scalar> to_dense(const SparseVec& v, int size);

struct MatrixEntry {
  int row;
  int col;
  Scalar value;
};

/// Coordinate-list matrix. add() accumulates and drops zeros on finalize().
class SparseMatrix {
 public:
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  /// Throws std::out_of_range on a bad index.
  void add(int row, int col, const Scalar& value);
  const std::vector<MatrixEntry>& entries() const;

  std::vector<SparseVec> row_vectors() const;
  std::vector<SparseVec> column_vectors() const;
  SparseVec multiply(const SparseVec& x) const;
  static SparseMatrix diagonal(const std::vector<Scalar>& d);
  static SparseMatrix from_rows(int cols, const std::vector<SparseVec>& rows);

 private:
  void finalize() const;
  int rows_;
  int cols_;
  mutable std::vector<MatrixEntry> entries_;
  mutable bool dirty_ = false;
};

enum class Backend {
  FractionFree,  // polynomial rows over Z[mu], OpenMP across each pivot bucket
  Reference,     // serial field arithmetic over Q(mu)
};

/// Row echelon form of a list of row vectors: each row has pivot coefficient
/// 1, pivots strictly increase. The column order is the caller's index order;
/// the pivot of a row is its first nonzero column.
struct EchelonForm {
  int cols = 0;
  std::vector<SparseVec> rows;
  std::vector<int> pivots;

  int rank() const { return static_cast<int>(rows.size()); }
  bool is_pivot(int col) const;
  std::vector<int> non_pivot_columns() const;
  /// Unique vector in v + rowspace vanishing on every pivot column.
  SparseVec reduce(SparseVec v) const;
  bool in_span(const SparseVec& v) const { return reduce(v).empty(); }
  /// Clears every pivot column above its pivot row (reduced echelon form).
  void make_reduced();
};

EchelonForm echelonize(const std::vector<SparseVec>& rows, int cols, Backend backend = Backend::FractionFree);

struct RankKernel {
  int rank = 0;
  std::vector<SparseVec> kernel_basis;
};

/// Rank and nullspace basis (one vector per free column, free entry 1).
RankKernel rank_and_kernel(const SparseMatrix& m, Backend backend = Backend::FractionFree);

/// Particular solution of m x = rhs with all free unknowns zero; pivots are
/// taken at the lowest-index unknowns. nullopt when rhs is not in the column
/// space.
std::optional<SparseVec> solve_linear(const SparseMatrix& m, const SparseVec& rhs,
                                      Backend backend = Backend::FractionFree);

struct QuotientResult {
  int dim = 0;
  std::vector<int> representative_indices;
};

/// Dimension of K^ambient / span(generators) and the non-pivot coordinates.
QuotientResult quotient_dimension(int ambient, const std::vector<SparseVec>& generators,
                                  Backend backend = Backend::FractionFree);

/// Irrational deformation parameter used by the floating-point oracle.
class Theta {
 public:
  /// Accepts "sqrt2m1" or "golden"; anything else (rationals such as "1/3"
  /// included) throws std::invalid_argument.
  static Theta parse(const std::string& name);
  static Theta sqrt2m1();
  static Theta golden();

  const std::string& name() const { return name_; }
  double value() const { return value_; }

 private:
  Theta(std::string name, double value) : name_(std::move(name)), value_(value) {}
  std::string name_;
  double value_;
};

/// Rank of m with mu = exp(i pi theta), by singular values above 1e-8 times
/// the largest one.
int numeric_rank(const SparseMatrix& m, const Theta& theta);
int numeric_rank(const std::vector<SparseVec>& rows, int cols, const Theta& theta);

}  // namespace qtorus
