#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "qtorus/linalg.hpp"

namespace qtorus {

Theta Theta::sqrt2m1() { return Theta("sqrt2m1", std::sqrt(2.0) - 1.0); }
Theta Theta::golden() { return Theta("golden", (std::sqrt(5.0) - 1.0) / 2.0); }

Theta Theta::parse(const std::string& name) {
  if (name == "sqrt2m1") return sqrt2m1();
  if (name == "golden") return golden();
  throw std::invalid_argument("theta must be one of sqrt2m1|golden (rational values make lambda a root of unity): '" +
                              name + "'");
}

int numeric_rank(const std::vector<SparseVec>& rows, int cols, const Theta& theta) {
  if (rows.empty() || cols == 0) return 0;
  const std::complex<double> mu = std::polar(1.0, M_PI * theta.value());
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) a(static_cast<Eigen::Index>(r), c) = v.eval(mu);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cutoff = 1e-8 * s(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cutoff) ++rank;
  return rank;
}

int numeric_rank(const SparseMatrix& m, const Theta& theta) { return numeric_rank(m.row_vectors(), m.cols(), theta); }

}  // namespace qtorus
