#include "hopf/subspace.hpp"

namespace hopf {

SubspaceBasis kernel_basis(const LinearMap& f) {
  const Index n = f.cols();
  RowReducer red(f.field(), n);
  red.add_all_rows(f);
  LinearMap r = red.rref();

  std::vector<Index> pivots;
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index k = 0; k < r.rows(); ++k) {
    for (Index j = 0; j < n; ++j) {
      if (!r.at(k, j).is_zero()) {
        pivots.push_back(j);
        is_pivot[static_cast<std::size_t>(j)] = true;
        break;
      }
    }
  }

  RowReducer canon(f.field(), n);
  for (Index j = 0; j < n; ++j) {
    if (is_pivot[static_cast<std::size_t>(j)]) continue;
    LinearMap x = LinearMap::zero(f.field(), n, 1);
    x.set(j, 0, Scalar::one(f.field()));
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      const Scalar c = r.at(static_cast<Index>(k), j);
      if (!c.is_zero()) x.set(pivots[k], 0, c.neg());
    }
    canon.add_column_as_row(x);
  }
  return SubspaceBasis{n, canon.rref()};
}

SubspaceBasis span_of_columns(const LinearMap& m) {
  RowReducer red(m.field(), m.rows());
  for (Index j = 0; j < m.cols(); ++j) red.add_column_as_row(m.column(j));
  return SubspaceBasis{m.rows(), red.rref()};
}

bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient != b.ambient) throw_shape("subspace_equal: ambient dimension mismatch");
  return a.rows == b.rows;
}

bool subspace_contains(const SubspaceBasis& a, const LinearMap& colvec) {
  if (colvec.rows() != a.ambient || colvec.cols() != 1)
    throw_shape("subspace_contains: ambient dimension mismatch");
  RowReducer red(a.field(), a.ambient);
  red.add_all_rows(a.rows);
  return red.in_row_space(colvec);
}

LinearMap inclusion_map(const SubspaceBasis& b) { return b.rows.transpose(); }

std::vector<LinearMap> basis_columns(const SubspaceBasis& b) {
  std::vector<LinearMap> out;
  out.reserve(static_cast<std::size_t>(b.dim()));
  for (Index k = 0; k < b.dim(); ++k) {
    LinearMap v = LinearMap::zero(b.field(), b.ambient, 1);
    for (Index j = 0; j < b.ambient; ++j) {
      Scalar s = b.rows.at(k, j);
      if (!s.is_zero()) v.set(j, 0, s);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace hopf
