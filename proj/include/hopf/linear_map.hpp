#pragma once

#include <vector>

#include "hopf/field.hpp"

namespace hopf {

// Dense exact matrix between tensor-power basis spaces, row-major storage.
// Tensor index convention throughout the engine: the basis vector
// e_i (x) e_j of an n (x) m space has flat index i*m + j, applied
// recursively for higher powers.
class LinearMap {
 public:
  LinearMap() = default;

  static LinearMap zero(const Field& f, Index rows, Index cols);
  static LinearMap identity(const Field& f, Index n);
  // Column vector with a single 1 at position i.
  static LinearMap basis_column(const Field& f, Index dim, Index i);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar at(Index i, Index j) const;
  void set(Index i, Index j, const Scalar& v);
  void add_at(Index i, Index j, const Scalar& v);

  bool operator==(const LinearMap& o) const;
  bool is_zero() const;
  bool is_identity() const;
  Index nnz() const;

  LinearMap transpose() const;
  LinearMap column(Index j) const;  // rows x 1
  std::vector<std::pair<Index, Scalar>> column_entries(Index j) const;

  // Raw grids (exactly one is populated, by field kind).
  std::vector<mpq_class>& qdata() { return q_; }
  const std::vector<mpq_class>& qdata() const { return q_; }
  std::vector<std::uint64_t>& pdata() { return m_; }
  const std::vector<std::uint64_t>& pdata() const { return m_; }

 private:
  Field field_ = Field::rationals();
  Index rows_ = 0, cols_ = 0;
  std::vector<mpq_class> q_;
  std::vector<std::uint64_t> m_;
};

// Matrix product f*g, i.e. the composite "apply g first, then f".
LinearMap compose(const LinearMap& f, const LinearMap& g);
// Kronecker product realizing f (x) g under the row-major convention.
LinearMap kron(const LinearMap& f, const LinearMap& g);
LinearMap add(const LinearMap& a, const LinearMap& b);
LinearMap sub(const LinearMap& a, const LinearMap& b);
LinearMap neg(const LinearMap& a);
LinearMap scale(const Scalar& c, const LinearMap& a);

// The nm x nm permutation sending e_i (x) e_j to e_j (x) e_i.
LinearMap flip(const Field& f, Index n, Index m);

// Permutation of tensor factors: output slot k receives input factor
// src_of_dst[k]; dims are the input factor dimensions.
LinearMap tensor_permutation(const Field& f, const std::vector<Index>& dims,
                             const std::vector<std::size_t>& src_of_dst);

inline Index prod_dims(const std::vector<Index>& dims) {
  Index p = 1;
  for (Index d : dims) p *= d;
  return p;
}

}  // namespace hopf
