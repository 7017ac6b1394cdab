#pragma once

#include "hopf/linear_map.hpp"

namespace hopf {

// Multiplication in tensor powers of one algebra, with the sparse columns
// of the multiplication map cached once:
//   (a_1 (x) ... (x) a_k) * (b_1 (x) ... (x) b_k) = a_1 b_1 (x) ... (x) a_k b_k
class TensorAlgebra {
 public:
  explicit TensorAlgebra(const LinearMap& mul);

  const Field& field() const { return field_; }
  Index dim() const { return n_; }

  // u, v, result: n^k x 1 columns.
  LinearMap mult(int k, const LinearMap& u, const LinearMap& v) const;

 private:
  Field field_;
  Index n_ = 0;
  std::vector<std::vector<std::pair<Index, mpq_class>>> qcols_;
  std::vector<std::vector<std::pair<Index, std::uint64_t>>> pcols_;
};

// Element of H^(x k) with the two legs of r (a vector in H (x) H) placed at
// factor slots slot_a and slot_b (0-based, distinct) and the unit vector
// everywhere else.
LinearMap embed_two_legs(const LinearMap& r, const LinearMap& unit, int k, int slot_a, int slot_b);

LinearMap kron_vec(const LinearMap& u, const LinearMap& v);

}  // namespace hopf
