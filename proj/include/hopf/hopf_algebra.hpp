#pragma once

#include <optional>

#include "hopf/pipeline.hpp"
#include "hopf/rowreduce.hpp"

namespace hopf {

// Finite-dimensional Hopf algebra as structure constants over one field.
struct HopfAlgebra {
  Index dim = 0;
  LinearMap mul;       // n^2 -> n
  LinearMap unit;      // 1 -> n
  LinearMap comul;     // n -> n^2
  LinearMap counit;    // n -> 1
  LinearMap antipode;  // n -> n

  const Field& field() const { return mul.field(); }
};

// Throws on shape or field inconsistencies between the five maps.
void validate_shapes(const HopfAlgebra& h, const std::string& name = "hopf algebra");

CheckReport check_algebra(const LinearMap& mul, const LinearMap& unit, int jobs = 1);
CheckReport check_coalgebra(const LinearMap& comul, const LinearMap& counit, int jobs = 1);
// Algebra + coalgebra + bialgebra laws + antipode axioms + S invertibility.
CheckReport check_hopf(const HopfAlgebra& h, int jobs = 1);

// Structure maps transposed in the dual basis.
HopfAlgebra dual_hopf(const HopfAlgebra& h);
HopfAlgebra tensor_hopf(const HopfAlgebra& a, const HopfAlgebra& b);

bool is_commutative(const HopfAlgebra& h);
bool is_cocommutative(const HopfAlgebra& h);

// Convolution inverse of the identity for (mul, unit, comul, counit):
// the unique antipode when one exists. Verified two-sided.
std::optional<LinearMap> solve_antipode(const LinearMap& mul, const LinearMap& unit,
                                        const LinearMap& comul, const LinearMap& counit);

// h -> h_(1) (x) ... (x) h_(k) as a map n -> n^k (k >= 1).
LinearMap iterated_comul(const HopfAlgebra& h, int k);

// h (x) x -> h_(1) x S(h_(2)) as a map n^2 -> n.
LinearMap adjoint_action_map(const HopfAlgebra& h);

}  // namespace hopf
