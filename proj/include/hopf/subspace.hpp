#pragma once

#include "hopf/rowreduce.hpp"

namespace hopf {

// Subspace of an ambient tensor-power space, held as the unique RREF basis
// (one basis vector per row, pivots leftmost). Equality of subspaces is
// plain matrix equality of the stored bases.
struct SubspaceBasis {
  Index ambient = 0;
  LinearMap rows;  // dim x ambient, canonical RREF

  Index dim() const { return rows.rows(); }
  const Field& field() const { return rows.field(); }
};

// Canonical basis of the nullspace of f. Deterministic: independent of the
// order rows are visited.
SubspaceBasis kernel_basis(const LinearMap& f);

// Row-space span of the columns of m (each column one generator).
SubspaceBasis span_of_columns(const LinearMap& m);

bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b);
bool subspace_contains(const SubspaceBasis& a, const LinearMap& colvec);

// ambient x dim matrix whose columns are the basis vectors.
LinearMap inclusion_map(const SubspaceBasis& b);

// Basis vectors as sparse columns, for feeding restricted identities.
std::vector<LinearMap> basis_columns(const SubspaceBasis& b);

}  // namespace hopf
