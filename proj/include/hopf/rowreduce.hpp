#pragma once

#include <optional>
#include <vector>

#include "hopf/linear_map.hpp"

namespace hopf {

// Incremental exact row reduction to a canonical reduced row-echelon form.
// Rows are accepted one at a time and reduced against the rows already
// kept, so large sparse constraint systems never sit in memory as a full
// dense grid. Over Q the working rows are integer vectors handled
// fraction-free (cross-multiplication with content stripping) to bound
// coefficient swell; pivots are normalised to 1 only when the final RREF
// is extracted. Over F_p rows are reduced with pivot 1 immediately.
class RowReducer {
 public:
  RowReducer(const Field& f, Index width);

  void add_row(const LinearMap& m, Index row);
  void add_all_rows(const LinearMap& m);
  void add_column_as_row(const LinearMap& colvec);

  Index width() const { return width_; }
  Index rank() const;

  // Canonical RREF (rank x width), pivots leftmost, pivot entries 1.
  LinearMap rref();

  // True iff the vector lies in the row space accumulated so far.
  bool in_row_space(const LinearMap& colvec) const;

 private:
  void add_row_q(std::vector<mpq_class> w);
  void add_row_p(std::vector<std::uint64_t> w);

  Field field_;
  Index width_;
  std::vector<std::vector<mpq_class>> rq_;
  std::vector<std::vector<std::uint64_t>> rp_;
  std::vector<Index> pivots_;  // ascending
};

LinearMap rref_of(const LinearMap& m);
Index rank(const LinearMap& m);

// Solves A x = b exactly; b is rows x 1. Returns the particular solution
// with all free variables zero, or nullopt when inconsistent.
std::optional<LinearMap> solve(const LinearMap& a, const LinearMap& b);
std::optional<LinearMap> inverse(const LinearMap& a);

}  // namespace hopf
