#pragma once

#include <variant>
#include <vector>

#include "hopf/check_report.hpp"
#include "hopf/linear_map.hpp"

namespace hopf {

// Composite of structure maps acting on tensor-power spaces, evaluated
// column-by-column on sparse vectors. Large identities (anything whose
// intermediate spaces would be too big to hold as dense matrices) are
// verified by streaming basis columns through two pipelines and comparing.
class Pipeline {
 public:
  Pipeline(const Field& f, std::vector<Index> in_dims);

  static Pipeline of_map(const LinearMap& m);

  // Apply m to the contiguous factor block [pos, pos+span); the block is
  // replaced by out_factors (default: a single factor of size m.rows()).
  Pipeline& apply(const LinearMap& m, std::size_t pos, std::size_t span,
                  std::vector<Index> out_factors = {});
  // Reorder factors: output slot k receives current factor src_of_dst[k].
  Pipeline& permute(std::vector<std::size_t> src_of_dst);
  // Tensor a fixed vector (colvec, cols==1) in at factor position pos.
  Pipeline& insert(const LinearMap& colvec, std::size_t pos, std::vector<Index> factors = {});

  const Field& field() const { return field_; }
  Index in_dim() const { return prod_dims(in_dims_); }
  Index out_dim() const { return prod_dims(dims_); }
  const std::vector<Index>& in_dims() const { return in_dims_; }
  const std::vector<Index>& out_dims() const { return dims_; }

  LinearMap eval_basis(Index j) const;
  LinearMap eval(const LinearMap& colvec) const;
  LinearMap to_map() const;

 private:
  friend CheckEntry compare_pipelines_entry(const std::string&, const Pipeline&, const Pipeline&, int);
  friend CheckEntry compare_pipelines_on(const std::string&, const Pipeline&, const Pipeline&,
                                         const std::vector<LinearMap>&, int);

  struct ApplyOp {
    Index rows, cols;
    std::size_t pos, span;
    std::vector<std::vector<std::pair<Index, mpq_class>>> qcols;
    std::vector<std::vector<std::pair<Index, std::uint64_t>>> pcols;
  };
  struct PermOp {
    std::vector<std::size_t> src;
  };
  struct InsertOp {
    Index dim;
    std::size_t pos;
    std::vector<std::pair<Index, mpq_class>> qvec;
    std::vector<std::pair<Index, std::uint64_t>> pvec;
  };
  struct Op {
    std::variant<ApplyOp, PermOp, InsertOp> v;
    std::vector<Index> dims_in;   // factor dims before this op
    std::vector<Index> dims_out;  // factor dims after this op
  };

  template <typename E>
  std::vector<std::pair<Index, E>> run(std::vector<std::pair<Index, E>> cur) const;

  Field field_;
  std::vector<Index> in_dims_;
  std::vector<Index> dims_;  // current output dims
  std::vector<Op> ops_;
};

// Streams every domain basis column through both pipelines; the witness is
// the first mismatching column in basis-index order regardless of the
// number of worker threads.
CheckEntry compare_pipelines_entry(const std::string& name, const Pipeline& lhs, const Pipeline& rhs,
                                   int jobs = 1);

// Same comparison over an explicit list of input vectors (e.g. a cached
// cotensor basis); the witness index refers to the list position.
CheckEntry compare_pipelines_on(const std::string& name, const Pipeline& lhs, const Pipeline& rhs,
                                const std::vector<LinearMap>& inputs, int jobs = 1);

}  // namespace hopf
