#include "hopf/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace hopf {

namespace {

template <typename E>
void sort_and_combine(std::vector<std::pair<Index, E>>& v, std::uint64_t p) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < v.size();) {
    Index idx = v[i].first;
    E acc = std::move(v[i].second);
    std::size_t j = i + 1;
    for (; j < v.size() && v[j].first == idx; ++j) {
      if constexpr (std::is_same_v<E, mpq_class>) {
        acc += v[j].second;
      } else {
        acc = mod_add(acc, v[j].second, p);
      }
    }
    bool nonzero;
    if constexpr (std::is_same_v<E, mpq_class>) nonzero = (acc != 0);
    else nonzero = (acc != 0);
    if (nonzero) {
      v[w].first = idx;
      v[w].second = std::move(acc);
      ++w;
    }
    i = j;
  }
  v.resize(w);
}

}  // namespace

Pipeline::Pipeline(const Field& f, std::vector<Index> in_dims)
    : field_(f), in_dims_(std::move(in_dims)), dims_(in_dims_) {
  for (Index d : in_dims_)
    if (d <= 0) throw_shape("Pipeline: factor dimensions must be positive");
}

Pipeline Pipeline::of_map(const LinearMap& m) {
  Pipeline p(m.field(), {m.cols()});
  p.apply(m, 0, 1);
  return p;
}

Pipeline& Pipeline::apply(const LinearMap& m, std::size_t pos, std::size_t span,
                          std::vector<Index> out_factors) {
  require_same_field(field_, m.field(), "Pipeline::apply");
  if (pos + span > dims_.size()) throw_shape("Pipeline::apply: block out of range");
  Index block = 1;
  for (std::size_t k = pos; k < pos + span; ++k) block *= dims_[k];
  if (block != m.cols())
    throw_shape("Pipeline::apply: map domain " + std::to_string(m.cols()) +
                " does not match factor block " + std::to_string(block));
  if (out_factors.empty()) out_factors = {m.rows()};
  if (prod_dims(out_factors) != m.rows())
    throw_shape("Pipeline::apply: out_factors do not multiply to map codomain");

  ApplyOp op{};
  op.rows = m.rows();
  op.cols = m.cols();
  op.pos = pos;
  op.span = span;
  if (field_.is_rational()) {
    op.qcols.resize(static_cast<std::size_t>(m.cols()));
    const auto& a = m.qdata();
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) {
        const auto& v = a[static_cast<std::size_t>(i * m.cols() + j)];
        if (v != 0) op.qcols[static_cast<std::size_t>(j)].emplace_back(i, v);
      }
  } else {
    op.pcols.resize(static_cast<std::size_t>(m.cols()));
    const auto& a = m.pdata();
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) {
        const auto v = a[static_cast<std::size_t>(i * m.cols() + j)];
        if (v != 0) op.pcols[static_cast<std::size_t>(j)].emplace_back(i, v);
      }
  }

  Op rec;
  rec.dims_in = dims_;
  std::vector<Index> nd(dims_.begin(), dims_.begin() + static_cast<std::ptrdiff_t>(pos));
  for (Index d : out_factors) nd.push_back(d);
  for (std::size_t k = pos + span; k < dims_.size(); ++k) nd.push_back(dims_[k]);
  dims_ = nd;
  rec.dims_out = dims_;
  rec.v = std::move(op);
  ops_.push_back(std::move(rec));
  return *this;
}

Pipeline& Pipeline::permute(std::vector<std::size_t> src_of_dst) {
  if (src_of_dst.size() != dims_.size()) throw_shape("Pipeline::permute: arity mismatch");
  std::vector<bool> seen(dims_.size(), false);
  for (std::size_t s : src_of_dst) {
    if (s >= dims_.size() || seen[s]) throw_shape("Pipeline::permute: not a permutation");
    seen[s] = true;
  }
  Op rec;
  rec.dims_in = dims_;
  std::vector<Index> nd(dims_.size());
  for (std::size_t k = 0; k < dims_.size(); ++k) nd[k] = dims_[src_of_dst[k]];
  dims_ = nd;
  rec.dims_out = dims_;
  rec.v = PermOp{std::move(src_of_dst)};
  ops_.push_back(std::move(rec));
  return *this;
}

Pipeline& Pipeline::insert(const LinearMap& colvec, std::size_t pos, std::vector<Index> factors) {
  require_same_field(field_, colvec.field(), "Pipeline::insert");
  if (colvec.cols() != 1) throw_shape("Pipeline::insert: expected a column vector");
  if (pos > dims_.size()) throw_shape("Pipeline::insert: position out of range");
  if (factors.empty()) factors = {colvec.rows()};
  if (prod_dims(factors) != colvec.rows())
    throw_shape("Pipeline::insert: factors do not multiply to vector dimension");

  InsertOp op{};
  op.dim = colvec.rows();
  op.pos = pos;
  if (field_.is_rational()) {
    const auto& a = colvec.qdata();
    for (Index i = 0; i < colvec.rows(); ++i)
      if (a[static_cast<std::size_t>(i)] != 0) op.qvec.emplace_back(i, a[static_cast<std::size_t>(i)]);
  } else {
    const auto& a = colvec.pdata();
    for (Index i = 0; i < colvec.rows(); ++i)
      if (a[static_cast<std::size_t>(i)] != 0) op.pvec.emplace_back(i, a[static_cast<std::size_t>(i)]);
  }

  Op rec;
  rec.dims_in = dims_;
  std::vector<Index> nd(dims_.begin(), dims_.begin() + static_cast<std::ptrdiff_t>(pos));
  for (Index d : factors) nd.push_back(d);
  for (std::size_t k = pos; k < dims_.size(); ++k) nd.push_back(dims_[k]);
  dims_ = nd;
  rec.dims_out = dims_;
  rec.v = std::move(op);
  ops_.push_back(std::move(rec));
  return *this;
}

template <typename E>
std::vector<std::pair<Index, E>> Pipeline::run(std::vector<std::pair<Index, E>> cur) const {
  const std::uint64_t p = field_.p;
  for (const Op& rec : ops_) {
    std::vector<std::pair<Index, E>> next;
    if (std::holds_alternative<ApplyOp>(rec.v)) {
      const auto& op = std::get<ApplyOp>(rec.v);
      Index right = 1;
      for (std::size_t k = op.pos + op.span; k < rec.dims_in.size(); ++k) right *= rec.dims_in[k];
      const Index mid = op.cols;
      const Index midR = mid * right;
      const Index newR = op.rows * right;
      for (const auto& [idx, val] : cur) {
        const Index r = idx % right;
        const Index m = (idx / right) % mid;
        const Index l = idx / midR;
        if (field_.is_rational()) {
          if constexpr (std::is_same_v<E, mpq_class>) {
            for (const auto& [row, mv] : op.qcols[static_cast<std::size_t>(m)])
              next.emplace_back(l * newR + row * right + r, val * mv);
          }
        } else {
          if constexpr (std::is_same_v<E, std::uint64_t>) {
            for (const auto& [row, mv] : op.pcols[static_cast<std::size_t>(m)])
              next.emplace_back(l * newR + row * right + r, mod_mul(val, mv, p));
          }
        }
      }
    } else if (std::holds_alternative<PermOp>(rec.v)) {
      const auto& op = std::get<PermOp>(rec.v);
      const std::size_t nf = rec.dims_in.size();
      std::vector<Index> digits(nf);
      next.reserve(cur.size());
      for (const auto& [idx, val] : cur) {
        Index rem = idx;
        for (std::size_t k = nf; k-- > 0;) {
          digits[k] = rem % rec.dims_in[k];
          rem /= rec.dims_in[k];
        }
        Index oidx = 0;
        for (std::size_t k = 0; k < nf; ++k) oidx = oidx * rec.dims_out[k] + digits[op.src[k]];
        next.emplace_back(oidx, val);
      }
    } else {
      const auto& op = std::get<InsertOp>(rec.v);
      Index right = 1;
      for (std::size_t k = op.pos; k < rec.dims_in.size(); ++k) right *= rec.dims_in[k];
      for (const auto& [idx, val] : cur) {
        const Index r = idx % right;
        const Index l = idx / right;
        if (field_.is_rational()) {
          if constexpr (std::is_same_v<E, mpq_class>) {
            for (const auto& [vi, vv] : op.qvec)
              next.emplace_back((l * op.dim + vi) * right + r, val * vv);
          }
        } else {
          if constexpr (std::is_same_v<E, std::uint64_t>) {
            for (const auto& [vi, vv] : op.pvec)
              next.emplace_back((l * op.dim + vi) * right + r, mod_mul(val, vv, p));
          }
        }
      }
    }
    sort_and_combine(next, p);
    cur = std::move(next);
  }
  return cur;
}

LinearMap Pipeline::eval_basis(Index j) const {
  if (j < 0 || j >= in_dim()) throw_shape("Pipeline::eval_basis: index out of range");
  LinearMap out = LinearMap::zero(field_, out_dim(), 1);
  if (field_.is_rational()) {
    auto res = run<mpq_class>({{j, mpq_class(1)}});
    for (auto& [i, v] : res) out.qdata()[static_cast<std::size_t>(i)] = std::move(v);
  } else {
    auto res = run<std::uint64_t>({{j, 1}});
    for (auto& [i, v] : res) out.pdata()[static_cast<std::size_t>(i)] = v;
  }
  return out;
}

LinearMap Pipeline::eval(const LinearMap& colvec) const {
  require_same_field(field_, colvec.field(), "Pipeline::eval");
  if (colvec.cols() != 1 || colvec.rows() != in_dim()) throw_shape("Pipeline::eval: input shape mismatch");
  LinearMap out = LinearMap::zero(field_, out_dim(), 1);
  if (field_.is_rational()) {
    std::vector<std::pair<Index, mpq_class>> cur;
    for (Index i = 0; i < colvec.rows(); ++i) {
      const auto& v = colvec.qdata()[static_cast<std::size_t>(i)];
      if (v != 0) cur.emplace_back(i, v);
    }
    auto res = run<mpq_class>(std::move(cur));
    for (auto& [i, v] : res) out.qdata()[static_cast<std::size_t>(i)] = std::move(v);
  } else {
    std::vector<std::pair<Index, std::uint64_t>> cur;
    for (Index i = 0; i < colvec.rows(); ++i) {
      const auto v = colvec.pdata()[static_cast<std::size_t>(i)];
      if (v != 0) cur.emplace_back(i, v);
    }
    auto res = run<std::uint64_t>(std::move(cur));
    for (auto& [i, v] : res) out.pdata()[static_cast<std::size_t>(i)] = v;
  }
  return out;
}

LinearMap Pipeline::to_map() const {
  LinearMap out = LinearMap::zero(field_, out_dim(), in_dim());
  const Index n = in_dim();
  for (Index j = 0; j < n; ++j) {
    if (field_.is_rational()) {
      auto res = run<mpq_class>({{j, mpq_class(1)}});
      for (auto& [i, v] : res) out.qdata()[static_cast<std::size_t>(i * n + j)] = std::move(v);
    } else {
      auto res = run<std::uint64_t>({{j, 1}});
      for (auto& [i, v] : res) out.pdata()[static_cast<std::size_t>(i * n + j)] = v;
    }
  }
  return out;
}

namespace {

// Runs fn(j) for j in [0, count) across `jobs` threads and returns the
// minimal j where fn reports a mismatch, or -1. fn must be pure.
Index parallel_first_mismatch(Index count, int jobs, const std::function<bool(Index)>& matches) {
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || count < 2) {
    for (Index j = 0; j < count; ++j)
      if (!matches(j)) return j;
    return -1;
  }
  std::atomic<Index> next{0};
  std::atomic<Index> best{count};
  std::vector<std::thread> pool;
  const Index chunk = 16;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        const Index start = next.fetch_add(chunk);
        if (start >= count) return;
        const Index end = std::min<Index>(start + chunk, count);
        if (start >= best.load()) return;  // a smaller mismatch already found
        for (Index j = start; j < end; ++j) {
          if (!matches(j)) {
            Index cur = best.load();
            while (j < cur && !best.compare_exchange_weak(cur, j)) {
            }
            break;
          }
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  const Index found = best.load();
  return found == count ? -1 : found;
}

}  // namespace

CheckEntry compare_pipelines_entry(const std::string& name, const Pipeline& lhs, const Pipeline& rhs,
                                   int jobs) {
  CheckEntry e;
  e.name = name;
  if (lhs.in_dim() != rhs.in_dim() || lhs.out_dim() != rhs.out_dim() || !(lhs.field() == rhs.field())) {
    e.pass = false;
    e.note = "pipeline shape/field mismatch";
    return e;
  }
  const Index n = lhs.in_dim();
  const Index j = parallel_first_mismatch(
      n, jobs, [&](Index col) { return lhs.eval_basis(col) == rhs.eval_basis(col); });
  if (j < 0) {
    e.pass = true;
    return e;
  }
  e.pass = false;
  Witness w;
  w.indices = {j};
  w.lhs = sparse_dump(lhs.eval_basis(j));
  w.rhs = sparse_dump(rhs.eval_basis(j));
  e.witness = std::move(w);
  return e;
}

CheckEntry compare_pipelines_on(const std::string& name, const Pipeline& lhs, const Pipeline& rhs,
                                const std::vector<LinearMap>& inputs, int jobs) {
  CheckEntry e;
  e.name = name;
  if (lhs.out_dim() != rhs.out_dim() || !(lhs.field() == rhs.field())) {
    e.pass = false;
    e.note = "pipeline shape/field mismatch";
    return e;
  }
  const Index n = static_cast<Index>(inputs.size());
  const Index j = parallel_first_mismatch(
      n, jobs,
      [&](Index k) { return lhs.eval(inputs[static_cast<std::size_t>(k)]) == rhs.eval(inputs[static_cast<std::size_t>(k)]); });
  if (j < 0) {
    e.pass = true;
    return e;
  }
  e.pass = false;
  Witness w;
  w.indices = {j};
  w.lhs = sparse_dump(lhs.eval(inputs[static_cast<std::size_t>(j)]));
  w.rhs = sparse_dump(rhs.eval(inputs[static_cast<std::size_t>(j)]));
  e.witness = std::move(w);
  return e;
}

}  // namespace hopf
