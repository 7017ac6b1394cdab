#include "hopf/linear_map.hpp"

#include <string>

namespace hopf {

namespace {
std::string shape_str(const LinearMap& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}
}  // namespace

LinearMap LinearMap::zero(const Field& f, Index rows, Index cols) {
  if (rows < 0 || cols < 0) throw_shape("negative matrix dimension");
  LinearMap m;
  m.field_ = f;
  m.rows_ = rows;
  m.cols_ = cols;
  if (f.is_rational())
    m.q_.assign(static_cast<std::size_t>(rows * cols), mpq_class(0));
  else
    m.m_.assign(static_cast<std::size_t>(rows * cols), 0);
  return m;
}

LinearMap LinearMap::identity(const Field& f, Index n) {
  LinearMap m = zero(f, n, n);
  for (Index i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

LinearMap LinearMap::basis_column(const Field& f, Index dim, Index i) {
  LinearMap m = zero(f, dim, 1);
  m.set(i, 0, Scalar::one(f));
  return m;
}

Scalar LinearMap::at(Index i, Index j) const {
  const std::size_t k = static_cast<std::size_t>(i * cols_ + j);
  if (field_.is_rational()) return Scalar::rational(q_[k]);
  return Scalar::residue(field_, m_[k]);
}

void LinearMap::set(Index i, Index j, const Scalar& v) {
  require_same_field(field_, v.field(), "LinearMap::set");
  const std::size_t k = static_cast<std::size_t>(i * cols_ + j);
  if (field_.is_rational()) q_[k] = v.q();
  else m_[k] = v.r();
}

void LinearMap::add_at(Index i, Index j, const Scalar& v) {
  require_same_field(field_, v.field(), "LinearMap::add_at");
  const std::size_t k = static_cast<std::size_t>(i * cols_ + j);
  if (field_.is_rational()) q_[k] += v.q();
  else m_[k] = mod_add(m_[k], v.r(), field_.p);
}

bool LinearMap::operator==(const LinearMap& o) const {
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
  return field_.is_rational() ? q_ == o.q_ : m_ == o.m_;
}

bool LinearMap::is_zero() const {
  if (field_.is_rational()) {
    for (const auto& v : q_)
      if (v != 0) return false;
  } else {
    for (auto v : m_)
      if (v != 0) return false;
  }
  return true;
}

bool LinearMap::is_identity() const {
  return rows_ == cols_ && *this == identity(field_, rows_);
}

Index LinearMap::nnz() const {
  Index n = 0;
  if (field_.is_rational()) {
    for (const auto& v : q_) n += (v != 0);
  } else {
    for (auto v : m_) n += (v != 0);
  }
  return n;
}

LinearMap LinearMap::transpose() const {
  LinearMap t = zero(field_, cols_, rows_);
  if (field_.is_rational()) {
    for (Index i = 0; i < rows_; ++i)
      for (Index j = 0; j < cols_; ++j) {
        const auto& v = q_[static_cast<std::size_t>(i * cols_ + j)];
        if (v != 0) t.q_[static_cast<std::size_t>(j * rows_ + i)] = v;
      }
  } else {
    for (Index i = 0; i < rows_; ++i)
      for (Index j = 0; j < cols_; ++j) {
        const auto v = m_[static_cast<std::size_t>(i * cols_ + j)];
        if (v != 0) t.m_[static_cast<std::size_t>(j * rows_ + i)] = v;
      }
  }
  return t;
}

LinearMap LinearMap::column(Index j) const {
  LinearMap c = zero(field_, rows_, 1);
  if (field_.is_rational()) {
    for (Index i = 0; i < rows_; ++i) c.q_[static_cast<std::size_t>(i)] = q_[static_cast<std::size_t>(i * cols_ + j)];
  } else {
    for (Index i = 0; i < rows_; ++i) c.m_[static_cast<std::size_t>(i)] = m_[static_cast<std::size_t>(i * cols_ + j)];
  }
  return c;
}

std::vector<std::pair<Index, Scalar>> LinearMap::column_entries(Index j) const {
  std::vector<std::pair<Index, Scalar>> out;
  for (Index i = 0; i < rows_; ++i) {
    if (field_.is_rational()) {
      const auto& v = q_[static_cast<std::size_t>(i * cols_ + j)];
      if (v != 0) out.emplace_back(i, Scalar::rational(v));
    } else {
      const auto v = m_[static_cast<std::size_t>(i * cols_ + j)];
      if (v != 0) out.emplace_back(i, Scalar::residue(field_, v));
    }
  }
  return out;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  require_same_field(f.field(), g.field(), "compose");
  if (f.cols() != g.rows())
    throw_shape("compose: dimension mismatch " + shape_str(f) + " * " + shape_str(g));
  LinearMap out = LinearMap::zero(f.field(), f.rows(), g.cols());
  const Index R = f.rows(), K = f.cols(), C = g.cols();
  if (f.field().is_rational()) {
    const auto& fa = f.qdata();
    const auto& ga = g.qdata();
    auto& oa = out.qdata();
    for (Index k = 0; k < K; ++k) {
      for (Index i = 0; i < R; ++i) {
        const mpq_class& fv = fa[static_cast<std::size_t>(i * K + k)];
        if (fv == 0) continue;
        for (Index j = 0; j < C; ++j) {
          const mpq_class& gv = ga[static_cast<std::size_t>(k * C + j)];
          if (gv == 0) continue;
          oa[static_cast<std::size_t>(i * C + j)] += fv * gv;
        }
      }
    }
  } else {
    const std::uint64_t p = f.field().p;
    const auto& fa = f.pdata();
    const auto& ga = g.pdata();
    auto& oa = out.pdata();
    for (Index k = 0; k < K; ++k) {
      for (Index i = 0; i < R; ++i) {
        const std::uint64_t fv = fa[static_cast<std::size_t>(i * K + k)];
        if (fv == 0) continue;
        for (Index j = 0; j < C; ++j) {
          const std::uint64_t gv = ga[static_cast<std::size_t>(k * C + j)];
          if (gv == 0) continue;
          auto& o = oa[static_cast<std::size_t>(i * C + j)];
          o = mod_add(o, mod_mul(fv, gv, p), p);
        }
      }
    }
  }
  return out;
}

LinearMap kron(const LinearMap& f, const LinearMap& g) {
  require_same_field(f.field(), g.field(), "kron");
  LinearMap out = LinearMap::zero(f.field(), f.rows() * g.rows(), f.cols() * g.cols());
  const Index gr = g.rows(), gc = g.cols(), oc = out.cols();
  if (f.field().is_rational()) {
    const auto& fa = f.qdata();
    const auto& ga = g.qdata();
    auto& oa = out.qdata();
    for (Index i1 = 0; i1 < f.rows(); ++i1)
      for (Index j1 = 0; j1 < f.cols(); ++j1) {
        const mpq_class& fv = fa[static_cast<std::size_t>(i1 * f.cols() + j1)];
        if (fv == 0) continue;
        for (Index i2 = 0; i2 < gr; ++i2)
          for (Index j2 = 0; j2 < gc; ++j2) {
            const mpq_class& gv = ga[static_cast<std::size_t>(i2 * gc + j2)];
            if (gv == 0) continue;
            oa[static_cast<std::size_t>((i1 * gr + i2) * oc + (j1 * gc + j2))] = fv * gv;
          }
      }
  } else {
    const std::uint64_t p = f.field().p;
    const auto& fa = f.pdata();
    const auto& ga = g.pdata();
    auto& oa = out.pdata();
    for (Index i1 = 0; i1 < f.rows(); ++i1)
      for (Index j1 = 0; j1 < f.cols(); ++j1) {
        const std::uint64_t fv = fa[static_cast<std::size_t>(i1 * f.cols() + j1)];
        if (fv == 0) continue;
        for (Index i2 = 0; i2 < gr; ++i2)
          for (Index j2 = 0; j2 < gc; ++j2) {
            const std::uint64_t gv = ga[static_cast<std::size_t>(i2 * gc + j2)];
            if (gv == 0) continue;
            oa[static_cast<std::size_t>((i1 * gr + i2) * oc + (j1 * gc + j2))] = mod_mul(fv, gv, p);
          }
      }
  }
  return out;
}

LinearMap add(const LinearMap& a, const LinearMap& b) {
  require_same_field(a.field(), b.field(), "add");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw_shape("add: shape mismatch " + shape_str(a) + " vs " + shape_str(b));
  LinearMap out = a;
  if (a.field().is_rational()) {
    auto& oa = out.qdata();
    const auto& ba = b.qdata();
    for (std::size_t k = 0; k < oa.size(); ++k) oa[k] += ba[k];
  } else {
    const std::uint64_t p = a.field().p;
    auto& oa = out.pdata();
    const auto& ba = b.pdata();
    for (std::size_t k = 0; k < oa.size(); ++k) oa[k] = mod_add(oa[k], ba[k], p);
  }
  return out;
}

LinearMap sub(const LinearMap& a, const LinearMap& b) { return add(a, neg(b)); }

LinearMap neg(const LinearMap& a) {
  LinearMap out = a;
  if (a.field().is_rational()) {
    for (auto& v : out.qdata()) v = -v;
  } else {
    const std::uint64_t p = a.field().p;
    for (auto& v : out.pdata()) v = mod_neg(v, p);
  }
  return out;
}

LinearMap scale(const Scalar& c, const LinearMap& a) {
  require_same_field(c.field(), a.field(), "scale");
  LinearMap out = a;
  if (a.field().is_rational()) {
    for (auto& v : out.qdata()) v *= c.q();
  } else {
    const std::uint64_t p = a.field().p;
    for (auto& v : out.pdata()) v = mod_mul(v, c.r(), p);
  }
  return out;
}

LinearMap flip(const Field& f, Index n, Index m) {
  LinearMap out = LinearMap::zero(f, n * m, n * m);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j) out.set(j * n + i, i * m + j, Scalar::one(f));
  return out;
}

LinearMap tensor_permutation(const Field& f, const std::vector<Index>& dims,
                             const std::vector<std::size_t>& src_of_dst) {
  if (dims.size() != src_of_dst.size()) throw_shape("tensor_permutation: arity mismatch");
  const Index total = prod_dims(dims);
  std::vector<Index> out_dims(dims.size());
  for (std::size_t k = 0; k < dims.size(); ++k) out_dims[k] = dims[src_of_dst[k]];
  LinearMap out = LinearMap::zero(f, total, total);
  std::vector<Index> digits(dims.size());
  for (Index idx = 0; idx < total; ++idx) {
    Index rem = idx;
    for (std::size_t k = dims.size(); k-- > 0;) {
      digits[k] = rem % dims[k];
      rem /= dims[k];
    }
    Index oidx = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) oidx = oidx * out_dims[k] + digits[src_of_dst[k]];
    out.set(oidx, idx, Scalar::one(f));
  }
  return out;
}

}  // namespace hopf
