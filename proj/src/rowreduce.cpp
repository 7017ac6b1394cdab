#include "hopf/rowreduce.hpp"

#include <algorithm>

namespace hopf {

namespace {

// Divide an integer mpq row by the gcd of its entries and make the leading
// entry positive. Rows here always have denominator 1.
void strip_content(std::vector<mpq_class>& w) {
  mpz_class g = 0;
  for (const auto& v : w) {
    if (v == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num().get_mpz_t());
    if (g == 1) break;
  }
  if (g == 0) return;
  int lead_sign = 0;
  for (const auto& v : w) {
    if (v != 0) {
      lead_sign = sgn(v);
      break;
    }
  }
  if (lead_sign < 0) g = -g;
  if (g == 1) return;
  for (auto& v : w)
    if (v != 0) v /= g;
}

void integerize(std::vector<mpq_class>& w) {
  mpz_class l = 1;
  for (const auto& v : w) {
    if (v == 0) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  }
  if (l != 1)
    for (auto& v : w) v *= l;
}

Index leading_index_q(const std::vector<mpq_class>& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) return static_cast<Index>(i);
  return -1;
}

Index leading_index_p(const std::vector<std::uint64_t>& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) return static_cast<Index>(i);
  return -1;
}

}  // namespace

RowReducer::RowReducer(const Field& f, Index width) : field_(f), width_(width) {
  if (width < 0) throw_shape("RowReducer: negative width");
}

Index RowReducer::rank() const {
  return static_cast<Index>(field_.is_rational() ? rq_.size() : rp_.size());
}

void RowReducer::add_row(const LinearMap& m, Index row) {
  require_same_field(field_, m.field(), "RowReducer::add_row");
  if (m.cols() != width_) throw_shape("RowReducer::add_row: width mismatch");
  if (field_.is_rational()) {
    std::vector<mpq_class> w(m.qdata().begin() + row * width_, m.qdata().begin() + (row + 1) * width_);
    add_row_q(std::move(w));
  } else {
    std::vector<std::uint64_t> w(m.pdata().begin() + row * width_, m.pdata().begin() + (row + 1) * width_);
    add_row_p(std::move(w));
  }
}

void RowReducer::add_all_rows(const LinearMap& m) {
  for (Index i = 0; i < m.rows(); ++i) add_row(m, i);
}

void RowReducer::add_column_as_row(const LinearMap& colvec) {
  if (colvec.cols() != 1 || colvec.rows() != width_)
    throw_shape("RowReducer::add_column_as_row: expected " + std::to_string(width_) + "x1 vector");
  require_same_field(field_, colvec.field(), "RowReducer::add_column_as_row");
  if (field_.is_rational()) {
    std::vector<mpq_class> w(colvec.qdata().begin(), colvec.qdata().end());
    add_row_q(std::move(w));
  } else {
    std::vector<std::uint64_t> w(colvec.pdata().begin(), colvec.pdata().end());
    add_row_p(std::move(w));
  }
}

void RowReducer::add_row_q(std::vector<mpq_class> w) {
  integerize(w);
  for (std::size_t k = 0; k < rq_.size(); ++k) {
    const Index p = pivots_[k];
    const mpq_class& wp = w[static_cast<std::size_t>(p)];
    if (wp == 0) continue;
    const mpq_class lead = rq_[k][static_cast<std::size_t>(p)];
    const mpq_class c = wp;
    for (std::size_t i = 0; i < w.size(); ++i) {
      // fraction-free elimination step: w <- lead*w - c*row_k
      w[i] = lead * w[i] - c * rq_[k][i];
    }
  }
  const Index piv = leading_index_q(w);
  if (piv < 0) return;
  strip_content(w);
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv);
  const std::size_t at = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, piv);
  rq_.insert(rq_.begin() + at, std::move(w));
}

void RowReducer::add_row_p(std::vector<std::uint64_t> w) {
  const std::uint64_t p = field_.p;
  for (std::size_t k = 0; k < rp_.size(); ++k) {
    const Index pc = pivots_[k];
    const std::uint64_t c = w[static_cast<std::size_t>(pc)];
    if (c == 0) continue;
    // stored rows have pivot 1
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (rp_[k][i] != 0) w[i] = mod_sub(w[i], mod_mul(c, rp_[k][i], p), p);
    }
  }
  const Index piv = leading_index_p(w);
  if (piv < 0) return;
  const std::uint64_t inv = mod_inv(w[static_cast<std::size_t>(piv)], p);
  for (auto& v : w) v = mod_mul(v, inv, p);
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv);
  const std::size_t at = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, piv);
  rp_.insert(rp_.begin() + at, std::move(w));
}

LinearMap RowReducer::rref() {
  const Index r = rank();
  LinearMap out = LinearMap::zero(field_, r, width_);
  if (field_.is_rational()) {
    // back-eliminate, still fraction-free
    for (std::size_t k = rq_.size(); k-- > 0;) {
      for (std::size_t j = 0; j < k; ++j) {
        const mpq_class& c = rq_[j][static_cast<std::size_t>(pivots_[k])];
        if (c == 0) continue;
        const mpq_class lead = rq_[k][static_cast<std::size_t>(pivots_[k])];
        for (std::size_t i = 0; i < rq_[j].size(); ++i) rq_[j][i] = lead * rq_[j][i] - c * rq_[k][i];
        strip_content(rq_[j]);
      }
    }
    auto& oa = out.qdata();
    for (std::size_t k = 0; k < rq_.size(); ++k) {
      const mpq_class lead = rq_[k][static_cast<std::size_t>(pivots_[k])];
      for (Index i = 0; i < width_; ++i) {
        const mpq_class& v = rq_[k][static_cast<std::size_t>(i)];
        if (v != 0) oa[static_cast<std::size_t>(static_cast<Index>(k) * width_ + i)] = v / lead;
      }
    }
  } else {
    const std::uint64_t p = field_.p;
    for (std::size_t k = rp_.size(); k-- > 0;) {
      for (std::size_t j = 0; j < k; ++j) {
        const std::uint64_t c = rp_[j][static_cast<std::size_t>(pivots_[k])];
        if (c == 0) continue;
        for (std::size_t i = 0; i < rp_[j].size(); ++i)
          if (rp_[k][i] != 0) rp_[j][i] = mod_sub(rp_[j][i], mod_mul(c, rp_[k][i], p), p);
      }
    }
    auto& oa = out.pdata();
    for (std::size_t k = 0; k < rp_.size(); ++k)
      for (Index i = 0; i < width_; ++i)
        oa[static_cast<std::size_t>(static_cast<Index>(k) * width_ + i)] = rp_[k][static_cast<std::size_t>(i)];
  }
  return out;
}

bool RowReducer::in_row_space(const LinearMap& colvec) const {
  if (colvec.cols() != 1 || colvec.rows() != width_)
    throw_shape("RowReducer::in_row_space: expected " + std::to_string(width_) + "x1 vector");
  require_same_field(field_, colvec.field(), "RowReducer::in_row_space");
  if (field_.is_rational()) {
    std::vector<mpq_class> w(colvec.qdata().begin(), colvec.qdata().end());
    integerize(w);
    for (std::size_t k = 0; k < rq_.size(); ++k) {
      const mpq_class& c = w[static_cast<std::size_t>(pivots_[k])];
      if (c == 0) continue;
      const mpq_class lead = rq_[k][static_cast<std::size_t>(pivots_[k])];
      const mpq_class cc = c;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = lead * w[i] - cc * rq_[k][i];
    }
    return leading_index_q(w) < 0;
  }
  std::vector<std::uint64_t> w(colvec.pdata().begin(), colvec.pdata().end());
  const std::uint64_t p = field_.p;
  for (std::size_t k = 0; k < rp_.size(); ++k) {
    const std::uint64_t c = w[static_cast<std::size_t>(pivots_[k])];
    if (c == 0) continue;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (rp_[k][i] != 0) w[i] = mod_sub(w[i], mod_mul(c, rp_[k][i], p), p);
  }
  return leading_index_p(w) < 0;
}

LinearMap rref_of(const LinearMap& m) {
  RowReducer red(m.field(), m.cols());
  red.add_all_rows(m);
  return red.rref();
}

Index rank(const LinearMap& m) {
  RowReducer red(m.field(), m.cols());
  red.add_all_rows(m);
  return red.rank();
}

std::optional<LinearMap> solve(const LinearMap& a, const LinearMap& b) {
  require_same_field(a.field(), b.field(), "solve");
  if (b.cols() != 1 || b.rows() != a.rows()) throw_shape("solve: rhs shape mismatch");
  const Index n = a.cols();
  RowReducer red(a.field(), n + 1);
  LinearMap aug = LinearMap::zero(a.field(), 1, n + 1);
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < n; ++j) aug.set(0, j, a.at(i, j));
    aug.set(0, n, b.at(i, 0));
    red.add_row(aug, 0);
  }
  LinearMap r = red.rref();
  LinearMap x = LinearMap::zero(a.field(), n, 1);
  for (Index k = 0; k < r.rows(); ++k) {
    Index piv = -1;
    for (Index j = 0; j <= n; ++j)
      if (!r.at(k, j).is_zero()) {
        piv = j;
        break;
      }
    if (piv == n) return std::nullopt;  // inconsistent
    if (piv >= 0) x.set(piv, 0, r.at(k, n));
  }
  return x;
}

std::optional<LinearMap> inverse(const LinearMap& a) {
  if (a.rows() != a.cols()) throw_shape("inverse: matrix not square");
  const Index n = a.rows();
  RowReducer red(a.field(), 2 * n);
  LinearMap aug = LinearMap::zero(a.field(), 1, 2 * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) aug.set(0, j, a.at(i, j));
    for (Index j = 0; j < n; ++j)
      aug.set(0, n + j, i == j ? Scalar::one(a.field()) : Scalar::zero(a.field()));
    red.add_row(aug, 0);
  }
  if (red.rank() != n) return std::nullopt;
  LinearMap r = red.rref();
  // all pivots must sit in the left block for invertibility
  for (Index k = 0; k < n; ++k) {
    Index piv = -1;
    for (Index j = 0; j < 2 * n; ++j)
      if (!r.at(k, j).is_zero()) {
        piv = j;
        break;
      }
    if (piv != k) return std::nullopt;
  }
  LinearMap inv = LinearMap::zero(a.field(), n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) inv.set(i, j, r.at(i, n + j));
  return inv;
}

}  // namespace hopf
