#include "hopf/tensor_ops.hpp"

#include <algorithm>

namespace hopf {

namespace {

Index ipow(Index base, int e) {
  Index r = 1;
  while (e-- > 0) r *= base;
  return r;
}

template <typename E>
std::vector<std::pair<Index, E>> gather(const std::vector<E>& data) {
  std::vector<std::pair<Index, E>> out;
  for (std::size_t i = 0; i < data.size(); ++i) {
    bool nz;
    if constexpr (std::is_same_v<E, mpq_class>) nz = (data[i] != 0);
    else nz = (data[i] != 0);
    if (nz) out.emplace_back(static_cast<Index>(i), data[i]);
  }
  return out;
}

template <typename E>
void combine(std::vector<std::pair<Index, E>>& v, std::uint64_t p) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < v.size();) {
    Index idx = v[i].first;
    E acc = std::move(v[i].second);
    std::size_t j = i + 1;
    for (; j < v.size() && v[j].first == idx; ++j) {
      if constexpr (std::is_same_v<E, mpq_class>) acc += v[j].second;
      else acc = mod_add(acc, v[j].second, p);
    }
    if (acc != 0) {
      v[w].first = idx;
      v[w].second = std::move(acc);
      ++w;
    }
    i = j;
  }
  v.resize(w);
}

}  // namespace

TensorAlgebra::TensorAlgebra(const LinearMap& mul) : field_(mul.field()), n_(mul.rows()) {
  if (mul.cols() != n_ * n_) throw_shape("TensorAlgebra: mul must be n^2 -> n");
  if (field_.is_rational()) {
    qcols_.resize(static_cast<std::size_t>(n_ * n_));
    const auto& a = mul.qdata();
    for (Index i = 0; i < n_; ++i)
      for (Index j = 0; j < n_ * n_; ++j) {
        const auto& v = a[static_cast<std::size_t>(i * n_ * n_ + j)];
        if (v != 0) qcols_[static_cast<std::size_t>(j)].emplace_back(i, v);
      }
  } else {
    pcols_.resize(static_cast<std::size_t>(n_ * n_));
    const auto& a = mul.pdata();
    for (Index i = 0; i < n_; ++i)
      for (Index j = 0; j < n_ * n_; ++j) {
        const auto v = a[static_cast<std::size_t>(i * n_ * n_ + j)];
        if (v != 0) pcols_[static_cast<std::size_t>(j)].emplace_back(i, v);
      }
  }
}

LinearMap TensorAlgebra::mult(int k, const LinearMap& u, const LinearMap& v) const {
  require_same_field(field_, u.field(), "TensorAlgebra::mult");
  require_same_field(field_, v.field(), "TensorAlgebra::mult");
  const Index nk = ipow(n_, k);
  if (u.rows() != nk || v.rows() != nk || u.cols() != 1 || v.cols() != 1)
    throw_shape("TensorAlgebra::mult: vector shape mismatch");

  LinearMap out = LinearMap::zero(field_, nk, 1);
  std::vector<Index> da(static_cast<std::size_t>(k)), db(static_cast<std::size_t>(k));
  auto digits_of = [&](Index idx, std::vector<Index>& d) {
    for (int t = k; t-- > 0;) {
      d[static_cast<std::size_t>(t)] = idx % n_;
      idx /= n_;
    }
  };

  if (field_.is_rational()) {
    auto us = gather(u.qdata());
    auto vs = gather(v.qdata());
    std::vector<std::pair<Index, mpq_class>> terms;
    for (const auto& [ui, uv] : us) {
      digits_of(ui, da);
      for (const auto& [vi, vv] : vs) {
        digits_of(vi, db);
        std::vector<std::pair<Index, mpq_class>> acc = {{0, uv * vv}};
        for (int t = 0; t < k && !acc.empty(); ++t) {
          const auto& col = qcols_[static_cast<std::size_t>(da[static_cast<std::size_t>(t)] * n_ +
                                                            db[static_cast<std::size_t>(t)])];
          std::vector<std::pair<Index, mpq_class>> nxt;
          nxt.reserve(acc.size() * col.size());
          for (const auto& [pi, pv] : acc)
            for (const auto& [ci, cv] : col) nxt.emplace_back(pi * n_ + ci, pv * cv);
          acc = std::move(nxt);
        }
        for (auto& t2 : acc) terms.push_back(std::move(t2));
      }
    }
    combine(terms, 0);
    for (auto& [i, val] : terms) out.qdata()[static_cast<std::size_t>(i)] = std::move(val);
  } else {
    const std::uint64_t p = field_.p;
    auto us = gather(u.pdata());
    auto vs = gather(v.pdata());
    std::vector<std::pair<Index, std::uint64_t>> terms;
    for (const auto& [ui, uv] : us) {
      digits_of(ui, da);
      for (const auto& [vi, vv] : vs) {
        digits_of(vi, db);
        std::vector<std::pair<Index, std::uint64_t>> acc = {{0, mod_mul(uv, vv, p)}};
        for (int t = 0; t < k && !acc.empty(); ++t) {
          const auto& col = pcols_[static_cast<std::size_t>(da[static_cast<std::size_t>(t)] * n_ +
                                                            db[static_cast<std::size_t>(t)])];
          std::vector<std::pair<Index, std::uint64_t>> nxt;
          nxt.reserve(acc.size() * col.size());
          for (const auto& [pi, pv] : acc)
            for (const auto& [ci, cv] : col) nxt.emplace_back(pi * n_ + ci, mod_mul(pv, cv, p));
          acc = std::move(nxt);
        }
        for (auto& t2 : acc) terms.push_back(std::move(t2));
      }
    }
    combine(terms, p);
    for (auto& [i, val] : terms) out.pdata()[static_cast<std::size_t>(i)] = val;
  }
  return out;
}

LinearMap embed_two_legs(const LinearMap& r, const LinearMap& unit, int k, int slot_a, int slot_b) {
  require_same_field(r.field(), unit.field(), "embed_two_legs");
  const Index n = unit.rows();
  if (r.rows() != n * n || r.cols() != 1) throw_shape("embed_two_legs: r must be n^2 x 1");
  if (slot_a == slot_b || slot_a < 0 || slot_b < 0 || slot_a >= k || slot_b >= k)
    throw_shape("embed_two_legs: bad slots");
  const Index nk = ipow(n, k);
  LinearMap out = LinearMap::zero(r.field(), nk, 1);
  std::vector<std::pair<Index, Scalar>> unit_entries;
  for (Index i = 0; i < n; ++i) {
    Scalar s = unit.at(i, 0);
    if (!s.is_zero()) unit_entries.emplace_back(i, s);
  }
  for (Index ij = 0; ij < n * n; ++ij) {
    Scalar rv = r.at(ij, 0);
    if (rv.is_zero()) continue;
    const Index a = ij / n, b = ij % n;
    std::vector<std::pair<std::vector<Index>, Scalar>> partial;
    {
      std::vector<Index> digits(static_cast<std::size_t>(k), -1);
      digits[static_cast<std::size_t>(slot_a)] = a;
      digits[static_cast<std::size_t>(slot_b)] = b;
      partial.emplace_back(std::move(digits), rv);
    }
    for (int t = 0; t < k; ++t) {
      if (t == slot_a || t == slot_b) continue;
      std::vector<std::pair<std::vector<Index>, Scalar>> nxt;
      for (const auto& [digits, coeff] : partial)
        for (const auto& [ui, uv] : unit_entries) {
          auto d2 = digits;
          d2[static_cast<std::size_t>(t)] = ui;
          nxt.emplace_back(std::move(d2), coeff * uv);
        }
      partial = std::move(nxt);
    }
    for (const auto& [digits, coeff] : partial) {
      Index idx = 0;
      for (int t = 0; t < k; ++t) idx = idx * n + digits[static_cast<std::size_t>(t)];
      out.add_at(idx, 0, coeff);
    }
  }
  return out;
}

LinearMap kron_vec(const LinearMap& u, const LinearMap& v) {
  if (u.cols() != 1 || v.cols() != 1) throw_shape("kron_vec: expected column vectors");
  return kron(u, v);
}

}  // namespace hopf
