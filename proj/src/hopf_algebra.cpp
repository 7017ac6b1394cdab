#include "hopf/hopf_algebra.hpp"

namespace hopf {

void validate_shapes(const HopfAlgebra& h, const std::string& name) {
  const Index n = h.dim;
  auto expect = [&](const LinearMap& m, Index r, Index c, const char* what) {
    if (m.rows() != r || m.cols() != c)
      throw_shape(name + ": " + what + " must be " + std::to_string(r) + "x" + std::to_string(c) +
                  ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    require_same_field(h.mul.field(), m.field(), name.c_str());
  };
  if (n <= 0) throw_shape(name + ": dimension must be positive");
  expect(h.mul, n, n * n, "mul");
  expect(h.unit, n, 1, "unit");
  expect(h.comul, n * n, n, "comul");
  expect(h.counit, 1, n, "counit");
  expect(h.antipode, n, n, "antipode");
}

CheckReport check_algebra(const LinearMap& mul, const LinearMap& unit, int jobs) {
  const Field& f = mul.field();
  const Index n = mul.rows();
  if (mul.cols() != n * n) throw_shape("check_algebra: mul must be n^2 -> n");
  if (unit.rows() != n || unit.cols() != 1) throw_shape("check_algebra: unit must be n x 1");
  CheckReport r;

  Pipeline lhs(f, {n, n, n});
  lhs.apply(mul, 0, 2).apply(mul, 0, 2);
  Pipeline rhs(f, {n, n, n});
  rhs.apply(mul, 1, 2).apply(mul, 0, 2);
  r.add(compare_pipelines_entry("assoc", lhs, rhs, jobs));

  Pipeline ul(f, {n});
  ul.insert(unit, 0).apply(mul, 0, 2);
  r.add(compare_pipelines_entry("unit_left", ul, Pipeline(f, {n}), jobs));

  Pipeline ur(f, {n});
  ur.insert(unit, 1).apply(mul, 0, 2);
  r.add(compare_pipelines_entry("unit_right", ur, Pipeline(f, {n}), jobs));
  return r;
}

CheckReport check_coalgebra(const LinearMap& comul, const LinearMap& counit, int jobs) {
  const Field& f = comul.field();
  const Index n = comul.cols();
  if (comul.rows() != n * n) throw_shape("check_coalgebra: comul must be n -> n^2");
  if (counit.rows() != 1 || counit.cols() != n) throw_shape("check_coalgebra: counit must be 1 x n");
  CheckReport r;

  Pipeline lhs(f, {n});
  lhs.apply(comul, 0, 1, {n, n}).apply(comul, 0, 1, {n, n});
  Pipeline rhs(f, {n});
  rhs.apply(comul, 0, 1, {n, n}).apply(comul, 1, 1, {n, n});
  r.add(compare_pipelines_entry("coassoc", lhs, rhs, jobs));

  Pipeline cl(f, {n});
  cl.apply(comul, 0, 1, {n, n}).apply(counit, 0, 1, {1});
  r.add(compare_pipelines_entry("counit_left", cl, Pipeline(f, {n}), jobs));

  Pipeline cr(f, {n});
  cr.apply(comul, 0, 1, {n, n}).apply(counit, 1, 1, {1});
  r.add(compare_pipelines_entry("counit_right", cr, Pipeline(f, {n}), jobs));
  return r;
}

namespace {

CheckReport check_bialgebra(const HopfAlgebra& h, int jobs) {
  const Field& f = h.field();
  const Index n = h.dim;
  CheckReport r;

  Pipeline lhs(f, {n, n});
  lhs.apply(h.mul, 0, 2).apply(h.comul, 0, 1, {n, n});
  Pipeline rhs(f, {n, n});
  rhs.apply(h.comul, 0, 1, {n, n})
      .apply(h.comul, 2, 1, {n, n})
      .permute({0, 2, 1, 3})
      .apply(h.mul, 0, 2)
      .apply(h.mul, 1, 2);
  r.add(compare_pipelines_entry("comul_mult", lhs, rhs, jobs));

  r.add(compare_maps_entry("comul_unit", compose(h.comul, h.unit), kron(h.unit, h.unit)));

  Pipeline cl(f, {n, n});
  cl.apply(h.mul, 0, 2).apply(h.counit, 0, 1, {1});
  Pipeline cr(f, {n, n});
  cr.apply(h.counit, 0, 1, {1}).apply(h.counit, 1, 1, {1});
  r.add(compare_pipelines_entry("counit_mult", cl, cr, jobs));

  r.add(compare_maps_entry("counit_unit", compose(h.counit, h.unit), LinearMap::identity(f, 1)));
  return r;
}

}  // namespace

CheckReport check_hopf(const HopfAlgebra& h, int jobs) {
  validate_shapes(h);
  const Field& f = h.field();
  const Index n = h.dim;
  CheckReport r = check_algebra(h.mul, h.unit, jobs);
  r.append(check_coalgebra(h.comul, h.counit, jobs));
  r.append(check_bialgebra(h, jobs));

  const LinearMap eta_eps = compose(h.unit, h.counit);
  Pipeline al(f, {n});
  al.apply(h.comul, 0, 1, {n, n}).apply(h.antipode, 0, 1).apply(h.mul, 0, 2);
  r.add(compare_pipelines_entry("antipode_left", al, Pipeline::of_map(eta_eps), jobs));

  Pipeline ar(f, {n});
  ar.apply(h.comul, 0, 1, {n, n}).apply(h.antipode, 1, 1).apply(h.mul, 0, 2);
  r.add(compare_pipelines_entry("antipode_right", ar, Pipeline::of_map(eta_eps), jobs));

  const Index rk = rank(h.antipode);
  r.add(entry_bool("antipode_invertible", rk == n,
                   rk == n ? "" : "rank " + std::to_string(rk) + " < " + std::to_string(n)));
  return r;
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  validate_shapes(h);
  HopfAlgebra d;
  d.dim = h.dim;
  d.mul = h.comul.transpose();
  d.unit = h.counit.transpose();
  d.comul = h.mul.transpose();
  d.counit = h.unit.transpose();
  d.antipode = h.antipode.transpose();
  return d;
}

HopfAlgebra tensor_hopf(const HopfAlgebra& a, const HopfAlgebra& b) {
  require_same_field(a.field(), b.field(), "tensor_hopf");
  const Field& f = a.field();
  const Index na = a.dim, nb = b.dim;
  HopfAlgebra t;
  t.dim = na * nb;
  t.mul = compose(kron(a.mul, b.mul), tensor_permutation(f, {na, nb, na, nb}, {0, 2, 1, 3}));
  t.unit = kron(a.unit, b.unit);
  t.comul = compose(tensor_permutation(f, {na, na, nb, nb}, {0, 2, 1, 3}), kron(a.comul, b.comul));
  t.counit = kron(a.counit, b.counit);
  t.antipode = kron(a.antipode, b.antipode);
  return t;
}

bool is_commutative(const HopfAlgebra& h) {
  return compose(h.mul, flip(h.field(), h.dim, h.dim)) == h.mul;
}

bool is_cocommutative(const HopfAlgebra& h) {
  return compose(flip(h.field(), h.dim, h.dim), h.comul) == h.comul;
}

std::optional<LinearMap> solve_antipode(const LinearMap& mul, const LinearMap& unit,
                                        const LinearMap& comul, const LinearMap& counit) {
  const Field& f = mul.field();
  const Index n = mul.rows();
  // Left convolution equation mul(T (x) id)comul = unit.counit, linear in T.
  LinearMap sys = LinearMap::zero(f, n * n, n * n);
  for (Index j = 0; j < n; ++j) {
    for (const auto& [rq, dv] : comul.column_entries(j)) {
      const Index rr = rq / n, q = rq % n;
      for (Index p = 0; p < n; ++p) {
        for (const auto& [i, mv] : mul.column_entries(p * n + q)) {
          sys.add_at(i * n + j, p * n + rr, mv * dv);
        }
      }
    }
  }
  LinearMap rhsmat = compose(unit, counit);
  LinearMap rhs = LinearMap::zero(f, n * n, 1);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) rhs.set(i * n + j, 0, rhsmat.at(i, j));
  auto x = solve(sys, rhs);
  if (!x) return std::nullopt;
  LinearMap t = LinearMap::zero(f, n, n);
  for (Index p = 0; p < n; ++p)
    for (Index rr = 0; rr < n; ++rr) t.set(p, rr, x->at(p * n + rr, 0));
  // verify the right-hand law as well
  Pipeline right(f, {n});
  right.apply(comul, 0, 1, {n, n}).apply(t, 1, 1).apply(mul, 0, 2);
  if (!(right.to_map() == rhsmat)) return std::nullopt;
  return t;
}

LinearMap iterated_comul(const HopfAlgebra& h, int k) {
  if (k < 1) throw_shape("iterated_comul: k must be >= 1");
  const Index n = h.dim;
  Pipeline p(h.field(), {n});
  for (int t = 1; t < k; ++t) p.apply(h.comul, 0, 1, {n, n});
  return p.to_map();
}

LinearMap adjoint_action_map(const HopfAlgebra& h) {
  const Index n = h.dim;
  Pipeline p(h.field(), {n, n});
  p.apply(h.comul, 0, 1, {n, n})
      .permute({0, 2, 1})
      .apply(h.antipode, 2, 1)
      .apply(h.mul, 0, 2)
      .apply(h.mul, 0, 2);
  return p.to_map();
}

}  // namespace hopf
