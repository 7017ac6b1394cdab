#pragma once

#include "hopf/hopf_algebra.hpp"

namespace hopf {

// Left H-module structure on a carrier space.
struct ModuleAction {
  Index hopf_dim = 0;
  Index carrier_dim = 0;
  LinearMap act;  // H (x) V -> V
};

// Left H-comodule structure.
struct Coaction {
  Index hopf_dim = 0;
  Index carrier_dim = 0;
  LinearMap coact;  // V -> H (x) V
};

// Crossed H-module: simultaneous module and comodule on one carrier.
struct YetterDrinfeld {
  ModuleAction action;
  Coaction coaction;
};

ModuleAction trivial_action(const HopfAlgebra& h, Index carrier_dim);
ModuleAction adjoint_action(const HopfAlgebra& h);  // H on itself
Coaction trivial_coaction(const HopfAlgebra& h, Index carrier_dim);
Coaction regular_coaction(const HopfAlgebra& h);  // comul as coaction
// Pushout along an algebra map d: V -> H of the comul of a: a -> d(a_(1)) (x) a_(2).
Coaction pushout_coaction(const HopfAlgebra& h, const HopfAlgebra& a, const LinearMap& d);

CheckReport check_module(const HopfAlgebra& h, const ModuleAction& m, int jobs = 1);
CheckReport check_module_algebra(const HopfAlgebra& h, const HopfAlgebra& a, const ModuleAction& m,
                                 int jobs = 1);
CheckReport check_module_coalgebra(const HopfAlgebra& h, const HopfAlgebra& a, const ModuleAction& m,
                                   int jobs = 1);
CheckReport check_coaction(const HopfAlgebra& h, const Coaction& c, int jobs = 1);
CheckReport check_comodule_algebra(const HopfAlgebra& h, const HopfAlgebra& a, const Coaction& c,
                                   int jobs = 1);
CheckReport check_comodule_coalgebra(const HopfAlgebra& h, const HopfAlgebra& a, const Coaction& c,
                                     int jobs = 1);

// Compatibility of action and coaction making the pair a crossed H-module:
//   coact(h |> v) = h_(1) v^(1) S(h_(3)) (x) h_(2) |> v^(2).
CheckReport check_yetter_drinfeld(const HopfAlgebra& h, const YetterDrinfeld& v, int jobs = 1);

// The braiding v (x) w -> (v^(1) |> w) (x) v^(2); throws a precondition
// error when the resulting matrix is singular (corrupted input).
LinearMap braiding(const HopfAlgebra& h, const YetterDrinfeld& v, const YetterDrinfeld& w);
// Same matrix without the invertibility gate (used by checkers that
// compute equivalences on possibly-invalid data).
LinearMap braiding_map(const HopfAlgebra& h, const Coaction& v_coact, const ModuleAction& w_act,
                       Index dim_v, Index dim_w);

}  // namespace hopf
