#pragma once

#include "pcup/complex.hpp"
#include "pcup/invariants.hpp"

namespace pcup::fixtures {

// Filtration of a pinched 2-torus in four stages:
//   t=0  meridian circle (3-cycle)
//   t=1  longitude circle attached at one shared vertex
//   t=2  the full 9-vertex triangulated torus
//   t=3  a disk coning off the meridian
// Total barcode: H0 [0,inf), H1 [0,3) and [1,inf), H2 [2,inf).
filtered_complex pinched_torus();

// Filtration of the wedge of two 2-disks:
//   t=0 top circle, t=1 bottom circle (wedged), t=2 top filled, t=3 bottom filled.
// Positive barcode: H1 [0,2) and [1,3).
filtered_complex two_disks();

// Triangulated circle: 3 vertices at 0, 3 edges at 1.
filtered_complex triangulated_circle();

// cup(VR(S^1)): 1 on arcs (2*pi*l/(2l+1), 2*pi*(l+1)/(2l+3)), l = 0..blocks-1,
// with the tail arcs lumped into the final cell before pi.
step_invariant cup_vr_circle(int blocks = 6);

// cup(VR(T^2)): the same arcs with value 2 (product of two circles).
step_invariant cup_vr_torus2(int blocks = 6);

// cup(VR(S^1 v S^2 v S^1)): 1 below zeta_2 = arccos(-1/3); the undetermined
// region above is encoded with the values forced by maximal-bar-length
// arguments (no value crosses zeta_2, nothing survives past pi).
step_invariant cup_vr_wedge_s1s2s1();

// rk(Phi(VR(T^2 v S^3))) and rk(Phi(VR((S^1 x S^2) v S^1))) up to degree 3,
// powers 1..2, with gray regions encoded as forced zeros.
step_invariant phi_rank_t2s3();
step_invariant phi_rank_s1s2s1();

}  // namespace pcup::fixtures
