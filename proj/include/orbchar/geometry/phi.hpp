#pragma once

#include <vector>

#include "orbchar/geometry/forms.hpp"

namespace orbchar {

// (-1)!! = 0!! = 1.
double double_factorial(int k);

// Surface measure of the unit sphere S^k in R^(k+1): S^0 -> 2, S^1 -> 2pi,
// S^2 -> 4pi, S^3 -> 2pi^2.
double unit_sphere_area(int k);

// Pointwise input to the curvature-polynomial forms: an n-frame worth of
// connection 1-forms and curvature 2-forms expressed over a d-dimensional
// parameter space.  Index pairs are stored for i < j and mirrored by
// negation.
struct PhiInput {
    int n = 0;
    int d = 0;
    std::vector<std::vector<double>> omega_upper; // pair(i<j) -> d covector components
    std::vector<std::vector<double>> Omega_upper; // pair(i<j) -> C(d,2) 2-form coefficients

    static PhiInput zeros(int n, int d);

    Form omega(int i, int j) const;
    Form curvature(int i, int j) const;
    std::vector<double>& omega_raw(int i, int j);       // i < j
    std::vector<double>& curvature_raw(int i, int j);   // i < j
};

// Euler n-form: zero for odd n; for n = 2m,
//   (-1)^m / (2^(2m) pi^m m!) * sum_{s in S_n} sgn(s)
//       Omega_{s1 s2} ^ ... ^ Omega_{s(n-1) sn}.
Form euler_form(const PhiInput& in);

// Transgression summand Phi_k (degree n-1): k curvature pairs followed by
// n-1-2k connection legs into the last frame index, summed over S_{n-1}.
Form phi_k(const PhiInput& in, int k);

// Boundary form Phi with d(Phi) = -(Euler form):
//   1/((n-2)!! |S^(n-1)|) * sum_k (-1)^k / (2^k k! (n-2k-1)!!) * Phi_k.
Form assemble_phi(const PhiInput& in);

// Closed forms for the two low dimensions, used to cross-check the general
// assembly: n = 2 gives omega_12 / 2pi, n = 3 gives
// (omega_13 ^ omega_23 - Omega_12) / 4pi.
Form phi_closed_n2(const PhiInput& in);
Form phi_closed_n3(const PhiInput& in);

} // namespace orbchar
