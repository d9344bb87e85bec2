#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbchar/geometry/forms.hpp"

namespace orbchar {

struct SingularFrameError : std::runtime_error {
    explicit SingularFrameError(const std::string& what) : std::runtime_error(what) {}
};

// Tensor-product sample grid on a box.  Periodic axes sample [lo, hi) with
// uniform weights; the rest sample [lo, hi] inclusive with trapezoid
// weights.
struct ChartGrid {
    int dim = 0;
    std::vector<int> sizes;
    std::vector<double> lo, hi;
    std::vector<bool> periodic;

    static ChartGrid box(std::vector<double> lo, std::vector<double> hi, std::vector<int> sizes,
                         std::vector<bool> periodic = {});

    std::size_t samples() const;
    double spacing(int axis) const;
    double coord(int axis, int index) const { return lo[axis] + spacing(axis) * index; }
    std::vector<int> unflatten(std::size_t s) const;
    std::size_t flatten(const std::vector<int>& idx) const;
    std::vector<double> coords(const std::vector<int>& idx) const;
    double quad_weight(const std::vector<int>& idx) const;
    double cell_volume() const;
};

// Frame callback: fills the n x n matrix x at chart point u, column j being
// the coordinate components of the j-th frame vector e_j (row-major, so
// x[a*n + j] = component a of e_j).
using FrameFn = std::function<std::vector<double>(const std::vector<double>& u)>;

// Moving-frame pipeline over one chart: coframe theta = rows of x^{-1},
// connection forms from frame brackets (solved torsion-free and exactly
// antisymmetric by construction), curvature from finite differences of the
// connection.  All fields are assembled eagerly at construction.
class FormAssembly {
public:
    FormAssembly(ChartGrid grid, FrameFn frame);

    const ChartGrid& grid() const { return grid_; }
    int n() const { return grid_.dim; }

    // Coframe component theta_i(d/du_a) = X_{ia}.
    double theta(std::size_t s, int i, int a) const;
    Form theta_form(std::size_t s, int i) const;

    // Connection component omega_ij(d/du_a); omega_ji is the exact negation.
    double omega(std::size_t s, int i, int j, int a) const;
    Form omega_form(std::size_t s, int i, int j) const;

    // Curvature 2-form Omega_ij = d(omega_ij) - sum_k omega_ik ^ omega_kj.
    Form curvature_form(std::size_t s, int i, int j) const;

    // Worst deviation of d(theta_i) (differenced from the coframe field)
    // from sum_j omega_ij ^ theta_j (assembled from the frame brackets).
    // The two sides discretize independently, so this is a real residual
    // that must shrink at second order in the grid spacing.
    struct Residual {
        double max_abs = 0.0;
        std::size_t sample = 0;
        int i = 0, a = 0, b = 1;
    };
    Residual structure_residual() const;

    // Quadrature of a per-sample density against the grid measure.
    double integrate(const std::function<double(std::size_t)>& density) const;

private:
    double dfield(const std::vector<double>& field, std::size_t stride, std::size_t offset,
                  const std::vector<int>& idx, int axis) const;

    ChartGrid grid_;
    int nn_;            // dim * dim
    std::size_t pairs_; // dim * (dim-1) / 2
    std::vector<double> x_;  // samples x (a*n + i): frame components
    std::vector<double> xinv_;  // samples x (i*n + a): coframe components
    std::vector<double> w_;  // samples x pair(i<j) x a: connection in the du basis
};

int pair_rank(int n, int i, int j); // i < j

// Stock charts used by the tests and scenario checks.
FormAssembly flat_chart(int dim, int samples_per_axis);
// Polar coordinates (r, phi) with orthonormal frame (d/dr, (1/r) d/dphi).
FormAssembly polar_chart(int radial_samples, int angular_samples, double r0, double r1);
// Unit-sphere band (theta, phi), theta in [delta, pi - delta], frame
// (d/dtheta, (1/sin theta) d/dphi).
FormAssembly sphere_band_chart(int theta_samples, int phi_samples, double delta);
// Same charts with the frame rotated pointwise by the given angle field.
FormAssembly rotated_chart(const ChartGrid& grid, const FrameFn& frame,
                           const std::function<double(const std::vector<double>&)>& angle);

} // namespace orbchar
