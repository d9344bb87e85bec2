#include "orbchar/geometry/charts.hpp"

#include <cmath>

namespace orbchar {

ChartGrid ChartGrid::box(std::vector<double> lo, std::vector<double> hi, std::vector<int> sizes,
                         std::vector<bool> periodic) {
    ChartGrid g;
    g.dim = static_cast<int>(sizes.size());
    if (lo.size() != sizes.size() || hi.size() != sizes.size())
        throw std::invalid_argument("grid bounds and sizes disagree");
    if (periodic.empty()) periodic.assign(sizes.size(), false);
    if (periodic.size() != sizes.size()) throw std::invalid_argument("periodic flags and sizes disagree");
    for (int s : sizes)
        if (s < 2) throw std::invalid_argument("grid axes need at least two samples");
    g.lo = std::move(lo);
    g.hi = std::move(hi);
    g.sizes = std::move(sizes);
    g.periodic = std::move(periodic);
    return g;
}

std::size_t ChartGrid::samples() const {
    std::size_t n = 1;
    for (int s : sizes) n *= static_cast<std::size_t>(s);
    return n;
}

double ChartGrid::spacing(int axis) const {
    const double span = hi[axis] - lo[axis];
    return periodic[axis] ? span / sizes[axis] : span / (sizes[axis] - 1);
}

std::vector<int> ChartGrid::unflatten(std::size_t s) const {
    std::vector<int> idx(dim);
    for (int a = dim - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(s % sizes[a]);
        s /= sizes[a];
    }
    return idx;
}

std::size_t ChartGrid::flatten(const std::vector<int>& idx) const {
    std::size_t s = 0;
    for (int a = 0; a < dim; ++a) s = s * sizes[a] + static_cast<std::size_t>(idx[a]);
    return s;
}

std::vector<double> ChartGrid::coords(const std::vector<int>& idx) const {
    std::vector<double> u(dim);
    for (int a = 0; a < dim; ++a) u[a] = coord(a, idx[a]);
    return u;
}

double ChartGrid::quad_weight(const std::vector<int>& idx) const {
    double w = 1.0;
    for (int a = 0; a < dim; ++a)
        if (!periodic[a] && (idx[a] == 0 || idx[a] == sizes[a] - 1)) w *= 0.5;
    return w;
}

double ChartGrid::cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim; ++a) v *= spacing(a);
    return v;
}

int pair_rank(int n, int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

namespace {

// Inverts the row-major n x n matrix m in place into inv; returns det.
double invert(std::vector<double> m, int n, std::vector<double>& inv) {
    inv.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i) * n + i] = 1.0;
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m[static_cast<std::size_t>(r) * n + col]) >
                std::abs(m[static_cast<std::size_t>(piv) * n + col]))
                piv = r;
        if (piv != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(m[static_cast<std::size_t>(piv) * n + c], m[static_cast<std::size_t>(col) * n + c]);
                std::swap(inv[static_cast<std::size_t>(piv) * n + c], inv[static_cast<std::size_t>(col) * n + c]);
            }
            det = -det;
        }
        const double p = m[static_cast<std::size_t>(col) * n + col];
        det *= p;
        if (std::abs(p) < 1e-12) return 0.0;
        const double ip = 1.0 / p;
        for (int c = 0; c < n; ++c) {
            m[static_cast<std::size_t>(col) * n + c] *= ip;
            inv[static_cast<std::size_t>(col) * n + c] *= ip;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = m[static_cast<std::size_t>(r) * n + col];
            if (f == 0.0) continue;
            for (int c = 0; c < n; ++c) {
                m[static_cast<std::size_t>(r) * n + c] -= f * m[static_cast<std::size_t>(col) * n + c];
                inv[static_cast<std::size_t>(r) * n + c] -= f * inv[static_cast<std::size_t>(col) * n + c];
            }
        }
    }
    return det;
}

} // namespace

FormAssembly::FormAssembly(ChartGrid grid, FrameFn frame)
    : grid_(std::move(grid)),
      nn_(grid_.dim * grid_.dim),
      pairs_(static_cast<std::size_t>(grid_.dim) * (grid_.dim - 1) / 2) {
    const int n = grid_.dim;
    const std::size_t count = grid_.samples();
    x_.resize(count * static_cast<std::size_t>(nn_));
    xinv_.resize(count * static_cast<std::size_t>(nn_));

    for (std::size_t s = 0; s < count; ++s) {
        const auto u = grid_.coords(grid_.unflatten(s));
        const std::vector<double> x = frame(u);
        if (static_cast<int>(x.size()) != nn_)
            throw std::invalid_argument("frame callback returned a wrong-sized matrix");
        std::copy(x.begin(), x.end(), x_.begin() + static_cast<std::ptrdiff_t>(s * nn_));
        std::vector<double> inv;
        if (invert(x, n, inv) == 0.0) {
            std::string where;
            for (double c : u) where += (where.empty() ? "(" : ", ") + std::to_string(c);
            throw SingularFrameError("frame is singular at " + where + ")");
        }
        std::copy(inv.begin(), inv.end(), xinv_.begin() + static_cast<std::ptrdiff_t>(s * nn_));
    }

    // Connection solve per sample.  With [e_i, e_j] = sum_k b_{ijk} e_k, the
    // torsion-free antisymmetric connection is
    //   gamma_{ijk} = (b_{jki} + b_{kij} - b_{ijk}) / 2,
    // and omega_ij = sum_k gamma_{ijk} theta_k, stored in the du basis.
    // Brackets are stored for i < j only and mirrored by negation, which
    // makes gamma (hence omega) antisymmetric in (i, j) exactly in floating
    // point, not just up to rounding.
    w_.assign(count * pairs_ * static_cast<std::size_t>(n), 0.0);
    for (std::size_t s = 0; s < count; ++s) {
        const auto idx = grid_.unflatten(s);
        // dx[b][a*n + j] = d(x_{aj}) / du_b
        std::vector<std::vector<double>> dx(static_cast<std::size_t>(n));
        for (int b = 0; b < n; ++b) {
            dx[b].resize(static_cast<std::size_t>(nn_));
            for (int e = 0; e < nn_; ++e)
                dx[b][e] = dfield(x_, static_cast<std::size_t>(nn_), static_cast<std::size_t>(e), idx, b);
        }
        const double* X = &xinv_[s * nn_];
        const double* xm = &x_[s * nn_];
        std::vector<double> bk(pairs_ * static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const std::size_t p = static_cast<std::size_t>(pair_rank(n, i, j));
                for (int a = 0; a < n; ++a) {
                    double lie = 0.0;
                    for (int b = 0; b < n; ++b)
                        lie += xm[b * n + i] * dx[b][a * n + j] - xm[b * n + j] * dx[b][a * n + i];
                    for (int k = 0; k < n; ++k) bk[p * n + k] += X[k * n + a] * lie;
                }
            }
        const auto bsigned = [&](int i, int j, int k) -> double {
            if (i == j) return 0.0;
            if (i < j) return bk[static_cast<std::size_t>(pair_rank(n, i, j)) * n + k];
            return -bk[static_cast<std::size_t>(pair_rank(n, j, i)) * n + k];
        };
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const std::size_t p = static_cast<std::size_t>(pair_rank(n, i, j));
                for (int k = 0; k < n; ++k) {
                    const double gamma = 0.5 * (bsigned(j, k, i) + bsigned(k, i, j) - bsigned(i, j, k));
                    for (int a = 0; a < n; ++a)
                        w_[(s * pairs_ + p) * n + a] += gamma * X[k * n + a];
                }
            }
    }
}

double FormAssembly::dfield(const std::vector<double>& field, std::size_t stride, std::size_t offset,
                            const std::vector<int>& idx, int axis) const {
    const int size = grid_.sizes[axis];
    const double h = grid_.spacing(axis);
    const auto at = [&](int pos) {
        std::vector<int> q = idx;
        q[axis] = pos;
        return field[grid_.flatten(q) * stride + offset];
    };
    const int i = idx[axis];
    if (grid_.periodic[axis])
        return (at((i + 1) % size) - at((i + size - 1) % size)) / (2.0 * h);
    if (size < 3) return (at(size - 1) - at(0)) / h;
    if (i == 0) return (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2.0 * h);
    if (i == size - 1) return (3.0 * at(i) - 4.0 * at(i - 1) + at(i - 2)) / (2.0 * h);
    return (at(i + 1) - at(i - 1)) / (2.0 * h);
}

double FormAssembly::theta(std::size_t s, int i, int a) const {
    return xinv_[s * static_cast<std::size_t>(nn_) + static_cast<std::size_t>(i) * grid_.dim + a];
}

Form FormAssembly::theta_form(std::size_t s, int i) const {
    Form f(grid_.dim, 1);
    for (int a = 0; a < grid_.dim; ++a) f.set_coeff({a}, theta(s, i, a));
    return f;
}

double FormAssembly::omega(std::size_t s, int i, int j, int a) const {
    const int n = grid_.dim;
    if (i == j) return 0.0;
    if (i < j) return w_[(s * pairs_ + pair_rank(n, i, j)) * static_cast<std::size_t>(n) + a];
    return -w_[(s * pairs_ + pair_rank(n, j, i)) * static_cast<std::size_t>(n) + a];
}

Form FormAssembly::omega_form(std::size_t s, int i, int j) const {
    Form f(grid_.dim, 1);
    for (int a = 0; a < grid_.dim; ++a) f.set_coeff({a}, omega(s, i, j, a));
    return f;
}

Form FormAssembly::curvature_form(std::size_t s, int i, int j) const {
    const int n = grid_.dim;
    Form f(n, 2);
    if (i == j) return f;
    const double sign = i < j ? 1.0 : -1.0;
    const int lo = std::min(i, j), hi = std::max(i, j);
    const std::size_t p = static_cast<std::size_t>(pair_rank(n, lo, hi));
    const auto idx = grid_.unflatten(s);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const double dab =
                dfield(w_, pairs_ * static_cast<std::size_t>(n), p * static_cast<std::size_t>(n) + b, idx, a) -
                dfield(w_, pairs_ * static_cast<std::size_t>(n), p * static_cast<std::size_t>(n) + a, idx, b);
            double quad = 0.0;
            for (int k = 0; k < n; ++k)
                quad += omega(s, lo, k, a) * omega(s, k, hi, b) - omega(s, lo, k, b) * omega(s, k, hi, a);
            f.set_coeff({a, b}, sign * (dab - quad));
        }
    return f;
}

FormAssembly::Residual FormAssembly::structure_residual() const {
    const int n = grid_.dim;
    Residual r;
    for (std::size_t s = 0; s < grid_.samples(); ++s) {
        const auto idx = grid_.unflatten(s);
        for (int i = 0; i < n; ++i)
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    const double dtheta =
                        dfield(xinv_, static_cast<std::size_t>(nn_),
                               static_cast<std::size_t>(i) * n + b, idx, a) -
                        dfield(xinv_, static_cast<std::size_t>(nn_),
                               static_cast<std::size_t>(i) * n + a, idx, b);
                    double model = 0.0;
                    for (int j = 0; j < n; ++j)
                        model += omega(s, i, j, a) * theta(s, j, b) - omega(s, i, j, b) * theta(s, j, a);
                    const double dev = std::abs(dtheta - model);
                    if (dev > r.max_abs) r = {dev, s, i, a, b};
                }
    }
    return r;
}

double FormAssembly::integrate(const std::function<double(std::size_t)>& density) const {
    double acc = 0.0;
    for (std::size_t s = 0; s < grid_.samples(); ++s)
        acc += grid_.quad_weight(grid_.unflatten(s)) * density(s);
    return acc * grid_.cell_volume();
}

FormAssembly flat_chart(int dim, int samples_per_axis) {
    ChartGrid g = ChartGrid::box(std::vector<double>(dim, 0.0), std::vector<double>(dim, 1.0),
                                 std::vector<int>(dim, samples_per_axis));
    return FormAssembly(g, [dim](const std::vector<double>&) {
        std::vector<double> x(static_cast<std::size_t>(dim) * dim, 0.0);
        for (int i = 0; i < dim; ++i) x[static_cast<std::size_t>(i) * dim + i] = 1.0;
        return x;
    });
}

FormAssembly polar_chart(int radial_samples, int angular_samples, double r0, double r1) {
    const double two_pi = 8.0 * std::atan(1.0);
    ChartGrid g = ChartGrid::box({r0, 0.0}, {r1, two_pi}, {radial_samples, angular_samples},
                                 {false, true});
    return FormAssembly(g, [](const std::vector<double>& u) {
        // e_1 = d/dr, e_2 = (1/r) d/dphi
        return std::vector<double>{1.0, 0.0, 0.0, 1.0 / u[0]};
    });
}

FormAssembly sphere_band_chart(int theta_samples, int phi_samples, double delta) {
    const double pi = 4.0 * std::atan(1.0);
    ChartGrid g = ChartGrid::box({delta, 0.0}, {pi - delta, 2.0 * pi}, {theta_samples, phi_samples},
                                 {false, true});
    return FormAssembly(g, [](const std::vector<double>& u) {
        // e_1 = d/dtheta, e_2 = (1/sin theta) d/dphi
        return std::vector<double>{1.0, 0.0, 0.0, 1.0 / std::sin(u[0])};
    });
}

FormAssembly rotated_chart(const ChartGrid& grid, const FrameFn& frame,
                           const std::function<double(const std::vector<double>&)>& angle) {
    const int n = grid.dim;
    if (n < 2) throw std::invalid_argument("rotated_chart needs dim >= 2");
    return FormAssembly(grid, [frame, angle, n](const std::vector<double>& u) {
        std::vector<double> x = frame(u);
        const double c = std::cos(angle(u)), s = std::sin(angle(u));
        // New frame f = e . g with g the rotation by the angle field in the
        // (e_1, e_2) plane: f_1 = c e_1 + s e_2, f_2 = -s e_1 + c e_2.
        for (int a = 0; a < n; ++a) {
            const double x1 = x[static_cast<std::size_t>(a) * n + 0];
            const double x2 = x[static_cast<std::size_t>(a) * n + 1];
            x[static_cast<std::size_t>(a) * n + 0] = c * x1 + s * x2;
            x[static_cast<std::size_t>(a) * n + 1] = -s * x1 + c * x2;
        }
        return x;
    });
}

} // namespace orbchar
