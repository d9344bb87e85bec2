#include "orbchar/geometry/phi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "orbchar/geometry/charts.hpp"

namespace orbchar {

double double_factorial(int k) {
    if (k <= 0) return 1.0;
    double r = 1.0;
    for (; k > 1; k -= 2) r *= k;
    return r;
}

double unit_sphere_area(int k) {
    const double pi = 4.0 * std::atan(1.0);
    const int n = k + 1; // ambient dimension
    if (n < 1) throw std::invalid_argument("sphere dimension must be >= 0");
    const int m = n / 2;
    const double num = std::pow(2.0 * pi, m);
    if (n % 2 == 0) return num / double_factorial(n - 2);
    return 2.0 * num / double_factorial(n - 2);
}

PhiInput PhiInput::zeros(int n, int d) {
    PhiInput in;
    in.n = n;
    in.d = d;
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    in.omega_upper.assign(pairs, std::vector<double>(static_cast<std::size_t>(d), 0.0));
    in.Omega_upper.assign(pairs, std::vector<double>(static_cast<std::size_t>(binom(d, 2)), 0.0));
    return in;
}

Form PhiInput::omega(int i, int j) const {
    Form f(d, 1);
    if (i == j) return f;
    const double sign = i < j ? 1.0 : -1.0;
    const auto& row = omega_upper[static_cast<std::size_t>(pair_rank(n, std::min(i, j), std::max(i, j)))];
    return sign * Form::from_coeffs(d, 1, row);
}

Form PhiInput::curvature(int i, int j) const {
    Form f(d, 2);
    if (i == j) return f;
    const double sign = i < j ? 1.0 : -1.0;
    const auto& row = Omega_upper[static_cast<std::size_t>(pair_rank(n, std::min(i, j), std::max(i, j)))];
    return sign * Form::from_coeffs(d, 2, row);
}

std::vector<double>& PhiInput::omega_raw(int i, int j) {
    if (i >= j) throw std::invalid_argument("omega_raw wants i < j");
    return omega_upper[static_cast<std::size_t>(pair_rank(n, i, j))];
}

std::vector<double>& PhiInput::curvature_raw(int i, int j) {
    if (i >= j) throw std::invalid_argument("curvature_raw wants i < j");
    return Omega_upper[static_cast<std::size_t>(pair_rank(n, i, j))];
}

namespace {

double permutation_sign(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1.0 : -1.0;
}

} // namespace

Form euler_form(const PhiInput& in) {
    const int n = in.n;
    Form total(in.d, n);
    if (n % 2 != 0) return total;
    const int m = n / 2;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Form term = Form::scalar(in.d, permutation_sign(perm));
        for (int p = 0; p < m; ++p) term = wedge(term, in.curvature(perm[2 * p], perm[2 * p + 1]));
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const double pi = 4.0 * std::atan(1.0);
    const double scale = (m % 2 == 0 ? 1.0 : -1.0) /
                         (std::pow(2.0, 2 * m) * std::pow(pi, m) * std::tgamma(m + 1.0));
    return scale * total;
}

Form phi_k(const PhiInput& in, int k) {
    const int n = in.n;
    Form total(in.d, n - 1);
    if (k < 0 || 2 * k > n - 1) throw std::invalid_argument("phi_k index out of range");
    std::vector<int> perm(static_cast<std::size_t>(n - 1));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Form term = Form::scalar(in.d, permutation_sign(perm));
        for (int p = 0; p < k; ++p) term = wedge(term, in.curvature(perm[2 * p], perm[2 * p + 1]));
        for (int q = 2 * k; q < n - 1; ++q) term = wedge(term, in.omega(perm[q], n - 1));
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Form assemble_phi(const PhiInput& in) {
    const int n = in.n;
    if (n < 2) throw std::invalid_argument("assemble_phi needs n >= 2");
    Form total(in.d, n - 1);
    for (int k = 0; 2 * k <= n - 1; ++k) {
        const double ck = (k % 2 == 0 ? 1.0 : -1.0) /
                          (std::pow(2.0, k) * std::tgamma(k + 1.0) * double_factorial(n - 2 * k - 1));
        total += ck * phi_k(in, k);
    }
    return (1.0 / (double_factorial(n - 2) * unit_sphere_area(n - 1))) * total;
}

Form phi_closed_n2(const PhiInput& in) {
    if (in.n != 2) throw std::invalid_argument("phi_closed_n2 wants n = 2");
    const double pi = 4.0 * std::atan(1.0);
    return (1.0 / (2.0 * pi)) * in.omega(0, 1);
}

Form phi_closed_n3(const PhiInput& in) {
    if (in.n != 3) throw std::invalid_argument("phi_closed_n3 wants n = 3");
    const double pi = 4.0 * std::atan(1.0);
    return (1.0 / (4.0 * pi)) * (wedge(in.omega(0, 2), in.omega(1, 2)) - in.curvature(0, 1));
}

} // namespace orbchar
