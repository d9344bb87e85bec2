#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "orbchar/geometry/phi.hpp"

using namespace orbchar;

namespace {

constexpr double kPi = 3.14159265358979323846;

PhiInput random_input(std::mt19937_64& rng, int n, int d) {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    PhiInput in = PhiInput::zeros(n, d);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            for (auto& v : in.omega_raw(i, j)) v = u(rng);
            for (auto& v : in.curvature_raw(i, j)) v = u(rng);
        }
    return in;
}

} // namespace

TEST_CASE("double factorial and sphere areas") {
    CHECK(double_factorial(-1) == 1.0);
    CHECK(double_factorial(0) == 1.0);
    CHECK(double_factorial(1) == 1.0);
    CHECK(double_factorial(2) == 2.0);
    CHECK(double_factorial(3) == 3.0);
    CHECK(double_factorial(4) == 8.0);
    CHECK(double_factorial(5) == 15.0);
    CHECK(double_factorial(6) == 48.0);

    CHECK(unit_sphere_area(0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(unit_sphere_area(1) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
    CHECK(unit_sphere_area(2) == doctest::Approx(4.0 * kPi).epsilon(1e-15));
    CHECK(unit_sphere_area(3) == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-15));
}

TEST_CASE("input mirroring is exactly antisymmetric") {
    std::mt19937_64 rng(11);
    const PhiInput in = random_input(rng, 3, 4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            CHECK((in.omega(i, j) + in.omega(j, i)).max_abs() == 0.0);
            CHECK((in.curvature(i, j) + in.curvature(j, i)).max_abs() == 0.0);
        }
    CHECK(in.omega(1, 1).max_abs() == 0.0);
}

TEST_CASE("general assembly matches the closed form for surfaces") {
    std::mt19937_64 rng(909);
    for (int d = 2; d <= 5; ++d)
        for (int t = 0; t < 40; ++t) {
            const PhiInput in = random_input(rng, 2, d);
            const Form general = assemble_phi(in);
            CHECK(general.degree() == 1);
            CHECK((general - phi_closed_n2(in)).max_abs() <= 1e-12);
        }
}

TEST_CASE("general assembly matches the closed form for 3-frames") {
    std::mt19937_64 rng(919);
    for (int d = 3; d <= 5; ++d)
        for (int t = 0; t < 40; ++t) {
            const PhiInput in = random_input(rng, 3, d);
            const Form general = assemble_phi(in);
            CHECK(general.degree() == 2);
            CHECK((general - phi_closed_n3(in)).max_abs() <= 1e-12);
        }
}

TEST_CASE("curvature-free input reduces to the pure connection term") {
    std::mt19937_64 rng(929);
    const int n = 4, d = 5;
    PhiInput in = PhiInput::zeros(n, d);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (auto& v : in.omega_raw(i, j)) v = std::uniform_real_distribution<double>(-1, 1)(rng);
    const double scale = 1.0 / (double_factorial(n - 2) * unit_sphere_area(n - 1) *
                                double_factorial(n - 1));
    const Form expected = scale * phi_k(in, 0);
    CHECK((assemble_phi(in) - expected).max_abs() <= 1e-12);
}

TEST_CASE("phi_k shape and guards") {
    std::mt19937_64 rng(939);
    const PhiInput in = random_input(rng, 3, 4);
    CHECK(phi_k(in, 0).degree() == 2);
    CHECK(phi_k(in, 1).degree() == 2);
    CHECK_THROWS_AS(phi_k(in, 2), std::invalid_argument);
    CHECK_THROWS_AS(phi_k(in, -1), std::invalid_argument);
    CHECK_THROWS_AS(assemble_phi(PhiInput::zeros(1, 3)), std::invalid_argument);
    CHECK_THROWS_AS(phi_closed_n2(random_input(rng, 3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(phi_closed_n3(random_input(rng, 2, 3)), std::invalid_argument);
}

TEST_CASE("Euler form vanishes in odd rank and matches the surface normalization") {
    std::mt19937_64 rng(949);
    for (int d = 3; d <= 5; ++d) {
        const PhiInput odd = random_input(rng, 3, d);
        CHECK(euler_form(odd).max_abs() == 0.0);
    }
    for (int t = 0; t < 40; ++t) {
        const PhiInput in = random_input(rng, 2, 3);
        const Form e = euler_form(in);
        CHECK(e.degree() == 2);
        CHECK((e - (-1.0 / (2.0 * kPi)) * in.curvature(0, 1)).max_abs() <= 1e-12);
    }
}
