#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace orbchar {

std::int64_t binom(int n, int k);

// Strictly increasing index tuples from {0..d-1}, ranked in lexicographic
// order; the coefficient layout of Form below.
std::int64_t tuple_rank(int d, const std::vector<int>& t);
std::vector<int> tuple_unrank(int d, int k, std::int64_t r);

// Alternating form at a single point of a d-dimensional chart: degree k,
// dense coefficients over the C(d,k) increasing tuples.  Degree above d is
// the zero form with an empty coefficient array.
class Form {
public:
    Form() = default;
    Form(int dim, int degree);

    static Form scalar(int dim, double value);
    static Form covector(int dim, int i);
    static Form from_coeffs(int dim, int degree, std::vector<double> coeffs);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    const std::vector<double>& coeffs() const { return c_; }

    // Arbitrary index order; antisymmetry sign applied, repeats give 0.
    double coeff(std::vector<int> idx) const;
    // idx must be strictly increasing.
    void set_coeff(const std::vector<int>& idx, double value);

    // The single coefficient of a top-degree form (degree == dim).
    double top() const;

    double max_abs() const;

    Form& operator+=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(const Form& a, const Form& b);
    friend Form operator*(double s, Form a);

private:
    int dim_ = 0;
    int degree_ = 0;
    std::vector<double> c_;
};

Form wedge(const Form& a, const Form& b);

} // namespace orbchar
