#include "orbchar/geometry/forms.hpp"

#include <algorithm>
#include <cmath>

namespace orbchar {

std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::int64_t tuple_rank(int d, const std::vector<int>& t) {
    const int k = static_cast<int>(t.size());
    std::int64_t rank = 0;
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        for (int j = prev + 1; j < t[i]; ++j) rank += binom(d - 1 - j, k - 1 - i);
        prev = t[i];
    }
    return rank;
}

std::vector<int> tuple_unrank(int d, int k, std::int64_t r) {
    std::vector<int> t;
    int next = 0;
    for (int i = 0; i < k; ++i) {
        for (int j = next;; ++j) {
            const std::int64_t below = binom(d - 1 - j, k - 1 - i);
            if (r < below) {
                t.push_back(j);
                next = j + 1;
                break;
            }
            r -= below;
        }
    }
    return t;
}

Form::Form(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 0 || degree < 0) throw std::invalid_argument("negative form dimension or degree");
    c_.assign(static_cast<std::size_t>(binom(dim, degree)), 0.0);
}

Form Form::scalar(int dim, double value) {
    Form f(dim, 0);
    f.c_[0] = value;
    return f;
}

Form Form::covector(int dim, int i) {
    Form f(dim, 1);
    if (i < 0 || i >= dim) throw std::invalid_argument("covector index out of range");
    f.c_[static_cast<std::size_t>(i)] = 1.0;
    return f;
}

Form Form::from_coeffs(int dim, int degree, std::vector<double> coeffs) {
    Form f(dim, degree);
    if (coeffs.size() != f.c_.size()) throw std::invalid_argument("coefficient count mismatch");
    f.c_ = std::move(coeffs);
    return f;
}

double Form::coeff(std::vector<int> idx) const {
    if (static_cast<int>(idx.size()) != degree_) throw std::invalid_argument("index arity mismatch");
    // Sort tracking swap parity; any repeat kills the term.
    double sign = 1.0;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) return 0.0;
            if (idx[i] > idx[j]) {
                std::swap(idx[i], idx[j]);
                sign = -sign;
            }
        }
    for (int v : idx)
        if (v < 0 || v >= dim_) throw std::invalid_argument("form index out of range");
    if (c_.empty()) return 0.0;
    return sign * c_[static_cast<std::size_t>(tuple_rank(dim_, idx))];
}

void Form::set_coeff(const std::vector<int>& idx, double value) {
    if (static_cast<int>(idx.size()) != degree_) throw std::invalid_argument("index arity mismatch");
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] >= idx[i + 1]) throw std::invalid_argument("set_coeff wants strictly increasing indices");
    if (!idx.empty() && (idx.front() < 0 || idx.back() >= dim_))
        throw std::invalid_argument("form index out of range");
    c_[static_cast<std::size_t>(tuple_rank(dim_, idx))] = value;
}

double Form::top() const {
    if (degree_ != dim_) throw std::logic_error("top() needs a top-degree form");
    return c_.empty() ? 0.0 : c_[0];
}

double Form::max_abs() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
}

Form& Form::operator+=(const Form& o) {
    if (dim_ != o.dim_ || degree_ != o.degree_)
        throw std::invalid_argument("form shape mismatch in +");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Form operator-(const Form& a, const Form& b) { return a + (-1.0 * b); }

Form operator*(double s, Form a) {
    for (double& v : a.c_) v *= s;
    return a;
}

Form wedge(const Form& a, const Form& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("form dimension mismatch in wedge");
    const int d = a.dim();
    Form out(d, a.degree() + b.degree());
    if (out.coeffs().empty()) return out;

    const int ka = a.degree();
    const int kb = b.degree();
    std::vector<double> acc(out.coeffs().size(), 0.0);
    for (std::int64_t ra = 0; ra < static_cast<std::int64_t>(a.coeffs().size()); ++ra) {
        const double ca = a.coeffs()[static_cast<std::size_t>(ra)];
        if (ca == 0.0) continue;
        const std::vector<int> ta = tuple_unrank(d, ka, ra);
        for (std::int64_t rb = 0; rb < static_cast<std::int64_t>(b.coeffs().size()); ++rb) {
            const double cb = b.coeffs()[static_cast<std::size_t>(rb)];
            if (cb == 0.0) continue;
            const std::vector<int> tb = tuple_unrank(d, kb, rb);
            // Merge sign: inversions between the two sorted tuples; shared
            // indices annihilate the term.
            bool overlap = false;
            int inversions = 0;
            for (int x : ta)
                for (int y : tb) {
                    if (x == y) overlap = true;
                    if (x > y) ++inversions;
                }
            if (overlap) continue;
            std::vector<int> merged;
            merged.reserve(ta.size() + tb.size());
            std::merge(ta.begin(), ta.end(), tb.begin(), tb.end(), std::back_inserter(merged));
            const double sign = (inversions % 2 == 0) ? 1.0 : -1.0;
            acc[static_cast<std::size_t>(tuple_rank(d, merged))] += sign * ca * cb;
        }
    }
    return Form::from_coeffs(d, ka + kb, std::move(acc));
}

} // namespace orbchar
