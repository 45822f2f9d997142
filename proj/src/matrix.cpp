#include "dyadic/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace dyadic {

std::vector<double> OperatorMatrix::apply(const std::vector<double>& x) const {
    std::vector<double> y(dim_, 0.0);
    for (std::size_t r = 0; r < dim_; ++r) {
        double s = 0.0;
        const double* row = a_.data() + r * dim_;
        for (std::size_t c = 0; c < dim_; ++c) s += row[c] * x[c];
        y[r] = s;
    }
    return y;
}

OperatorMatrix OperatorMatrix::transpose() const {
    OperatorMatrix t(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) t.at(c, r) = at(r, c);
    return t;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

double max_abs_entry(const OperatorMatrix& m) {
    double v = 0.0;
    for (double x : m.entries()) v = std::max(v, std::abs(x));
    return v;
}

double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
    double v = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        v = std::max(v, std::abs(a.entries()[k] - b.entries()[k]));
    return v;
}

OperatorMatrix matrix_of(const std::function<Signal1D(const Signal1D&)>& op, int depth) {
    const std::size_t dim = std::size_t{1} << depth;
    OperatorMatrix m(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        Signal1D e(depth);
        e[c] = 1.0;
        const Signal1D col = op(e);
        for (std::size_t r = 0; r < dim; ++r) m.at(r, c) = col[r];
    }
    return m;
}

OperatorMatrix matrix_of2(const std::function<Signal2D(const Signal2D&)>& op, int depth) {
    const std::size_t side = std::size_t{1} << depth;
    const std::size_t dim = side * side;
    OperatorMatrix m(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        Signal2D e(depth);
        e.values()[c] = 1.0;
        const Signal2D col = op(e);
        for (std::size_t r = 0; r < dim; ++r) m.at(r, c) = col.values()[r];
    }
    return m;
}

} // namespace dyadic
