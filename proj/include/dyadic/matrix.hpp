#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "dyadic/signal.hpp"

namespace dyadic {

/// Dense real matrix of a linear operator on Signal1D (dim 2^n) or Signal2D
/// (dim 4^n) in the cell basis; 2D cells are flattened row-major, x first.
class OperatorMatrix {
public:
    explicit OperatorMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) {}

    std::size_t dim() const { return dim_; }
    double& at(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    double at(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
    const std::vector<double>& entries() const { return a_; }

    std::vector<double> apply(const std::vector<double>& x) const;
    OperatorMatrix transpose() const;

    OperatorMatrix& operator-=(const OperatorMatrix& o);

private:
    std::size_t dim_;
    std::vector<double> a_;
};

double max_abs_entry(const OperatorMatrix& m);
double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b);

// Matrix of an operator, assembled by applying it to each cell indicator.
OperatorMatrix matrix_of(const std::function<Signal1D(const Signal1D&)>& op, int depth);
OperatorMatrix matrix_of2(const std::function<Signal2D(const Signal2D&)>& op, int depth);

} // namespace dyadic
