#pragma once

#include <cstddef>
#include <vector>

#include "dyadic/interval.hpp"

namespace dyadic {

/// Step function on [0,1), constant on the 2^depth cells of the dyadic grid.
class Signal1D {
public:
    explicit Signal1D(int depth);
    Signal1D(int depth, std::vector<double> values);

    int depth() const { return depth_; }
    std::size_t size() const { return v_.size(); }
    double cell_width() const { return pow2d(-depth_); }

    double& operator[](std::size_t c) { return v_[c]; }
    double operator[](std::size_t c) const { return v_[c]; }
    const std::vector<double>& values() const { return v_; }
    std::vector<double>& values() { return v_; }

    Signal1D& operator+=(const Signal1D& o);
    Signal1D& operator-=(const Signal1D& o);
    Signal1D& operator*=(double s);

private:
    int depth_;
    std::vector<double> v_;
};

Signal1D operator+(Signal1D a, const Signal1D& b);
Signal1D operator-(Signal1D a, const Signal1D& b);
Signal1D operator*(double s, Signal1D a);
Signal1D operator*(const Signal1D& a, const Signal1D& b); // pointwise product

double inner(const Signal1D& f, const Signal1D& g); // ∫ fg
double mean(const Signal1D& f);
double average(const Signal1D& f, const DyadicInterval& i); // ⟨f⟩_I, level ≤ depth
double l2_norm(const Signal1D& f);
double linf_norm(const Signal1D& f);
Signal1D refine(const Signal1D& f, int new_depth);

/// Step function on [0,1)^2, constant on cells; stored row-major with x first:
/// value(ix, iy) = values[ix * 2^depth + iy].
class Signal2D {
public:
    explicit Signal2D(int depth);
    Signal2D(int depth, std::vector<double> values);

    int depth() const { return depth_; }
    std::size_t side() const { return std::size_t{1} << depth_; }
    std::size_t size() const { return v_.size(); }
    double cell_area() const { return pow2d(-2 * depth_); }

    double& at(std::size_t ix, std::size_t iy) { return v_[ix * side() + iy]; }
    double at(std::size_t ix, std::size_t iy) const { return v_[ix * side() + iy]; }
    const std::vector<double>& values() const { return v_; }
    std::vector<double>& values() { return v_; }

    Signal1D slice_fixed_y(std::size_t iy) const; // x ↦ f(x, y)
    Signal1D slice_fixed_x(std::size_t ix) const; // y ↦ f(x, y)
    void set_slice_fixed_y(std::size_t iy, const Signal1D& s);
    void set_slice_fixed_x(std::size_t ix, const Signal1D& s);

    Signal2D& operator+=(const Signal2D& o);
    Signal2D& operator-=(const Signal2D& o);
    Signal2D& operator*=(double s);

private:
    int depth_;
    std::vector<double> v_;
};

Signal2D operator+(Signal2D a, const Signal2D& b);
Signal2D operator-(Signal2D a, const Signal2D& b);
Signal2D operator*(double s, Signal2D a);
Signal2D operator*(const Signal2D& a, const Signal2D& b); // pointwise product

double inner2(const Signal2D& f, const Signal2D& g);
double mean2(const Signal2D& f);
double average2(const Signal2D& f, const DyadicRectangle& r);
double l2_norm2(const Signal2D& f);
double linf_norm2(const Signal2D& f);
Signal2D refine2(const Signal2D& f, int new_depth);

// fx(x) * fy(y)
Signal2D outer(const Signal1D& fx, const Signal1D& fy);

} // namespace dyadic
