#include "dyadic/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dyadic {

namespace {

void require_same_depth(int a, int b) {
    if (a != b)
        throw DepthMismatchError("signal depth mismatch: " + std::to_string(a) + " vs " +
                                 std::to_string(b));
}

} // namespace

Signal1D::Signal1D(int depth) : depth_(depth) {
    if (depth < 1 || depth > 24) throw InvalidIntervalError("signal depth out of range");
    v_.assign(std::size_t{1} << depth, 0.0);
}

Signal1D::Signal1D(int depth, std::vector<double> values) : depth_(depth), v_(std::move(values)) {
    if (depth < 1 || depth > 24) throw InvalidIntervalError("signal depth out of range");
    if (v_.size() != (std::size_t{1} << depth))
        throw InvalidIntervalError("signal value count does not match 2^depth");
}

Signal1D& Signal1D::operator+=(const Signal1D& o) {
    require_same_depth(depth_, o.depth_);
    for (std::size_t c = 0; c < v_.size(); ++c) v_[c] += o.v_[c];
    return *this;
}

Signal1D& Signal1D::operator-=(const Signal1D& o) {
    require_same_depth(depth_, o.depth_);
    for (std::size_t c = 0; c < v_.size(); ++c) v_[c] -= o.v_[c];
    return *this;
}

Signal1D& Signal1D::operator*=(double s) {
    for (auto& x : v_) x *= s;
    return *this;
}

Signal1D operator+(Signal1D a, const Signal1D& b) { return a += b; }
Signal1D operator-(Signal1D a, const Signal1D& b) { return a -= b; }
Signal1D operator*(double s, Signal1D a) { return a *= s; }

Signal1D operator*(const Signal1D& a, const Signal1D& b) {
    require_same_depth(a.depth(), b.depth());
    Signal1D out(a.depth());
    for (std::size_t c = 0; c < a.size(); ++c) out[c] = a[c] * b[c];
    return out;
}

double inner(const Signal1D& f, const Signal1D& g) {
    require_same_depth(f.depth(), g.depth());
    double s = 0.0;
    for (std::size_t c = 0; c < f.size(); ++c) s += f[c] * g[c];
    return s * f.cell_width();
}

double mean(const Signal1D& f) {
    double s = std::accumulate(f.values().begin(), f.values().end(), 0.0);
    return s / static_cast<double>(f.size());
}

double average(const Signal1D& f, const DyadicInterval& i) {
    if (i.level > f.depth())
        throw DepthInsufficientError("average over an interval below the cell grid");
    const std::size_t span = std::size_t{1} << (f.depth() - i.level);
    const std::size_t begin = static_cast<std::size_t>(i.index) * span;
    double s = 0.0;
    for (std::size_t c = begin; c < begin + span; ++c) s += f[c];
    return s / static_cast<double>(span);
}

double l2_norm(const Signal1D& f) { return std::sqrt(inner(f, f)); }

double linf_norm(const Signal1D& f) {
    double m = 0.0;
    for (double x : f.values()) m = std::max(m, std::abs(x));
    return m;
}

Signal1D refine(const Signal1D& f, int new_depth) {
    if (new_depth < f.depth()) throw DepthInsufficientError("refine cannot coarsen a signal");
    Signal1D out(new_depth);
    const std::size_t span = std::size_t{1} << (new_depth - f.depth());
    for (std::size_t c = 0; c < f.size(); ++c)
        for (std::size_t t = 0; t < span; ++t) out[c * span + t] = f[c];
    return out;
}

// ---- 2D -------------------------------------------------------------------

Signal2D::Signal2D(int depth) : depth_(depth) {
    if (depth < 1 || depth > 12) throw InvalidIntervalError("2D signal depth out of range");
    v_.assign((std::size_t{1} << depth) * (std::size_t{1} << depth), 0.0);
}

Signal2D::Signal2D(int depth, std::vector<double> values) : depth_(depth), v_(std::move(values)) {
    if (depth < 1 || depth > 12) throw InvalidIntervalError("2D signal depth out of range");
    if (v_.size() != (std::size_t{1} << depth) * (std::size_t{1} << depth))
        throw InvalidIntervalError("2D signal value count does not match 4^depth");
}

Signal1D Signal2D::slice_fixed_y(std::size_t iy) const {
    Signal1D s(depth_);
    for (std::size_t ix = 0; ix < side(); ++ix) s[ix] = at(ix, iy);
    return s;
}

Signal1D Signal2D::slice_fixed_x(std::size_t ix) const {
    Signal1D s(depth_);
    for (std::size_t iy = 0; iy < side(); ++iy) s[iy] = at(ix, iy);
    return s;
}

void Signal2D::set_slice_fixed_y(std::size_t iy, const Signal1D& s) {
    for (std::size_t ix = 0; ix < side(); ++ix) at(ix, iy) = s[ix];
}

void Signal2D::set_slice_fixed_x(std::size_t ix, const Signal1D& s) {
    for (std::size_t iy = 0; iy < side(); ++iy) at(ix, iy) = s[iy];
}

Signal2D& Signal2D::operator+=(const Signal2D& o) {
    require_same_depth(depth_, o.depth_);
    for (std::size_t c = 0; c < v_.size(); ++c) v_[c] += o.v_[c];
    return *this;
}

Signal2D& Signal2D::operator-=(const Signal2D& o) {
    require_same_depth(depth_, o.depth_);
    for (std::size_t c = 0; c < v_.size(); ++c) v_[c] -= o.v_[c];
    return *this;
}

Signal2D& Signal2D::operator*=(double s) {
    for (auto& x : v_) x *= s;
    return *this;
}

Signal2D operator+(Signal2D a, const Signal2D& b) { return a += b; }
Signal2D operator-(Signal2D a, const Signal2D& b) { return a -= b; }
Signal2D operator*(double s, Signal2D a) { return a *= s; }

Signal2D operator*(const Signal2D& a, const Signal2D& b) {
    require_same_depth(a.depth(), b.depth());
    Signal2D out(a.depth());
    for (std::size_t c = 0; c < a.size(); ++c) out.values()[c] = a.values()[c] * b.values()[c];
    return out;
}

double inner2(const Signal2D& f, const Signal2D& g) {
    require_same_depth(f.depth(), g.depth());
    double s = 0.0;
    for (std::size_t c = 0; c < f.size(); ++c) s += f.values()[c] * g.values()[c];
    return s * f.cell_area();
}

double mean2(const Signal2D& f) {
    double s = std::accumulate(f.values().begin(), f.values().end(), 0.0);
    return s / static_cast<double>(f.size());
}

double average2(const Signal2D& f, const DyadicRectangle& r) {
    if (r.x.level > f.depth() || r.y.level > f.depth())
        throw DepthInsufficientError("average over a rectangle below the cell grid");
    const std::size_t spanx = std::size_t{1} << (f.depth() - r.x.level);
    const std::size_t spany = std::size_t{1} << (f.depth() - r.y.level);
    const std::size_t bx = static_cast<std::size_t>(r.x.index) * spanx;
    const std::size_t by = static_cast<std::size_t>(r.y.index) * spany;
    double s = 0.0;
    for (std::size_t ix = bx; ix < bx + spanx; ++ix)
        for (std::size_t iy = by; iy < by + spany; ++iy) s += f.at(ix, iy);
    return s / static_cast<double>(spanx * spany);
}

double l2_norm2(const Signal2D& f) { return std::sqrt(inner2(f, f)); }

double linf_norm2(const Signal2D& f) {
    double m = 0.0;
    for (double x : f.values()) m = std::max(m, std::abs(x));
    return m;
}

Signal2D refine2(const Signal2D& f, int new_depth) {
    if (new_depth < f.depth()) throw DepthInsufficientError("refine cannot coarsen a signal");
    Signal2D out(new_depth);
    const std::size_t span = std::size_t{1} << (new_depth - f.depth());
    for (std::size_t ix = 0; ix < out.side(); ++ix)
        for (std::size_t iy = 0; iy < out.side(); ++iy)
            out.at(ix, iy) = f.at(ix / span, iy / span);
    return out;
}

Signal2D outer(const Signal1D& fx, const Signal1D& fy) {
    require_same_depth(fx.depth(), fy.depth());
    Signal2D out(fx.depth());
    for (std::size_t ix = 0; ix < out.side(); ++ix)
        for (std::size_t iy = 0; iy < out.side(); ++iy) out.at(ix, iy) = fx[ix] * fy[iy];
    return out;
}

} // namespace dyadic
