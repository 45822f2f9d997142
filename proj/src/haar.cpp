#include "dyadic/haar.hpp"

#include <cmath>

namespace dyadic {

Signal1D haar(const DyadicInterval& i, int depth) {
    if (i.level >= depth)
        throw DepthInsufficientError("haar function needs level < depth");
    Signal1D out(depth);
    const double v = sqrt_pow2d(i.level);
    const std::size_t span = std::size_t{1} << (depth - i.level);
    const std::size_t begin = static_cast<std::size_t>(i.index) * span;
    for (std::size_t c = begin; c < begin + span / 2; ++c) out[c] = v;
    for (std::size_t c = begin + span / 2; c < begin + span; ++c) out[c] = -v;
    return out;
}

Signal1D indicator_norm(const DyadicInterval& i, int depth) {
    if (i.level > depth)
        throw DepthInsufficientError("indicator needs level <= depth");
    Signal1D out(depth);
    const double v = pow2d(i.level);
    const std::size_t span = std::size_t{1} << (depth - i.level);
    const std::size_t begin = static_cast<std::size_t>(i.index) * span;
    for (std::size_t c = begin; c < begin + span; ++c) out[c] = v;
    return out;
}

Signal1D indicator(const DyadicInterval& i, int depth) {
    Signal1D out = indicator_norm(i, depth);
    out *= i.measure();
    return out;
}

Signal2D haar2(const DyadicRectangle& r, int depth) {
    return outer(haar(r.x, depth), haar(r.y, depth));
}

Signal2D indicator_norm2(const DyadicRectangle& r, int depth) {
    return outer(indicator_norm(r.x, depth), indicator_norm(r.y, depth));
}

Signal2D indicator2(const DyadicRectangle& r, int depth) {
    return outer(indicator(r.x, depth), indicator(r.y, depth));
}

double HaarSpectrum1D::coeff(const DyadicInterval& i) const {
    if (i.level >= depth) throw DepthInsufficientError("coefficient level beyond spectrum");
    return coeffs[heap_index(i)];
}

void HaarSpectrum1D::set_coeff(const DyadicInterval& i, double v) {
    if (i.level >= depth) throw DepthInsufficientError("coefficient level beyond spectrum");
    coeffs[heap_index(i)] = v;
}

void HaarSpectrum1D::add_coeff(const DyadicInterval& i, double v) {
    if (i.level >= depth) throw DepthInsufficientError("coefficient level beyond spectrum");
    coeffs[heap_index(i)] += v;
}

HaarSpectrum1D analyze(const Signal1D& f) {
    const int n = f.depth();
    HaarSpectrum1D sp = HaarSpectrum1D::zero(n);
    std::vector<double> cur = f.values(); // cell averages at the finest level
    for (int k = n - 1; k >= 0; --k) {
        const std::size_t m = std::size_t{1} << k;
        std::vector<double> nxt(m);
        const double scale = 0.5 * sqrt_pow2d(-k); // |I|^{1/2} / 2
        const std::size_t base = m - 1;
        for (std::size_t j = 0; j < m; ++j) {
            const double a = cur[2 * j], b = cur[2 * j + 1];
            nxt[j] = 0.5 * (a + b);
            sp.coeffs[base + j] = scale * (a - b);
        }
        cur.swap(nxt);
    }
    sp.mean = cur[0];
    return sp;
}

Signal1D synthesize(const HaarSpectrum1D& sp) {
    const int n = sp.depth;
    std::vector<double> cur{sp.mean};
    for (int k = 0; k < n; ++k) {
        const std::size_t m = std::size_t{1} << k;
        std::vector<double> nxt(2 * m);
        const double scale = sqrt_pow2d(k); // |I|^{-1/2}
        const std::size_t base = m - 1;
        for (std::size_t j = 0; j < m; ++j) {
            const double d = sp.coeffs[base + j] * scale;
            nxt[2 * j] = cur[j] + d;
            nxt[2 * j + 1] = cur[j] - d;
        }
        cur.swap(nxt);
    }
    return Signal1D(n, std::move(cur));
}

double HaarSpectrum2D::tensor_coeff(const DyadicInterval& i, const DyadicInterval& j) const {
    return tensor[heap_index(i) * stride() + heap_index(j)];
}

void HaarSpectrum2D::set_tensor_coeff(const DyadicInterval& i, const DyadicInterval& j, double v) {
    tensor[heap_index(i) * stride() + heap_index(j)] = v;
}

void HaarSpectrum2D::add_tensor_coeff(const DyadicInterval& i, const DyadicInterval& j, double v) {
    tensor[heap_index(i) * stride() + heap_index(j)] += v;
}

HaarSpectrum2D analyze2(const Signal2D& f) {
    const int n = f.depth();
    const std::size_t N = f.side();
    const std::size_t M = interval_count(n);
    HaarSpectrum2D sp = HaarSpectrum2D::zero(n);

    // x-transform per y column
    std::vector<double> meanx(N);
    std::vector<std::vector<double>> cx(M, std::vector<double>(N));
    for (std::size_t iy = 0; iy < N; ++iy) {
        const HaarSpectrum1D s = analyze(f.slice_fixed_y(iy));
        meanx[iy] = s.mean;
        for (std::size_t h = 0; h < M; ++h) cx[h][iy] = s.coeffs[h];
    }

    // y-transform of the x-means and of each x-coefficient row
    {
        const HaarSpectrum1D s = analyze(Signal1D(n, meanx));
        sp.mean = s.mean;
        sp.mixed_y = s.coeffs;
    }
    for (std::size_t h = 0; h < M; ++h) {
        const HaarSpectrum1D s = analyze(Signal1D(n, cx[h]));
        sp.mixed_x[h] = s.mean;
        for (std::size_t g = 0; g < M; ++g) sp.tensor[h * M + g] = s.coeffs[g];
    }
    return sp;
}

Signal2D synthesize2(const HaarSpectrum2D& sp) {
    const int n = sp.depth;
    const std::size_t N = std::size_t{1} << n;
    const std::size_t M = interval_count(n);
    Signal2D out(n);

    const Signal1D meanx = synthesize(HaarSpectrum1D{n, sp.mean, sp.mixed_y});
    std::vector<Signal1D> rows;
    rows.reserve(M);
    for (std::size_t h = 0; h < M; ++h) {
        std::vector<double> c(sp.tensor.begin() + h * M, sp.tensor.begin() + (h + 1) * M);
        rows.push_back(synthesize(HaarSpectrum1D{n, sp.mixed_x[h], std::move(c)}));
    }
    for (std::size_t iy = 0; iy < N; ++iy) {
        HaarSpectrum1D col = HaarSpectrum1D::zero(n);
        col.mean = meanx[iy];
        for (std::size_t h = 0; h < M; ++h) col.coeffs[h] = rows[h][iy];
        out.set_slice_fixed_y(iy, synthesize(col));
    }
    return out;
}

double mixed_coeff_x(const Signal2D& b, const DyadicInterval& i, const DyadicInterval& j) {
    if (i.level >= b.depth())
        throw DepthInsufficientError("mixed coefficient needs Haar level < depth");
    // b_I(y) = ∫ b(x,y) h_I(x) dx, then average over J
    const Signal1D hi = haar(i, b.depth());
    Signal1D bi(b.depth());
    for (std::size_t iy = 0; iy < b.side(); ++iy)
        bi[iy] = inner(b.slice_fixed_y(iy), hi);
    return average(bi, j);
}

double mixed_coeff_y(const Signal2D& b, const DyadicInterval& i, const DyadicInterval& j) {
    if (j.level >= b.depth())
        throw DepthInsufficientError("mixed coefficient needs Haar level < depth");
    const Signal1D hj = haar(j, b.depth());
    Signal1D bj(b.depth());
    for (std::size_t ix = 0; ix < b.side(); ++ix)
        bj[ix] = inner(b.slice_fixed_x(ix), hj);
    return average(bj, i);
}

std::vector<double> averages_tree(const Signal1D& f) {
    const int n = f.depth();
    std::vector<double> out(interval_count(n));
    std::vector<double> cur = f.values();
    for (int k = n - 1; k >= 0; --k) {
        const std::size_t m = std::size_t{1} << k;
        std::vector<double> nxt(m);
        for (std::size_t j = 0; j < m; ++j) nxt[j] = 0.5 * (cur[2 * j] + cur[2 * j + 1]);
        cur.swap(nxt);
        for (std::size_t j = 0; j < m; ++j) out[m - 1 + j] = cur[j];
    }
    return out;
}

std::vector<std::vector<double>> haar_slices_x(const Signal2D& f) {
    const std::size_t N = f.side(), M = interval_count(f.depth());
    std::vector<std::vector<double>> out(M, std::vector<double>(N));
    for (std::size_t iy = 0; iy < N; ++iy) {
        const HaarSpectrum1D s = analyze(f.slice_fixed_y(iy));
        for (std::size_t h = 0; h < M; ++h) out[h][iy] = s.coeffs[h];
    }
    return out;
}

std::vector<std::vector<double>> haar_slices_y(const Signal2D& f) {
    const std::size_t N = f.side(), M = interval_count(f.depth());
    std::vector<std::vector<double>> out(M, std::vector<double>(N));
    for (std::size_t ix = 0; ix < N; ++ix) {
        const HaarSpectrum1D s = analyze(f.slice_fixed_x(ix));
        for (std::size_t h = 0; h < M; ++h) out[h][ix] = s.coeffs[h];
    }
    return out;
}

std::vector<std::vector<double>> average_slices_x(const Signal2D& f) {
    const std::size_t N = f.side(), M = interval_count(f.depth());
    std::vector<std::vector<double>> out(M, std::vector<double>(N));
    for (std::size_t iy = 0; iy < N; ++iy) {
        const std::vector<double> a = averages_tree(f.slice_fixed_y(iy));
        for (std::size_t h = 0; h < M; ++h) out[h][iy] = a[h];
    }
    return out;
}

std::vector<std::vector<double>> average_slices_y(const Signal2D& f) {
    const std::size_t N = f.side(), M = interval_count(f.depth());
    std::vector<std::vector<double>> out(M, std::vector<double>(N));
    for (std::size_t ix = 0; ix < N; ++ix) {
        const std::vector<double> a = averages_tree(f.slice_fixed_x(ix));
        for (std::size_t h = 0; h < M; ++h) out[h][ix] = a[h];
    }
    return out;
}

std::vector<double> mixed_x_table(const Signal2D& b) {
    const int n = b.depth();
    const std::size_t M = interval_count(n);
    std::vector<double> out(M * M);
    const auto hs = haar_slices_x(b);
    for (std::size_t h = 0; h < M; ++h) {
        const std::vector<double> a = averages_tree(Signal1D(n, hs[h]));
        for (std::size_t g = 0; g < M; ++g) out[h * M + g] = a[g];
    }
    return out;
}

std::vector<double> mixed_y_table(const Signal2D& b) {
    const int n = b.depth();
    const std::size_t M = interval_count(n);
    std::vector<double> out(M * M);
    const auto as = average_slices_x(b);
    for (std::size_t h = 0; h < M; ++h) {
        const HaarSpectrum1D s = analyze(Signal1D(n, as[h]));
        for (std::size_t g = 0; g < M; ++g) out[h * M + g] = s.coeffs[g];
    }
    return out;
}

std::vector<double> rect_average_table(const Signal2D& b) {
    const int n = b.depth();
    const std::size_t M = interval_count(n);
    std::vector<double> out(M * M);
    const auto as = average_slices_x(b);
    for (std::size_t h = 0; h < M; ++h) {
        const std::vector<double> a = averages_tree(Signal1D(n, as[h]));
        for (std::size_t g = 0; g < M; ++g) out[h * M + g] = a[g];
    }
    return out;
}

Signal1D haar_combination(int depth, const std::vector<double>& w) {
    return synthesize(HaarSpectrum1D{depth, 0.0, w});
}

Signal1D tilde_combination(int depth, const std::vector<double>& w) {
    // accumulate contributions root-to-leaf: each (k, j) adds w · 2^k on its cells
    std::vector<double> cur{0.0};
    for (int k = 0; k < depth; ++k) {
        const std::size_t m = std::size_t{1} << k;
        const std::size_t base = m - 1;
        std::vector<double> nxt(2 * m);
        for (std::size_t j = 0; j < m; ++j) {
            const double v = cur[j] + w[base + j] * pow2d(k);
            nxt[2 * j] = v;
            nxt[2 * j + 1] = v;
        }
        cur.swap(nxt);
    }
    return Signal1D(depth, std::move(cur));
}

Signal2D tensor_combination2(int depth, const std::vector<double>& w, bool x_tilde, bool y_tilde) {
    const std::size_t M = interval_count(depth);
    const std::size_t N = std::size_t{1} << depth;
    // collapse y first, then x per y cell
    std::vector<std::vector<double>> profiles(M);
    std::vector<double> row(M);
    for (std::size_t h = 0; h < M; ++h) {
        row.assign(w.begin() + h * M, w.begin() + (h + 1) * M);
        profiles[h] =
            y_tilde ? tilde_combination(depth, row).values() : haar_combination(depth, row).values();
    }
    Signal2D out(depth);
    std::vector<double> col(M);
    for (std::size_t iy = 0; iy < N; ++iy) {
        for (std::size_t h = 0; h < M; ++h) col[h] = profiles[h][iy];
        const Signal1D vals =
            x_tilde ? tilde_combination(depth, col) : haar_combination(depth, col);
        for (std::size_t ix = 0; ix < N; ++ix) out.at(ix, iy) = vals[ix];
    }
    return out;
}

} // namespace dyadic
