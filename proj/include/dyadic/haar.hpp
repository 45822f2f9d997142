#pragma once

#include <vector>

#include "dyadic/signal.hpp"

namespace dyadic {

// L^2-normalized Haar function: h_I = |I|^{-1/2} (1_{I_+} - 1_{I_-}),
// positive on the left child. Requires level(I) < depth.
Signal1D haar(const DyadicInterval& i, int depth);

// Normalized indicator 1̃_I = 1_I / |I|. Requires level(I) ≤ depth.
Signal1D indicator_norm(const DyadicInterval& i, int depth);

// Plain indicator 1_I.
Signal1D indicator(const DyadicInterval& i, int depth);

Signal2D haar2(const DyadicRectangle& r, int depth);           // h_I ⊗ h_J
Signal2D indicator_norm2(const DyadicRectangle& r, int depth); // 1̃_I ⊗ 1̃_J
Signal2D indicator2(const DyadicRectangle& r, int depth);      // 1_R

/// Global mean plus Haar coefficients (f, h_I) for all levels < depth,
/// stored in heap order.
struct HaarSpectrum1D {
    int depth = 1;
    double mean = 0.0;
    std::vector<double> coeffs;

    HaarSpectrum1D() = default;
    HaarSpectrum1D(int depth_, double mean_, std::vector<double> coeffs_)
        : depth(depth_), mean(mean_), coeffs(std::move(coeffs_)) {}
    static HaarSpectrum1D zero(int depth) {
        return {depth, 0.0, std::vector<double>(interval_count(depth), 0.0)};
    }

    double coeff(const DyadicInterval& i) const;
    void set_coeff(const DyadicInterval& i, double v);
    void add_coeff(const DyadicInterval& i, double v);
};

HaarSpectrum1D analyze(const Signal1D& f);
Signal1D synthesize(const HaarSpectrum1D& sp);

/// 2D spectrum over the tensor basis {1⊗1, h_I⊗1, 1⊗h_J, h_I⊗h_J}.
/// tensor is (2^n-1)x(2^n-1), row = x heap index, column = y heap index.
struct HaarSpectrum2D {
    int depth = 1;
    double mean = 0.0;
    std::vector<double> tensor;  // (b, h_I ⊗ h_J)
    std::vector<double> mixed_x; // (b, h_I ⊗ 1)
    std::vector<double> mixed_y; // (b, 1 ⊗ h_J)

    static HaarSpectrum2D zero(int depth) {
        HaarSpectrum2D sp;
        sp.depth = depth;
        const std::size_t m = interval_count(depth);
        sp.tensor.assign(m * m, 0.0);
        sp.mixed_x.assign(m, 0.0);
        sp.mixed_y.assign(m, 0.0);
        return sp;
    }

    std::size_t stride() const { return interval_count(depth); }
    double tensor_coeff(const DyadicInterval& i, const DyadicInterval& j) const;
    void set_tensor_coeff(const DyadicInterval& i, const DyadicInterval& j, double v);
    void add_tensor_coeff(const DyadicInterval& i, const DyadicInterval& j, double v);
};

HaarSpectrum2D analyze2(const Signal2D& f);
Signal2D synthesize2(const HaarSpectrum2D& sp);

// (b, h_I ⊗ 1̃_J) and (b, 1̃_I ⊗ h_J)
double mixed_coeff_x(const Signal2D& b, const DyadicInterval& i, const DyadicInterval& j);
double mixed_coeff_y(const Signal2D& b, const DyadicInterval& i, const DyadicInterval& j);

// ⟨f⟩_I for every interval with level < depth, heap order.
std::vector<double> averages_tree(const Signal1D& f);

// Per-interval slices of a 2D signal. haar_slices_x(f)[heap(I)][iy] = ∫ f(x,y) h_I(x) dx,
// average_slices_x(f)[heap(I)][iy] = ⟨f(·,y)⟩_I; analogously in y with x cells as entries.
std::vector<std::vector<double>> haar_slices_x(const Signal2D& f);
std::vector<std::vector<double>> haar_slices_y(const Signal2D& f);
std::vector<std::vector<double>> average_slices_x(const Signal2D& f);
std::vector<std::vector<double>> average_slices_y(const Signal2D& f);

// Full coefficient tables over interval pairs, flat [heap(I) * (2^n-1) + heap(J)].
std::vector<double> mixed_x_table(const Signal2D& b);   // (b, h_I ⊗ 1̃_J)
std::vector<double> mixed_y_table(const Signal2D& b);   // (b, 1̃_I ⊗ h_J)
std::vector<double> rect_average_table(const Signal2D& b); // ⟨b⟩_{I×J}

// Σ_I w(I) h_I (mean zero) and Σ_I w(I) 1̃_I from heap-ordered weights.
Signal1D haar_combination(int depth, const std::vector<double>& w);
Signal1D tilde_combination(int depth, const std::vector<double>& w);

// Σ_{I,J} w(I,J) φ_I ⊗ ψ_J where each axis family is h (false) or 1̃ (true);
// w is flat with stride 2^depth - 1.
Signal2D tensor_combination2(int depth, const std::vector<double>& w, bool x_tilde, bool y_tilde);

} // namespace dyadic
