#include "dyadic/shift.hpp"

namespace dyadic {

Signal1D apply_T(const Signal1D& f) {
    const int n = f.depth();
    const HaarSpectrum1D in = analyze(f);
    HaarSpectrum1D out = HaarSpectrum1D::zero(n);
    for (int k = 0; k + 2 <= n; k += 2) {
        const std::size_t base = (std::size_t{1} << k) - 1;
        const std::size_t childbase = (std::size_t{1} << (k + 1)) - 1;
        for (std::size_t j = 0; j < (std::size_t{1} << k); ++j) {
            const double c = in.coeffs[base + j];
            out.coeffs[childbase + 2 * j] += c;
            out.coeffs[childbase + 2 * j + 1] -= c;
        }
    }
    return synthesize(out);
}

Signal1D apply_T_star(const Signal1D& f) {
    const int n = f.depth();
    const HaarSpectrum1D in = analyze(f);
    HaarSpectrum1D out = HaarSpectrum1D::zero(n);
    for (int k = 1; k < n; k += 2) {
        const std::size_t base = (std::size_t{1} << k) - 1;
        const std::size_t parentbase = (std::size_t{1} << (k - 1)) - 1;
        for (std::size_t j = 0; j < (std::size_t{1} << k); ++j) {
            const double c = in.coeffs[base + j];
            const int s = (j & 1) ? -1 : +1; // s(J, Ĵ)
            out.coeffs[parentbase + j / 2] += s * c;
        }
    }
    return synthesize(out);
}

Signal1D apply_TTstar(const Signal1D& f) {
    const int n = f.depth();
    const HaarSpectrum1D in = analyze(f);
    HaarSpectrum1D out = HaarSpectrum1D::zero(n);
    for (int k = 1; k < n; k += 2) {
        const std::size_t base = (std::size_t{1} << k) - 1;
        for (std::size_t j = 0; j < (std::size_t{1} << k); ++j) {
            const double c = in.coeffs[base + j];
            out.coeffs[base + j] += c;
            out.coeffs[base + (j ^ 1)] -= c; // sibling
        }
    }
    return synthesize(out);
}

namespace {

template <typename Op>
Signal2D apply_in_x(const Signal2D& f, Op op) {
    Signal2D out(f.depth());
    for (std::size_t iy = 0; iy < f.side(); ++iy)
        out.set_slice_fixed_y(iy, op(f.slice_fixed_y(iy)));
    return out;
}

template <typename Op>
Signal2D apply_in_y(const Signal2D& f, Op op) {
    Signal2D out(f.depth());
    for (std::size_t ix = 0; ix < f.side(); ++ix)
        out.set_slice_fixed_x(ix, op(f.slice_fixed_x(ix)));
    return out;
}

} // namespace

Signal2D apply_T1(const Signal2D& f) { return apply_in_x(f, [](const Signal1D& s) { return apply_T(s); }); }
Signal2D apply_T2(const Signal2D& f) { return apply_in_y(f, [](const Signal1D& s) { return apply_T(s); }); }
Signal2D apply_T1_star(const Signal2D& f) { return apply_in_x(f, [](const Signal1D& s) { return apply_T_star(s); }); }
Signal2D apply_T2_star(const Signal2D& f) { return apply_in_y(f, [](const Signal1D& s) { return apply_T_star(s); }); }

Signal2D apply_biT(const Signal2D& f) { return apply_T1(apply_T2(f)); }
Signal2D apply_biT_star(const Signal2D& f) { return apply_T1_star(apply_T2_star(f)); }

} // namespace dyadic
