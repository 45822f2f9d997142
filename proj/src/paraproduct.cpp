#include "dyadic/paraproduct.hpp"

#include <cstddef>

namespace dyadic {

namespace {

enum class Fam { Haar, Avg };
enum class OutFam { Haar, Tilde };

struct KindInfo {
    Fam bfam, ffam;
    OutFam outfam;
    bool root_only;
};

KindInfo kind_info(ParaKind1D k) {
    switch (k) {
        case ParaKind1D::Pi: return {Fam::Haar, Fam::Avg, OutFam::Haar, false};
        case ParaKind1D::Z: return {Fam::Haar, Fam::Haar, OutFam::Tilde, false};
        case ParaKind1D::D: return {Fam::Avg, Fam::Haar, OutFam::Haar, false};
        case ParaKind1D::Mean: return {Fam::Avg, Fam::Avg, OutFam::Tilde, true};
    }
    throw DyadicError("unknown paraproduct kind");
}

std::vector<double> functional_array(Fam fam, const Signal1D& g) {
    return fam == Fam::Haar ? analyze(g).coeffs : averages_tree(g);
}

// Cell values of Σ_I w(I) 1̃_I, accumulated root-to-leaf.
std::vector<double> tilde_synthesis(int n, const std::vector<double>& w) {
    std::vector<double> cur{0.0};
    for (int k = 0; k < n; ++k) {
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
    return cur;
}

std::vector<double> synth_by_family(int n, OutFam fam, const std::vector<double>& w) {
    if (fam == OutFam::Haar) return synthesize(HaarSpectrum1D{n, 0.0, w}).values();
    return tilde_synthesis(n, w);
}

// (g, φx(I) ⊗ φy(J)) for all interval pairs; φ = h for Haar, 1̃ for Avg.
std::vector<double> functional_table(Fam fx, Fam fy, const Signal2D& g) {
    const int n = g.depth();
    const std::size_t M = interval_count(n);
    std::vector<double> out(M * M);
    const auto rows = (fx == Fam::Haar) ? haar_slices_x(g) : average_slices_x(g);
    for (std::size_t h = 0; h < M; ++h) {
        const std::vector<double> arr = functional_array(fy, Signal1D(n, rows[h]));
        for (std::size_t g2 = 0; g2 < M; ++g2) out[h * M + g2] = arr[g2];
    }
    return out;
}

Signal2D synth2_by_family(int n, OutFam ox, OutFam oy, const std::vector<double>& w) {
    const std::size_t M = interval_count(n);
    const std::size_t N = std::size_t{1} << n;
    std::vector<std::vector<double>> profiles(M);
    for (std::size_t h = 0; h < M; ++h) {
        std::vector<double> row(w.begin() + h * M, w.begin() + (h + 1) * M);
        profiles[h] = synth_by_family(n, oy, row);
    }
    Signal2D out(n);
    std::vector<double> col(M);
    for (std::size_t iy = 0; iy < N; ++iy) {
        for (std::size_t h = 0; h < M; ++h) col[h] = profiles[h][iy];
        const std::vector<double> vals = synth_by_family(n, ox, col);
        for (std::size_t ix = 0; ix < N; ++ix) out.at(ix, iy) = vals[ix];
    }
    return out;
}

void require_same_depth(int a, int b) {
    if (a != b) throw DepthMismatchError("paraproduct operands must share a depth");
}

} // namespace

std::vector<ParaKind2D> all_kinds_2d() {
    std::vector<ParaKind2D> out;
    for (ParaKind1D x : kAllKinds1D)
        for (ParaKind1D y : kAllKinds1D) out.push_back({x, y});
    return out;
}

std::string kind_name(ParaKind1D k) {
    switch (k) {
        case ParaKind1D::Pi: return "pi";
        case ParaKind1D::Z: return "z";
        case ParaKind1D::D: return "d";
        case ParaKind1D::Mean: return "mean";
    }
    return "?";
}

std::string kind_name(const ParaKind2D& k) { return kind_name(k.x) + "." + kind_name(k.y); }

Signal1D para1(ParaKind1D kind, const Signal1D& b, const Signal1D& f) {
    require_same_depth(b.depth(), f.depth());
    const int n = b.depth();
    const KindInfo info = kind_info(kind);
    if (info.root_only) {
        // Mean(b, f) = ⟨b⟩⟨f⟩ · 1
        Signal1D out(n);
        const double v = mean(b) * mean(f);
        for (auto& x : out.values()) x = v;
        return out;
    }
    const std::vector<double> wb = functional_array(info.bfam, b);
    const std::vector<double> wf = functional_array(info.ffam, f);
    std::vector<double> w(wb.size());
    for (std::size_t h = 0; h < w.size(); ++h) w[h] = wb[h] * wf[h];
    return Signal1D(n, synth_by_family(n, info.outfam, w));
}

Signal2D para2(const ParaKind2D& kind, const Signal2D& b, const Signal2D& f) {
    require_same_depth(b.depth(), f.depth());
    const int n = b.depth();
    const std::size_t M = interval_count(n);
    const KindInfo ix = kind_info(kind.x);
    const KindInfo iy = kind_info(kind.y);
    const std::vector<double> wb = functional_table(ix.bfam, iy.bfam, b);
    const std::vector<double> wf = functional_table(ix.ffam, iy.ffam, f);
    std::vector<double> w(M * M, 0.0);
    const std::size_t hx_end = ix.root_only ? 1 : M;
    const std::size_t hy_end = iy.root_only ? 1 : M;
    for (std::size_t hx = 0; hx < hx_end; ++hx)
        for (std::size_t hy = 0; hy < hy_end; ++hy)
            w[hx * M + hy] = wb[hx * M + hy] * wf[hx * M + hy];
    return synth2_by_family(n, ix.outfam, iy.outfam, w);
}

Signal1D commutator_term_1d(ParaKind1D kind, const Signal1D& b, const Signal1D& f) {
    return apply_T(para1(kind, b, f)) - para1(kind, b, apply_T(f));
}

Signal2D commutator_term_2d(const ParaKind2D& kind, const Signal2D& b, const Signal2D& f) {
    return apply_biT(para2(kind, b, f)) - para2(kind, b, apply_biT(f));
}

Signal1D dd_term_closed_form_1d(const Signal1D& b, const Signal1D& f) {
    require_same_depth(b.depth(), f.depth());
    const int n = b.depth();
    const HaarSpectrum1D sb = analyze(b);
    const HaarSpectrum1D sf = analyze(f);
    HaarSpectrum1D out = HaarSpectrum1D::zero(n);
    for (int k = 1; k < n; k += 2) {
        const std::size_t base = (std::size_t{1} << k) - 1;
        const std::size_t pbase = (std::size_t{1} << (k - 1)) - 1;
        const double inv_sqrt_parent = sqrt_pow2d(k - 1); // 1/√|Î|
        for (std::size_t j = 0; j < (std::size_t{1} << k); ++j) {
            const std::size_t p = pbase + j / 2;
            out.coeffs[base + j] = -inv_sqrt_parent * sb.coeffs[p] * sf.coeffs[p];
        }
    }
    return synthesize(out);
}

ParaKind2D paper_item_kind(int item) {
    switch (item) {
        case 1: return {ParaKind1D::Pi, ParaKind1D::Pi};
        case 2: return {ParaKind1D::Z, ParaKind1D::Z};
        case 3: return {ParaKind1D::Pi, ParaKind1D::Z};
        case 4: return {ParaKind1D::Z, ParaKind1D::Pi};
        case 5: return {ParaKind1D::Pi, ParaKind1D::D};
        case 6: return {ParaKind1D::Z, ParaKind1D::D};
        case 7: return {ParaKind1D::D, ParaKind1D::Pi};
        case 8: return {ParaKind1D::D, ParaKind1D::Z};
        case 9: return {ParaKind1D::D, ParaKind1D::D};
    }
    throw DyadicError("paper term item must be 1..9");
}

namespace {

struct ClosedFormContext {
    int n;
    std::size_t M;
    std::vector<DyadicInterval> intervals;
    std::vector<double> hh_b, ha_b, ah_b, aa_b; // b against h⊗h, h⊗1̃, 1̃⊗h, 1̃⊗1̃
    std::vector<double> hh_f, ha_f, ah_f, aa_f;
    std::vector<double> aa_Tf, ha_Tf, ah_Tf;
    std::vector<Signal1D> t_haar;  // T h_I (zero when not representable)
    std::vector<Signal1D> t_tilde; // T 1̃_I

    ClosedFormContext(const Signal2D& b, const Signal2D& f) : n(b.depth()), M(interval_count(n)) {
        intervals = all_intervals(n);
        hh_b = analyze2(b).tensor;
        ha_b = functional_table(Fam::Haar, Fam::Avg, b);
        ah_b = functional_table(Fam::Avg, Fam::Haar, b);
        aa_b = functional_table(Fam::Avg, Fam::Avg, b);
        hh_f = analyze2(f).tensor;
        ha_f = functional_table(Fam::Haar, Fam::Avg, f);
        ah_f = functional_table(Fam::Avg, Fam::Haar, f);
        aa_f = functional_table(Fam::Avg, Fam::Avg, f);
        const Signal2D tf = apply_biT(f);
        aa_Tf = functional_table(Fam::Avg, Fam::Avg, tf);
        ha_Tf = functional_table(Fam::Haar, Fam::Avg, tf);
        ah_Tf = functional_table(Fam::Avg, Fam::Haar, tf);
        t_haar.reserve(M);
        t_tilde.reserve(M);
        for (const auto& i : intervals) {
            t_haar.push_back(t_image_nonzero(i, n) ? apply_T(haar(i, n)) : Signal1D(n));
            t_tilde.push_back(apply_T(indicator_norm(i, n)));
        }
    }

    double tab(const std::vector<double>& t, std::size_t hx, std::size_t hy) const {
        return t[hx * M + hy];
    }

    // w · (T1 h_I) ⊗ (T2 h_J) added as tensor coefficients on the children.
    void add_children(std::vector<double>& w_tensor, const DyadicInterval& i,
                      const DyadicInterval& j, double w) const {
        const std::size_t il = heap_index(i.left_child()), ir = heap_index(i.right_child());
        const std::size_t jl = heap_index(j.left_child()), jr = heap_index(j.right_child());
        w_tensor[il * M + jl] += w;
        w_tensor[il * M + jr] -= w;
        w_tensor[ir * M + jl] -= w;
        w_tensor[ir * M + jr] += w;
    }

    void add_outer(Signal2D& acc, const Signal1D& gx, const Signal1D& gy, double w) const {
        if (w == 0.0) return;
        for (std::size_t ix = 0; ix < acc.side(); ++ix) {
            const double vx = w * gx[ix];
            if (vx == 0.0) continue;
            for (std::size_t iy = 0; iy < acc.side(); ++iy) acc.at(ix, iy) += vx * gy[iy];
        }
    }
};

} // namespace

Signal2D paper_term_closed_form_2d(int item, const Signal2D& b, const Signal2D& f) {
    if (b.depth() != f.depth()) throw DepthMismatchError("paraproduct operands must share a depth");
    const ClosedFormContext cx(b, f);
    const int n = cx.n;
    const std::size_t M = cx.M;
    const auto& iv = cx.intervals;

    auto even_pairs_tensor = [&](const std::vector<double>& wb, const std::vector<double>& wf) {
        std::vector<double> w(M * M, 0.0);
        for (std::size_t hx = 0; hx < M; ++hx) {
            if (!t_image_nonzero(iv[hx], n)) continue;
            for (std::size_t hy = 0; hy < M; ++hy) {
                if (!t_image_nonzero(iv[hy], n)) continue;
                cx.add_children(w, iv[hx], iv[hy], cx.tab(wb, hx, hy) * cx.tab(wf, hx, hy));
            }
        }
        return w;
    };

    auto odd_pair_pullback = [&](const std::vector<double>& wb) {
        // Σ_{I,J odd} wb(I,J) (f, h_Î⊗h_Ĵ) s(I,Î) s(J,Ĵ) at output slot (I,J)
        std::vector<double> w(M * M, 0.0);
        for (std::size_t hx = 0; hx < M; ++hx) {
            if (iv[hx].is_even()) continue;
            const std::size_t px = heap_index(iv[hx].parent());
            const int sx = sign_in_parent(iv[hx]);
            for (std::size_t hy = 0; hy < M; ++hy) {
                if (iv[hy].is_even()) continue;
                const std::size_t py = heap_index(iv[hy].parent());
                const int sy = sign_in_parent(iv[hy]);
                w[hx * M + hy] = cx.tab(wb, hx, hy) * cx.hh_f[px * M + py] * sx * sy;
            }
        }
        return w;
    };

    switch (item) {
        case 1: { // ππ
            std::vector<double> w = even_pairs_tensor(cx.hh_b, cx.aa_f);
            for (std::size_t k = 0; k < M * M; ++k) w[k] -= cx.hh_b[k] * cx.aa_Tf[k];
            return synth2_by_family(n, OutFam::Haar, OutFam::Haar, w);
        }
        case 2: { // ZZ
            Signal2D out(n);
            for (std::size_t hx = 0; hx < M; ++hx)
                for (std::size_t hy = 0; hy < M; ++hy)
                    cx.add_outer(out, cx.t_tilde[hx], cx.t_tilde[hy],
                                 cx.tab(cx.hh_b, hx, hy) * cx.tab(cx.hh_f, hx, hy));
            const std::vector<double> w2 = odd_pair_pullback(cx.hh_b);
            return out - synth2_by_family(n, OutFam::Tilde, OutFam::Tilde, w2);
        }
        case 3: { // πZ
            Signal2D out(n);
            for (std::size_t hx = 0; hx < M; ++hx) {
                if (!t_image_nonzero(iv[hx], n)) continue;
                for (std::size_t hy = 0; hy < M; ++hy)
                    cx.add_outer(out, cx.t_haar[hx], cx.t_tilde[hy],
                                 cx.tab(cx.hh_b, hx, hy) * cx.tab(cx.ah_f, hx, hy));
            }
            std::vector<double> w2(M * M);
            for (std::size_t k = 0; k < M * M; ++k) w2[k] = cx.hh_b[k] * cx.ah_Tf[k];
            return out - synth2_by_family(n, OutFam::Haar, OutFam::Tilde, w2);
        }
        case 4: { // Zπ
            Signal2D out(n);
            for (std::size_t hx = 0; hx < M; ++hx)
                for (std::size_t hy = 0; hy < M; ++hy) {
                    if (!t_image_nonzero(iv[hy], n)) continue;
                    cx.add_outer(out, cx.t_tilde[hx], cx.t_haar[hy],
                                 cx.tab(cx.hh_b, hx, hy) * cx.tab(cx.ha_f, hx, hy));
                }
            std::vector<double> w2(M * M);
            for (std::size_t k = 0; k < M * M; ++k) w2[k] = cx.hh_b[k] * cx.ha_Tf[k];
            return out - synth2_by_family(n, OutFam::Tilde, OutFam::Haar, w2);
        }
        case 5: { // πD
            std::vector<double> w = even_pairs_tensor(cx.ha_b, cx.ah_f);
            for (std::size_t k = 0; k < M * M; ++k) w[k] -= cx.ha_b[k] * cx.ah_Tf[k];
            return synth2_by_family(n, OutFam::Haar, OutFam::Haar, w);
        }
        case 6: { // ZD
            Signal2D out(n);
            for (std::size_t hx = 0; hx < M; ++hx)
                for (std::size_t hy = 0; hy < M; ++hy) {
                    if (!t_image_nonzero(iv[hy], n)) continue;
                    cx.add_outer(out, cx.t_tilde[hx], cx.t_haar[hy],
                                 cx.tab(cx.ha_b, hx, hy) * cx.tab(cx.hh_f, hx, hy));
                }
            const std::vector<double> w2 = odd_pair_pullback(cx.ha_b);
            return out - synth2_by_family(n, OutFam::Tilde, OutFam::Haar, w2);
        }
        case 7: { // Dπ
            std::vector<double> w = even_pairs_tensor(cx.ah_b, cx.ha_f);
            for (std::size_t k = 0; k < M * M; ++k) w[k] -= cx.ah_b[k] * cx.ha_Tf[k];
            return synth2_by_family(n, OutFam::Haar, OutFam::Haar, w);
        }
        case 8: { // DZ
            Signal2D out(n);
            for (std::size_t hx = 0; hx < M; ++hx) {
                if (!t_image_nonzero(iv[hx], n)) continue;
                for (std::size_t hy = 0; hy < M; ++hy)
                    cx.add_outer(out, cx.t_haar[hx], cx.t_tilde[hy],
                                 cx.tab(cx.ah_b, hx, hy) * cx.tab(cx.hh_f, hx, hy));
            }
            const std::vector<double> w2 = odd_pair_pullback(cx.ah_b);
            return out - synth2_by_family(n, OutFam::Haar, OutFam::Tilde, w2);
        }
        case 9: { // DD
            std::vector<double> w(M * M, 0.0);
            for (std::size_t hx = 0; hx < M; ++hx) {
                if (iv[hx].is_even()) continue;
                const std::size_t px = heap_index(iv[hx].parent());
                const int sx = sign_in_parent(iv[hx]);
                for (std::size_t hy = 0; hy < M; ++hy) {
                    if (iv[hy].is_even()) continue;
                    const std::size_t py = heap_index(iv[hy].parent());
                    const int sy = sign_in_parent(iv[hy]);
                    const double davg = cx.aa_b[px * M + py] - cx.aa_b[hx * M + hy];
                    w[hx * M + hy] = davg * cx.hh_f[px * M + py] * sx * sy;
                }
            }
            return synth2_by_family(n, OutFam::Haar, OutFam::Haar, w);
        }
    }
    throw DyadicError("paper term item must be 1..9");
}

} // namespace dyadic
