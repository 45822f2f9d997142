#pragma once

#include <array>
#include <string>
#include <vector>

#include "dyadic/haar.hpp"
#include "dyadic/shift.hpp"
#include "dyadic/signal.hpp"

namespace dyadic {

// One-parameter paraproduct kinds. Pi, Z, D are the classical pieces of the
// pointwise product; Mean is the finite-domain boundary term ⟨b⟩⟨f⟩·1, so the
// four kinds reconstruct b·f exactly on [0,1).
enum class ParaKind1D { Pi, Z, D, Mean };

inline constexpr std::array<ParaKind1D, 4> kAllKinds1D{ParaKind1D::Pi, ParaKind1D::Z,
                                                       ParaKind1D::D, ParaKind1D::Mean};

struct ParaKind2D {
    ParaKind1D x, y;
    bool operator==(const ParaKind2D&) const = default;
};

std::vector<ParaKind2D> all_kinds_2d(); // the 16 tensor kinds
inline bool is_paper_kind(const ParaKind2D& k) {
    return k.x != ParaKind1D::Mean && k.y != ParaKind1D::Mean;
}
std::string kind_name(ParaKind1D k);
std::string kind_name(const ParaKind2D& k);

// π(b,f) = Σ_I (b,h_I)⟨f⟩_I h_I;  Z(b,f) = Σ_I (b,h_I)(f,h_I) 1̃_I;
// D(b,f) = Σ_I ⟨b⟩_I (f,h_I) h_I;  Mean(b,f) = ⟨b⟩⟨f⟩·1.
Signal1D para1(ParaKind1D kind, const Signal1D& b, const Signal1D& f);

// Tensor composition: the x-kind acts across the x-Haar structure and the
// y-kind across y, e.g. πD(b,f) = Σ_{I,J} (b,h_I⊗1̃_J)(f,1̃_I⊗h_J) h_I⊗h_J.
Signal2D para2(const ParaKind2D& kind, const Signal2D& b, const Signal2D& f);

// T(kind(b,f)) - kind(b, Tf); the four 1D terms sum to [T,b]f.
Signal1D commutator_term_1d(ParaKind1D kind, const Signal1D& b, const Signal1D& f);

// 𝐓(kind(b,f)) - kind(b, 𝐓f); the sixteen terms sum to [𝐓,b]f.
Signal2D commutator_term_2d(const ParaKind2D& kind, const Signal2D& b, const Signal2D& f);

// (TD - DT)f = Σ_{I odd} (-1/√|Î|) (b,h_Î)(f,h_Î) h_I, exact at every depth.
Signal1D dd_term_closed_form_1d(const Signal1D& b, const Signal1D& f);

// The displayed bi-parameter term formulas, evaluated literally as sums over
// interval pairs; item selects the commutator piece:
//   1 ππ, 2 ZZ, 3 πZ, 4 Zπ, 5 πD, 6 ZD, 7 Dπ, 8 DZ, 9 DD.
Signal2D paper_term_closed_form_2d(int item, const Signal2D& b, const Signal2D& f);
ParaKind2D paper_item_kind(int item);

} // namespace dyadic
