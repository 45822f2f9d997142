#pragma once

#include "dyadic/matrix.hpp"
#include "dyadic/paraproduct.hpp"
#include "dyadic/shift.hpp"
#include "dyadic/signal.hpp"

namespace dyadic {

// [T, b] f = T(b·f) - b·T(f)
Signal1D commutator_apply_1d(const Signal1D& b, const Signal1D& f);
Signal2D commutator_apply_2d(const Signal2D& b, const Signal2D& f);

OperatorMatrix commutator_matrix_1d(const Signal1D& b);
OperatorMatrix commutator_matrix_2d(const Signal2D& b);

struct SpectralNormResult {
    double value = 0.0;   // largest singular value
    int iterations = 0;
    double residual = 0.0; // ‖(mᵀm)v - value²·v‖ / max(value², eps)
    bool used_fallback = false;
};

// Power iteration on mᵀm with a deterministic start vector; falls back to a
// full Jacobi eigendecomposition for dim ≤ 1024 if the certificate is not
// reached within the iteration cap.
SpectralNormResult operator_norm(const OperatorMatrix& m, double tol = 1e-9,
                                 int max_iterations = 100000);

// ((Tb - bT) h_I, h_K) and the bi-parameter analogue ([𝐓,b] h_R_in, h_R_out).
double pairing1(const Signal1D& b, const DyadicInterval& in, const DyadicInterval& out);
double pairing2(const Signal2D& b, const DyadicRectangle& in, const DyadicRectangle& out);

// ([𝐓,b] u, v) for arbitrary test functions u (e.g. h_I ⊗ T2* h_J).
double generalized_pairing(const Signal2D& b, const Signal2D& u, const Signal2D& v);

// Pieces of the π-part (Tπ - πT) f = Σ1 f + Σ21 f - Σ22 f:
//   Σ1  f = -Σ_{I even} (b,h_I) ⟨Tf⟩_I h_I        (even-span output)
//   Σ21 f =  Σ_{I even} (b,h_I) ⟨f⟩_I (T h_I)     (odd-span output)
//   Σ22 f =  Σ_{I odd}  (b,h_I) ⟨Tf⟩_I h_I        (odd-span output)
Signal1D sigma1_apply(const Signal1D& b, const Signal1D& f);
Signal1D sigma21_apply(const Signal1D& b, const Signal1D& f);
Signal1D sigma22_apply(const Signal1D& b, const Signal1D& f);
Signal1D sigma2_apply(const Signal1D& b, const Signal1D& f);

// Closed-form values of ‖Σ· h_{I0}‖² for even I0 (coefficient sums).
double sigma1_normsq_formula(const Signal1D& b, const DyadicInterval& i0);
double sigma21_normsq_formula(const Signal1D& b, const DyadicInterval& i0);
double sigma22_normsq_formula(const Signal1D& b, const DyadicInterval& i0);

// The ten bi-parameter pieces obtained by testing the surviving commutator
// terms on h_{I0} ⊗ h_{J0}; each returns the zero signal outside its parity
// domain. The "*_1" pieces come from 𝐓·kind(b,·), the "*_2" pieces from
// -kind(b, 𝐓·).
Signal2D group_pipi1(const Signal2D& b, const DyadicInterval& i0, const DyadicInterval& j0);
Signal2D group_piz1(const Signal2D& b, const DyadicInterval& i0, const DyadicInterval& j0);
Signal2D group_zpi1(const Signal2D& b, const DyadicInterval& i0, const DyadicInterval& j0);
Signal2D group_dpi1(const Signal2D& b, const DyadicInterval& i0, const DyadicInterval& j0);
Signal2D group_pid1(const Signal2D& b, const DyadicInterval& i0, const DyadicInterval& j0);
Signal2D group_pipi2(const Signal2D& b, const DyadicInterval& i0, const DyadicInterval& j0);
Signal2D group_piz2(const Signal2D& b, const DyadicInterval& i0, const DyadicInterval& j0);
Signal2D group_zpi2(const Signal2D& b, const DyadicInterval& i0, const DyadicInterval& j0);
Signal2D group_pid2(const Signal2D& b, const DyadicInterval& i0, const DyadicInterval& j0);
Signal2D group_dpi2(const Signal2D& b, const DyadicInterval& i0, const DyadicInterval& j0);

// Coefficient-sum values of the corresponding squared norms.
double group_pipi1_normsq_formula(const Signal2D& b, const DyadicInterval& i0, const DyadicInterval& j0);
double group_dpi1_normsq_formula(const Signal2D& b, const DyadicInterval& i0, const DyadicInterval& j0);
double group_pid1_normsq_formula(const Signal2D& b, const DyadicInterval& i0, const DyadicInterval& j0);
double group_pipi2_normsq_formula(const Signal2D& b, const DyadicInterval& i0, const DyadicInterval& j0);
double group_pid2_normsq_formula(const Signal2D& b, const DyadicInterval& i0, const DyadicInterval& j0);
double group_dpi2_normsq_formula(const Signal2D& b, const DyadicInterval& i0, const DyadicInterval& j0);

} // namespace dyadic
