#pragma once

#include "dyadic/haar.hpp"
#include "dyadic/signal.hpp"

namespace dyadic {

// The dyadic shift: T h_I = h_{I_+} - h_{I_-} for even I, 0 otherwise.
// Even I at level depth-1 map to 0 (their children are not representable);
// T and T* below are exact adjoints under this truncation.
Signal1D apply_T(const Signal1D& f);

// T* h_J = s(J, Ĵ) h_{Ĵ} for odd J, 0 otherwise.
Signal1D apply_T_star(const Signal1D& f);

// T T* h_I = h_I - h_{s(I)} for odd I, 0 otherwise.
Signal1D apply_TTstar(const Signal1D& f);

// Tensor shift 𝐓 = T ⊗ T and its pieces acting in one variable.
Signal2D apply_T1(const Signal2D& f);
Signal2D apply_T2(const Signal2D& f);
Signal2D apply_T1_star(const Signal2D& f);
Signal2D apply_T2_star(const Signal2D& f);
Signal2D apply_biT(const Signal2D& f);      // T1 ∘ T2
Signal2D apply_biT_star(const Signal2D& f); // T1* ∘ T2*

// True when T h_I is representable and nonzero at this depth.
inline bool t_image_nonzero(const DyadicInterval& i, int depth) {
    return i.is_even() && i.level <= depth - 2;
}

} // namespace dyadic
