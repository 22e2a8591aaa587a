#pragma once

#include <span>

#include "lnfft/flops.hpp"
#include "lnfft/types.hpp"

namespace lnfft {

/// out_p = Σ_q v_q e^{-j2πpq/N}. Unnormalized; any N >= 1.
CVector dft(std::span<const Complex> v, FlopCounter* flops = nullptr);

/// out_q = (1/N) Σ_p V_p e^{+j2πpq/N}, so dft(idft(V)) == V.
CVector idft(std::span<const Complex> V, FlopCounter* flops = nullptr);

/// N·idft(V): the unnormalized inverse transform, charged as one FFT only.
CVector synthesize(std::span<const Complex> V, FlopCounter* flops = nullptr);

/// In-place variants used by the gridding code on scratch buffers.
void dft_inplace(std::span<Complex> v);
void synthesize_inplace(std::span<Complex> v);

/// Element-wise product; Errc::LengthMismatch for unequal lengths.
CVector hadamard(std::span<const Complex> v, std::span<const Complex> w,
                 FlopCounter* flops = nullptr);

}  // namespace lnfft
