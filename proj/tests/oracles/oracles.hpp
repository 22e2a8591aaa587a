#pragma once

// Slow reference computations, independent of the library's fast paths.
// Everything is evaluated directly from the defining sums and products in
// long double.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "lnfft/types.hpp"

namespace lnfft::oracle {

using LComplex = std::complex<long double>;

/// e^{j2π·k·t} with the product formed in long double.
LComplex phase(long double k, long double t);

/// Σ_q x_q e^{sign·j2πpq/N}.
CVector naive_dft(std::span<const Complex> x, int sign);

/// A(p) = Σ_q a_q e^{-j2πp t_q}, p < modes.
CVector type1(std::span<const double> t, std::span<const Complex> a, std::size_t modes);
/// s(t_q) = Σ_p S_p e^{+j2πp t_q}.
CVector type2(std::span<const Complex> coefs, std::span<const double> t);

/// γ(q/P) = Σ_n a_n Σ_r Λ_r e^{j2πr(q/P - t_n)}.
CVector nonuniform_conv(std::span<const double> t, std::span<const Complex> a,
                        std::span<const Complex> lambda, std::size_t size);

/// Σ_p log(1 - e^{j2π(x - t_p)} e^{-2πa}) at x = q/P, principal branch.
CVector log_sum(std::span<const double> t, double damping_a);

/// L(z) = Π_p (z - e^{j2πt_p}) at z = e^{j2π(q/P + ja)}.
CVector node_product(std::span<const double> t, double damping_a);

/// Monomial coefficients c_0..c_P of Π_p (z - e^{j2πt_p}). Roots are
/// multiplied in bit-reversed order of their sorted position so partial
/// products stay balanced.
std::vector<LComplex> monomial_coefficients(std::span<const double> t);

/// L'(e^{j2πt_p}) = Π_{q≠p} (e^{j2πt_p} - e^{j2πt_q}).
CVector root_derivatives(std::span<const double> t);

/// Gaussian elimination with partial pivoting in long double. `matrix` is
/// row-major n×n.
CVector dense_solve(std::span<const Complex> matrix, std::span<const Complex> rhs);

/// Row-major Σ_q A[p][q] a_q = spectrum_p with A[p][q] = e^{-j2πp t_q}.
std::vector<Complex> type4_matrix(std::span<const double> t);
/// Row-major Σ_p A[q][p] S_p = samples_q with A[q][p] = e^{+j2πp t_q}.
std::vector<Complex> type5_matrix(std::span<const double> t);

/// ‖A x - b‖ / ‖b‖.
double residual(std::span<const Complex> matrix, std::span<const Complex> x,
                std::span<const Complex> b);

double rel_l2(std::span<const Complex> reference, std::span<const Complex> value);
double max_abs_diff(std::span<const Complex> reference, std::span<const Complex> value);

}  // namespace lnfft::oracle
