#pragma once

#include <complex>
#include <random>

#include "hadamard6/mat_core.hpp"
#include "hadamard6/param_blocks.hpp"
#include "hadamard6/verify.hpp"

namespace h6test {

using hadamard6::Complex;
using hadamard6::Mat2;
using hadamard6::Mat6;

inline Complex omega() { return Complex(-0.5, std::sqrt(3.0) / 2.0); }

inline double uniform(std::mt19937& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Complex random_phase(std::mt19937& rng) {
    return std::polar(1.0, uniform(rng, 0.0, 2.0 * 3.141592653589793));
}

inline Mat6 random_mat6(std::mt19937& rng) {
    Mat6 m;
    for (auto& x : m.e) x = Complex(uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0));
    return m;
}

/// Random D2 P2 h P1 D1 scramble; preserves the equivalence class.
inline Mat6 scramble(const Mat6& h, std::mt19937& rng) {
    std::array<int, 6> rp{0, 1, 2, 3, 4, 5}, cp{0, 1, 2, 3, 4, 5};
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    std::array<Complex, 6> dl, dr;
    for (int i = 0; i < 6; ++i) {
        dl[i] = random_phase(rng);
        dr[i] = random_phase(rng);
    }
    Mat6 out;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) out(i, j) = dl[i] * h(rp[i], cp[j]) * dr[j];
    return out;
}

/// Left side of the quartic unimodularity condition tying z and w through the
/// entries (m11, m12): -m11^2 + z^2 m12^2 + w^2 conj(m12)^2 - z^2 w^2 conj(m11)^2.
inline Complex quartic_residual(Complex m11, Complex m12, Complex zsq, Complex wsq) {
    const Complex m11c = std::conj(m11), m12c = std::conj(m12);
    return -m11 * m11 + zsq * m12 * m12 + wsq * m12c * m12c - zsq * wsq * m11c * m11c;
}

/// Check that the witness in an equivalence report reproduces h2 from h1 with
/// freshly recomputed diagonals; returns the max entry error.
inline double witness_error(const Mat6& h1, const Mat6& h2, const hadamard6::EquivalenceReport& rep) {
    const auto& rp = *rep.row_perm;
    const auto& cp = *rep.col_perm;
    Mat6 g;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) g(i, j) = h1(rp[i], cp[j]);
    // h2 = D2 g D1 with d2_0 = 1: d1_j = h2_0j / g_0j, d2_i = h2_i0 / (g_i0 d1_0)
    std::array<Complex, 6> d1, d2;
    for (int j = 0; j < 6; ++j) d1[j] = h2(0, j) / g(0, j);
    for (int i = 0; i < 6; ++i) d2[i] = h2(i, 0) / (g(i, 0) * d1[0]);
    double worst = 0.0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            worst = std::max(worst, std::abs(d2[i] * g(i, j) * d1[j] - h2(i, j)));
    return worst;
}

}  // namespace h6test
