#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace hadamard6 {

using Complex = std::complex<double>;

/// Numerical tolerances shared by the whole library.
/// eps_unimodular bounds | |h|-1 | per entry, eps_unitarity bounds the
/// Frobenius residual of HH^dag - 6E, eps_scalar is a generic scalar slack.
struct Tolerance {
    double eps_unimodular = 1e-10;
    double eps_unitarity = 1e-9;
    double eps_scalar = 1e-10;
};

/// Dense complex matrix of fixed order 2, row-major.
struct Mat2 {
    std::array<Complex, 4> e{};

    Complex& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }
    const Complex& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Dense complex matrix of fixed order 6, row-major.
struct Mat6 {
    std::array<Complex, 36> e{};

    Complex& operator()(int r, int c) { return e[static_cast<std::size_t>(6 * r + c)]; }
    const Complex& operator()(int r, int c) const { return e[static_cast<std::size_t>(6 * r + c)]; }

    friend bool operator==(const Mat6&, const Mat6&) = default;
};

inline Mat2 mat2_identity() {
    return Mat2{{Complex(1), Complex(0), Complex(0), Complex(1)}};
}

/// The 2x2 Fourier matrix [[1,1],[1,-1]].
inline Mat2 mat2_f2() {
    return Mat2{{Complex(1), Complex(1), Complex(1), Complex(-1)}};
}

inline Mat6 mat6_identity() {
    Mat6 m;
    for (int i = 0; i < 6; ++i) m(i, i) = Complex(1);
    return m;
}

inline Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

inline Mat2 operator*(const Mat2& a, const Mat2& b) { return mat2_mul(a, b); }

inline Mat2 operator*(Complex s, const Mat2& a) {
    Mat2 r = a;
    for (auto& x : r.e) x *= s;
    return r;
}

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (std::size_t i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (std::size_t i = 0; i < 4; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

inline Mat6 mat6_mul(const Mat6& a, const Mat6& b) {
    Mat6 r;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Complex s = 0;
            for (int k = 0; k < 6; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

inline Mat6 operator*(const Mat6& a, const Mat6& b) { return mat6_mul(a, b); }

inline Mat2 dagger(const Mat2& m) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

inline Mat6 dagger(const Mat6& m) {
    Mat6 r;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

inline Mat6 transpose(const Mat6& m) {
    Mat6 r;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) r(i, j) = m(j, i);
    return r;
}

inline double frobenius_norm(const Mat2& m) {
    double s = 0;
    for (const auto& x : m.e) s += std::norm(x);
    return std::sqrt(s);
}

inline double frobenius_norm(const Mat6& m) {
    double s = 0;
    for (const auto& x : m.e) s += std::norm(x);
    return std::sqrt(s);
}

inline double max_abs_entry(const Mat2& m) {
    double s = 0;
    for (const auto& x : m.e) s = std::max(s, std::abs(x));
    return s;
}

inline double max_abs_diff(const Mat2& a, const Mat2& b) {
    double s = 0;
    for (std::size_t i = 0; i < 4; ++i) s = std::max(s, std::abs(a.e[i] - b.e[i]));
    return s;
}

inline double max_abs_diff(const Mat6& a, const Mat6& b) {
    double s = 0;
    for (std::size_t i = 0; i < 36; ++i) s = std::max(s, std::abs(a.e[i] - b.e[i]));
    return s;
}

using BlockGrid = std::array<std::array<Mat2, 3>, 3>;

/// Assemble a 6x6 matrix from a 3x3 grid of 2x2 blocks; entry (2i+r, 2j+c)
/// of the result is entry (r,c) of block (i,j).
inline Mat6 block_compose(const BlockGrid& blocks) {
    Mat6 m;
    for (int bi = 0; bi < 3; ++bi)
        for (int bj = 0; bj < 3; ++bj)
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c)
                    m(2 * bi + r, 2 * bj + c) = blocks[static_cast<std::size_t>(bi)][static_cast<std::size_t>(bj)](r, c);
    return m;
}

/// Extract block (bi, bj); inverse of block_compose.
inline Mat2 block_extract(const Mat6& m, int bi, int bj) {
    Mat2 b;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) b(r, c) = m(2 * bi + r, 2 * bj + c);
    return b;
}

/// max(|| HH^dag - 6E ||_F, || H^dag H - 6E ||_F)
inline double unitarity_residual(const Mat6& h) {
    const Mat6 hd = dagger(h);
    Mat6 left = h * hd;
    Mat6 right = hd * h;
    for (int i = 0; i < 6; ++i) {
        left(i, i) -= Complex(6);
        right(i, i) -= Complex(6);
    }
    return std::max(frobenius_norm(left), frobenius_norm(right));
}

/// max over entries of | |h_ij| - 1 |
inline double unimodularity_error(const Mat6& h) {
    double s = 0;
    for (const auto& x : h.e) s = std::max(s, std::abs(std::abs(x) - 1.0));
    return s;
}

}  // namespace hadamard6
