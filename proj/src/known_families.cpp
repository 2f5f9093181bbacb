#include "hadamard6/known_families.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hadamard6/errors.hpp"
#include "hadamard6/family.hpp"

namespace hadamard6 {

Complex omega() { return Complex(-0.5, std::sqrt(3.0) / 2.0); }

Mat2 omega_mat() {
    Mat2 m;
    m(0, 0) = omega();
    m(1, 1) = std::conj(omega());
    return m;
}

namespace {

Mat6 fourier_like(const Mat2& left, const Mat2& mid, const Mat2& right, bool transposed) {
    const Complex om = omega();
    const Complex om2 = std::conj(om);
    BlockGrid g;
    if (!transposed) {
        g[0] = {left, mid, right};
        g[1] = {left, om * mid, om2 * right};
        g[2] = {left, om2 * mid, om * right};
    } else {
        g[0] = {left, left, left};
        g[1] = {mid, om * mid, om2 * mid};
        g[2] = {right, om2 * right, om * right};
    }
    return block_compose(g);
}

}  // namespace

Mat6 fourier(const UnimodularScalar& z1, const UnimodularScalar& z2) {
    return fourier_like(mat2_f2(), z_block(z1, ZBlockKind::RowType),
                        z_block(z2, ZBlockKind::RowType), false);
}

Mat6 fourier_transposed(const UnimodularScalar& z3, const UnimodularScalar& z4) {
    return fourier_like(mat2_f2(), z_block(z3, ZBlockKind::ColType),
                        z_block(z4, ZBlockKind::ColType), true);
}

Mat6 d6_member(const UnimodularScalar& z) {
    const Complex zz = z.value;
    const Complex zc = std::conj(zz);
    const Complex i(0.0, 1.0);
    const Complex one(1.0);
    Mat6 h;
    const Complex rows[6][6] = {
        {one, one, one, one, one, one},
        {one, -one, zz, -zz, i, -i},
        {one, i, -zz, zz, -one, -i},
        {one, -i, i, i, -i, -one},
        {one, zc, -i, -one, -zc, i},
        {one, -zc, -one, -i, zc, i},
    };
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) h(r, c) = rows[r][c];
    return h;
}

Mat6 k6_subfamily_member(double psi, int epsilon_sign) {
    if (!(psi >= 0.0 && psi <= 2.0 * std::numbers::pi / 3.0))
        throw Error(ErrorKind::OutOfRange,
                    "psi = " + std::to_string(psi) + " outside [0, 2*pi/3]");
    if (epsilon_sign != 1 && epsilon_sign != -1)
        throw Error(ErrorKind::OutOfRange, "epsilon_sign must be +1 or -1");

    const Complex z = std::polar(1.0, psi);
    // radicand is 1 + 2 cos(psi) >= 0 on the whole range; clamp roundoff at
    // the psi = 2*pi/3 endpoint
    const double s = std::sqrt(std::max(0.0, 1.0 + 2.0 * std::cos(psi)));
    const Complex ies(0.0, epsilon_sign * s);
    const Complex z3 = (1.0 - ies) / (1.0 + ies);
    const Complex q = principal_sqrt(z3 * z);
    const Complex one(1.0);

    Mat6 h;
    const Complex rows[6][6] = {
        {one, one, one, one, one, one},
        {one, -one, z, -z, z, -z},
        {one, z3, z3 * z, z, -q, -q},
        {one, -z3, z3, -one, -q, q},
        {one, z3, -q, -q, z3 * z, z},
        {one, -z3, -q, q, z3, -one},
    };
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) h(r, c) = rows[r][c];
    return h;
}

}  // namespace hadamard6
