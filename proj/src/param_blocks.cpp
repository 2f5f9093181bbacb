#include "hadamard6/param_blocks.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hadamard6/errors.hpp"

namespace hadamard6 {

namespace {

constexpr double kPi = std::numbers::pi;
const double kHalfSqrt3 = std::sqrt(3.0) / 2.0;

void require_angle(double v, const char* name) {
    if (!(v >= 0.0 && v < kPi))
        throw Error(ErrorKind::OutOfRange,
                    std::string(name) + " = " + std::to_string(v) + " outside [0, pi)");
}

}  // namespace

LambdaParams::LambdaParams(double theta_, double phi_) : theta(theta_), phi(phi_) {
    require_angle(theta, "theta");
    require_angle(phi, "phi");
}

UnimodularScalar::UnimodularScalar(Complex v, double eps) : value(v) {
    if (!(std::abs(std::abs(v) - 1.0) < eps))
        throw Error(ErrorKind::OutOfRange,
                    "scalar modulus " + std::to_string(std::abs(v)) + " not within " +
                        std::to_string(eps) + " of 1");
}

UnimodularScalar UnimodularScalar::from_phase(double radians) {
    return UnimodularScalar(std::polar(1.0, radians));
}

Mat2 lambda_matrix(const LambdaParams& p) {
    const double c = std::cos(p.theta);
    const double s = std::sin(p.theta);
    const Complex off = std::polar(s, p.phi);
    Mat2 m;
    m(0, 0) = Complex(c);
    m(0, 1) = off;
    m(1, 0) = std::conj(off);
    m(1, 1) = Complex(-c);
    return m;
}

ABPair ab_from_lambda(const Mat2& lam, double eps) {
    if (max_abs_diff(lam, dagger(lam)) > eps)
        throw Error(ErrorKind::OutOfRange, "Lambda is not self-adjoint");
    if (max_abs_diff(lam * dagger(lam), mat2_identity()) > eps)
        throw Error(ErrorKind::OutOfRange, "Lambda is not unitary");

    const Mat2 f2 = mat2_f2();
    const Complex half(0.5, 0.0);
    const Complex coef(0.0, kHalfSqrt3);
    Mat2 plus, minus;
    for (std::size_t i = 0; i < 4; ++i) {
        const Complex diag = (i == 0 || i == 3) ? half : Complex(0.0);
        plus.e[i] = -diag + coef * lam.e[i];
        minus.e[i] = -diag - coef * lam.e[i];
    }
    return ABPair{f2 * plus, f2 * minus};
}

std::pair<Complex, Complex> a_entries(const LambdaParams& p) {
    const double c = std::cos(p.theta);
    const double s = std::sin(p.theta);
    const Complex i_coef(0.0, kHalfSqrt3);
    const Complex a11 = -0.5 + i_coef * (c + std::polar(s, -p.phi));
    const Complex a12 = -0.5 + i_coef * (-c + std::polar(s, p.phi));
    return {a11, a12};
}

Mat2 z_block(const UnimodularScalar& z, ZBlockKind kind) {
    Mat2 m;
    const Complex one(1.0);
    if (kind == ZBlockKind::RowType) {
        m(0, 0) = one;
        m(0, 1) = one;
        m(1, 0) = z.value;
        m(1, 1) = -z.value;
    } else {
        m(0, 0) = one;
        m(0, 1) = z.value;
        m(1, 0) = one;
        m(1, 1) = -z.value;
    }
    return m;
}

}  // namespace hadamard6
