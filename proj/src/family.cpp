#include "hadamard6/family.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include "hadamard6/errors.hpp"
#include "hadamard6/verify.hpp"

namespace hadamard6 {

namespace {

constexpr double kPi = std::numbers::pi;

void require_angle(double v, const char* name) {
    if (!(v >= 0.0 && v < kPi))
        throw Error(ErrorKind::OutOfRange,
                    std::string(name) + " = " + std::to_string(v) + " outside [0, pi)");
}

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

Complex omega_const() { return Complex(-0.5, std::sqrt(3.0) / 2.0); }

Mat2 a_matrix(const LambdaParams& p) {
    const auto [a11, a12] = a_entries(p);
    Mat2 a;
    a(0, 0) = a11;
    a(0, 1) = a12;
    a(1, 0) = std::conj(a12);
    a(1, 1) = -std::conj(a11);
    return a;
}

Mat2 b_from_a(const Mat2& a) {
    const Mat2 f2 = mat2_f2();
    Mat2 b;
    for (std::size_t i = 0; i < 4; ++i) b.e[i] = -f2.e[i] - a.e[i];
    return b;
}

Mat2 row_block(Complex z) {
    Mat2 m;
    m(0, 0) = Complex(1.0);
    m(0, 1) = Complex(1.0);
    m(1, 0) = z;
    m(1, 1) = -z;
    return m;
}

Mat2 col_block(Complex z) {
    Mat2 m;
    m(0, 0) = Complex(1.0);
    m(0, 1) = z;
    m(1, 0) = Complex(1.0);
    m(1, 1) = -z;
    return m;
}

/// Standard-form assembly from the four Z scalars and the (A, B) pair.
Mat6 compose_standard_form(const Mat2& a, const Mat2& b, Complex z1, Complex z2, Complex z3,
                           Complex z4) {
    const Mat2 zb1 = row_block(z1);
    const Mat2 zb2 = row_block(z2);
    const Mat2 zb3 = col_block(z3);
    const Mat2 zb4 = col_block(z4);
    const Complex half(0.5);
    BlockGrid g;
    g[0] = {mat2_f2(), zb1, zb2};
    g[1] = {zb3, half * (zb3 * a * zb1), half * (zb3 * b * zb2)};
    g[2] = {zb4, half * (zb4 * b * zb1), half * (zb4 * a * zb2)};
    return block_compose(g);
}

Mat6 verified(Mat6 h, const Tolerance& tol, const char* what) {
    const HadamardReport rep = is_hadamard(h, tol);
    if (!rep.is_hadamard)
        throw Error(ErrorKind::VerificationFailed,
                    std::string(what) + ": unimodular_error=" + short_num(rep.unimodular_error) +
                        " unitarity_error=" + short_num(rep.unitarity_error));
    return h;
}

Complex flip(Complex z, bool s) { return s ? -z : z; }

/// phi value putting (theta, phi) exactly on the requested degeneracy curve;
/// used to project band-level near-degenerate points before the exact
/// on-curve formulas are applied.
double curve_phi(double theta, bool a_curve) {
    double phi = std::atan((a_curve ? 1.0 : -1.0) * std::sqrt(3.0) * std::cos(theta));
    if (phi < 0.0) phi += kPi;
    return phi;
}

}  // namespace

FamilyPoint::FamilyPoint(double theta_, double phi_, double psi1_)
    : theta(theta_), phi(phi_), psi1(psi1_) {
    require_angle(theta, "theta");
    require_angle(phi, "phi");
    require_angle(psi1, "psi1");
}

SignChoice SignChoice::from_mask(unsigned mask) {
    return SignChoice{(mask & 1u) != 0, (mask & 2u) != 0, (mask & 4u) != 0, (mask & 8u) != 0};
}

const char* to_string(RegimeTag tag) {
    switch (tag) {
        case RegimeTag::Generic: return "Generic";
        case RegimeTag::DegenerateA: return "DegenerateA";
        case RegimeTag::DegenerateB: return "DegenerateB";
        case RegimeTag::DoublyDegenerateTheta0: return "DoublyDegenerateTheta0";
        case RegimeTag::DoublyDegenerateHalfPi: return "DoublyDegenerateHalfPi";
    }
    return "Generic";
}

RegimeTag classify_regime(const LambdaParams& p, double threshold) {
    const bool deg_a = std::abs(from_a(p).modulus_gap()) <= threshold;
    const bool deg_b = std::abs(from_b(p).modulus_gap()) <= threshold;
    if (deg_a && deg_b) {
        // Common zero sets: sin(theta) = 0, or theta = pi/2 with phi = 0.
        return std::abs(std::sin(p.theta)) < 0.5 ? RegimeTag::DoublyDegenerateTheta0
                                                 : RegimeTag::DoublyDegenerateHalfPi;
    }
    if (deg_a) return RegimeTag::DegenerateA;
    if (deg_b) return RegimeTag::DegenerateB;
    return RegimeTag::Generic;
}

Complex principal_sqrt(Complex w) {
    double im = w.imag();
    // Values on the branch cut pick up ~1e-16 dirt of arbitrary sign; snap
    // them to the closed (+) side so sqrt(-1) is deterministically +i.
    if (std::abs(im) <= 16.0 * std::numeric_limits<double>::epsilon() * std::abs(w)) im = 0.0;
    const Complex cleaned(w.real(), im);
    return std::polar(std::sqrt(std::abs(cleaned)), std::arg(cleaned) / 2.0);
}

ZQuad solve_z_quad(const FamilyPoint& fp, const Tolerance& tol) {
    const LambdaParams p = fp.lambda();
    if (classify_regime(p, kNearDegenerateBand) != RegimeTag::Generic)
        throw Error(ErrorKind::RegimeMismatch, "solve_z_quad requires the Generic regime");

    const MoebiusMap ma = from_a(p);
    const MoebiusMap mb = from_b(p);
    const Complex z1 = std::polar(1.0, fp.psi1);
    const Complex z1sq = z1 * z1;
    const Complex z3sq = apply(ma, z1sq, tol);
    const Complex z4sq = apply(mb, z1sq, tol);
    // Both composite routes agree; invert the map farther from degeneracy.
    const Complex z2sq = std::abs(ma.modulus_gap()) < std::abs(mb.modulus_gap())
                             ? apply_inverse(mb, z3sq, tol)
                             : apply_inverse(ma, z4sq, tol);
    const double eps = tol.eps_unimodular;
    return ZQuad{UnimodularScalar(z1, eps), UnimodularScalar(principal_sqrt(z2sq), eps),
                 UnimodularScalar(principal_sqrt(z3sq), eps),
                 UnimodularScalar(principal_sqrt(z4sq), eps)};
}

Mat6 build_matrix(const FamilyPoint& fp, const SignChoice& signs, const Tolerance& tol) {
    const ZQuad q = solve_z_quad(fp, tol);
    const Mat2 a = a_matrix(fp.lambda());
    return verified(compose_standard_form(a, b_from_a(a), flip(q.z1.value, signs.s1),
                                          flip(q.z2.value, signs.s2), flip(q.z3.value, signs.s3),
                                          flip(q.z4.value, signs.s4)),
                    tol, "build_matrix");
}

Mat6 build_degenerate(const LambdaParams& p, const UnimodularScalar& free_param, Anchor anchor,
                      const Tolerance& tol) {
    const RegimeTag tag = classify_regime(p, kNearDegenerateBand);
    if (tag != RegimeTag::DegenerateA && tag != RegimeTag::DegenerateB)
        throw Error(ErrorKind::RegimeMismatch,
                    std::string("build_degenerate requires a single-degenerate point, got ") +
                        to_string(tag));
    const bool a_degenerate = (tag == RegimeTag::DegenerateA);

    // Project onto the exact curve; the on-curve formulas below are exact
    // only there, and band-level offsets would fail the final verification.
    const LambdaParams exact(p.theta, curve_phi(p.theta, a_degenerate));

    const MoebiusMap deg = a_degenerate ? from_a(exact) : from_b(exact);
    const MoebiusMap good = a_degenerate ? from_b(exact) : from_a(exact);
    const DegeneracyInfo info = degeneracy_info(deg, kNearDegenerateBand);
    if (!info.degenerate || !info.image || !info.preimage)
        throw Error(ErrorKind::RegimeMismatch, "degeneracy data unavailable after projection");
    const Complex w0 = principal_sqrt(*info.image);
    const Complex z0 = principal_sqrt(*info.preimage);

    // The degenerate map pins z2 (and z3 or z4); the good map carries the
    // free parameter to its partner. For degenerate M_A the pinned pair is
    // (z3, z2); for degenerate M_B it is (z4, z2).
    const Complex t = free_param.value;
    Complex z1, z2, z3, z4;
    if (anchor == Anchor::Z1) {
        z1 = t;
        z2 = z0;
        z3 = a_degenerate ? w0 : principal_sqrt(apply(good, t * t, tol));
        z4 = a_degenerate ? principal_sqrt(apply(good, t * t, tol)) : w0;
    } else {
        z3 = t;
        if (a_degenerate) {
            z1 = z0;
            z2 = principal_sqrt(apply_inverse(good, t * t, tol));
        } else {
            z1 = principal_sqrt(apply_inverse(good, t * t, tol));
            z2 = z0;
        }
        z4 = w0;
    }

    const Mat2 a = a_matrix(exact);
    return verified(compose_standard_form(a, b_from_a(a), z1, z2, z3, z4), tol,
                    "build_degenerate");
}

Complex theta0_z2_squared(double phi, Complex z1_squared, const Tolerance& tol) {
    const Complex e2 = std::polar(1.0, 2.0 * phi);
    const Complex em2 = std::conj(e2);
    const Complex num = (1.0 + em2) * z1_squared + em2;
    const Complex den = e2 * z1_squared + 1.0 + e2;
    if (std::abs(den) <= tol.eps_scalar)
        throw Error(ErrorKind::NearPole, "theta -> 0 limit denominator vanishes");
    return -e2 * num / den;
}

namespace {

void reject_exceptional(Complex zsq, const Tolerance& tol, const char* name) {
    const Complex om = omega_const();
    if (std::abs(zsq - om) <= tol.eps_scalar || std::abs(zsq - om * om) <= tol.eps_scalar)
        throw Error(ErrorKind::ExceptionalDirection,
                    std::string(name) + "^2 lies on an excluded direction (omega or omega^2)");
}

// A = F2 Omega, B = F2 Omega^2: the exact theta = 0 blocks.
Mat2 a_theta0() {
    const Complex om = omega_const();
    Mat2 a;
    a(0, 0) = om;
    a(0, 1) = std::conj(om);
    a(1, 0) = om;
    a(1, 1) = -std::conj(om);
    return a;
}

// A = Omega F2, B = Omega^2 F2: the exact theta = pi/2, phi = 0 blocks.
Mat2 a_halfpi() {
    const Complex om = omega_const();
    Mat2 a;
    a(0, 0) = om;
    a(0, 1) = om;
    a(1, 0) = std::conj(om);
    a(1, 1) = -std::conj(om);
    return a;
}

}  // namespace

Mat6 build_theta0_limit(double phi, const UnimodularScalar& z1, const Tolerance& tol) {
    const Complex z1sq = z1.value * z1.value;
    reject_exceptional(z1sq, tol, "z1");
    const Complex z2 = principal_sqrt(theta0_z2_squared(phi, z1sq, tol));
    const Mat2 a = a_theta0();
    return verified(compose_standard_form(a, b_from_a(a), z1.value, z2, Complex(1.0), Complex(1.0)),
                    tol, "build_theta0_limit");
}

Mat6 build_theta0_z3_anchor(const UnimodularScalar& z3, double phi, const Tolerance& tol) {
    const Complex z3sq = z3.value * z3.value;
    const Complex om = omega_const();
    Complex z1sq, z2sq;
    if (std::abs(z3sq - 1.0) <= tol.eps_scalar) {
        const Complex em2 = std::polar(1.0, -2.0 * phi);
        z1sq = std::conj(om) * em2;
        z2sq = om * em2;
    } else {
        z1sq = om;
        z2sq = std::conj(om);
    }
    const Mat2 a = a_theta0();
    return verified(compose_standard_form(a, b_from_a(a), principal_sqrt(z1sq),
                                          principal_sqrt(z2sq), z3.value, Complex(1.0)),
                    tol, "build_theta0_z3_anchor");
}

Mat6 build_halfpi_limit(double phi, const UnimodularScalar& z3, const Tolerance& tol) {
    const Complex z3sq = z3.value * z3.value;
    reject_exceptional(z3sq, tol, "z3");
    const Complex z4 = principal_sqrt(theta0_z2_squared(phi, z3sq, tol));
    const Mat2 a = a_halfpi();
    return verified(compose_standard_form(a, b_from_a(a), Complex(1.0), Complex(1.0), z3.value, z4),
                    tol, "build_halfpi_limit");
}

}  // namespace hadamard6
