#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hadamard6/errors.hpp"
#include "hadamard6/family.hpp"
#include "hadamard6/known_families.hpp"
#include "hadamard6/verify.hpp"
#include "test_helpers.hpp"

using namespace hadamard6;

namespace {
constexpr double kPi = std::numbers::pi;
UnimodularScalar uphase(double t) { return UnimodularScalar::from_phase(t); }
}  // namespace

TEST_CASE("omega constants") {
    const Complex om = omega();
    CHECK(std::abs(1.0 + om + om * om) < 1e-15);

    const Mat2 o = omega_mat();
    const Mat2 sum = mat2_identity() + o + o * o;
    CHECK(max_abs_entry(sum) < 1e-15);
}

TEST_CASE("fourier members") {
    // classical Fourier matrix up to equivalence at z1 = z2 = 1
    Mat6 dft;
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) dft(r, c) = std::polar(1.0, 2.0 * kPi * r * c / 6.0);
    const Mat6 f = fourier(uphase(0), uphase(0));
    CHECK(is_hadamard(f).is_hadamard);
    CHECK(are_equivalent(f, dft).equivalent);

    const Mat6 g = fourier(uphase(0.3), uphase(1.2));
    CHECK(is_hadamard(g).is_hadamard);
    CHECK(h2_reducible(g));
    CHECK(dephased_has_minus_one(g));

    // embedding: reducible with a -1 in the dephased form across the family
    std::mt19937 rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        const Mat6 member = fourier(UnimodularScalar(h6test::random_phase(rng)),
                                    UnimodularScalar(h6test::random_phase(rng)));
        CHECK(h2_reducible(member));
        CHECK(dephased_has_minus_one(member));
    }

    // block (2,1) is exactly omega^2 Z1
    const Mat2 expected =
        std::conj(omega()) * z_block(uphase(0.3), ZBlockKind::RowType);
    CHECK(block_extract(g, 2, 1) == expected);
}

TEST_CASE("fourier_transposed members") {
    const Mat6 t = fourier_transposed(uphase(0), uphase(0));
    CHECK(is_hadamard(t).is_hadamard);
    CHECK(are_equivalent(transpose(t), fourier(uphase(0), uphase(0))).equivalent);

    const Mat6 g = fourier_transposed(uphase(0.5), uphase(1.3));
    CHECK(is_hadamard(g).is_hadamard);
    CHECK(h2_reducible(g));
    CHECK(are_equivalent(transpose(g), fourier(uphase(0.5), uphase(1.3))).equivalent);
}

TEST_CASE("d6 members") {
    const Mat6 h1 = d6_member(uphase(0.0));
    CHECK(is_hadamard(h1).is_hadamard);
    for (const Complex& x : h1.e) {
        const bool real_unit = std::abs(std::abs(x.real()) - 1.0) < 1e-14 && std::abs(x.imag()) < 1e-14;
        const bool imag_unit = std::abs(std::abs(x.imag()) - 1.0) < 1e-14 && std::abs(x.real()) < 1e-14;
        CHECK((real_unit || imag_unit));
    }

    const Mat6 h2 = d6_member(uphase(0.4));
    CHECK(is_hadamard(h2).is_hadamard);
    CHECK(dephase(h2) == h2);  // displayed in dephased form

    // equivalent to the degenerate build at theta = arccos(1/sqrt 3), phi = pi/4
    const LambdaParams p(std::acos(1.0 / std::sqrt(3.0)), kPi / 4.0);
    CHECK(are_equivalent(build_degenerate(p, uphase(0.4), Anchor::Z1), h2).equivalent);
}

TEST_CASE("k6 subfamily") {
    // psi = 0: z3 = omega^2
    const Mat6 at0 = k6_subfamily_member(0.0);
    CHECK(std::abs(at0(2, 1) - std::conj(omega())) < 1e-14);  // z3 sits at (2,1)
    CHECK(is_hadamard(at0).is_hadamard);

    // psi = 2 pi / 3: the radicand vanishes and z3 = 1
    const Mat6 at_end = k6_subfamily_member(2.0 * kPi / 3.0);
    CHECK(std::abs(at_end(2, 1) - Complex(1.0)) < 1e-7);  // sqrt flattens roundoff
    CHECK(is_hadamard(at_end).is_hadamard);

    for (double psi : {kPi / 6.0, kPi / 3.0, kPi / 2.0}) {
        const HadamardReport rep = is_hadamard(k6_subfamily_member(psi));
        CHECK(rep.is_hadamard);
        CHECK(rep.unitarity_error < 1e-9);
    }

    CHECK_THROWS_AS(k6_subfamily_member(2.0 * kPi / 3.0 + 0.01), Error);
    CHECK_THROWS_AS(k6_subfamily_member(-0.01), Error);
    CHECK_THROWS_AS(k6_subfamily_member(0.5, 2), Error);
}

TEST_CASE("k6 members sit on the A degeneracy curve") {
    for (double psi : {0.4, 1.1}) {
        // the implied point: phi = -psi/2 mod pi, theta from tan(phi) = sqrt(3) cos(theta)
        const double phi = std::fmod(-psi / 2.0 + kPi, kPi);
        const double theta = std::acos(std::tan(phi) / std::sqrt(3.0));
        const LambdaParams p(theta, phi);
        CHECK(std::abs(curve_a(p)) < 1e-10);
        CHECK(classify_regime(p, kNearDegenerateBand) == RegimeTag::DegenerateA);

        // and the degenerate build there with free z = e^{i psi} reproduces the
        // k6 member up to equivalence
        const Mat6 built = build_degenerate(p, uphase(psi), Anchor::Z1);
        CHECK(are_equivalent(built, k6_subfamily_member(psi)).equivalent);
    }
}

TEST_CASE("k6 epsilon signs give equivalent members") {
    const Mat6 plus = k6_subfamily_member(kPi / 3.0, +1);
    const Mat6 minus = k6_subfamily_member(kPi / 3.0, -1);
    CHECK(are_equivalent(plus, minus).equivalent);
}
