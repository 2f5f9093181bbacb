#pragma once

#include "hadamard6/mat_core.hpp"
#include "hadamard6/moebius.hpp"
#include "hadamard6/param_blocks.hpp"

namespace hadamard6 {

/// Parameter triple selecting a family member; all components in [0, pi).
struct FamilyPoint {
    double theta;
    double phi;
    double psi1;

    FamilyPoint(double theta_, double phi_, double psi1_);
    LambdaParams lambda() const { return LambdaParams(theta, phi); }
};

/// The four unimodular Z-block parameters.
struct ZQuad {
    UnimodularScalar z1;
    UnimodularScalar z2;
    UnimodularScalar z3;
    UnimodularScalar z4;
};

/// One boolean per z parameter; true flips z_i -> -z_i. All 16 choices yield
/// equivalent matrices.
struct SignChoice {
    bool s1 = false;
    bool s2 = false;
    bool s3 = false;
    bool s4 = false;

    static SignChoice from_mask(unsigned mask);  // bit 0 -> s1, ..., bit 3 -> s4
};

enum class RegimeTag {
    Generic,
    DegenerateA,
    DegenerateB,
    DoublyDegenerateTheta0,
    DoublyDegenerateHalfPi,
};

const char* to_string(RegimeTag tag);

/// Generic builds are refused when either Moebius map has
/// ||alpha|^2 - |beta|^2| below this band; the exact degenerate formulas take
/// over well before the generic quotients lose conditioning.
inline constexpr double kNearDegenerateBand = 1e-6;

/// Tag by the degeneracy of M_A / M_B, threshold on ||alpha|^2 - |beta|^2|.
/// Doubly degenerate tags take precedence over single ones.
RegimeTag classify_regime(const LambdaParams& p, double threshold = 1e-10);

/// Which Z parameter is left free in the single-degenerate construction.
enum class Anchor { Z1, Z3 };

/// z1 = exp(i psi1); z3^2 = M_A(z1^2), z4^2 = M_B(z1^2),
/// z2^2 = M_B^{-1}(M_A(z1^2)) = M_A^{-1}(M_B(z1^2)); principal square roots.
/// Requires the Generic regime (at the near-degenerate band).
ZQuad solve_z_quad(const FamilyPoint& fp, const Tolerance& tol = {});

/// The dephased family member
///   [ F2  Z1        Z2       ]
///   [ Z3  Z3 A Z1/2 Z3 B Z2/2]
///   [ Z4  Z4 B Z1/2 Z4 A Z2/2]
/// Verified Hadamard before returning; requires the Generic regime.
Mat6 build_matrix(const FamilyPoint& fp, const SignChoice& signs = {}, const Tolerance& tol = {});

/// Single-degenerate construction. With M_A degenerate (image w0^2, preimage
/// z0^2) and anchor Z1: z1 free, z2^2 = z0^2, z3^2 = w0^2, z4^2 = M_B(z1^2);
/// anchor Z3: z3 free, z2^2 = M_B^{-1}(z3^2), z1^2 = z0^2, z4^2 = w0^2.
/// Mirrored roles when M_B is the degenerate map. Points inside the
/// near-degenerate band are projected onto the exact degeneracy curve first.
Mat6 build_degenerate(const LambdaParams& p, const UnimodularScalar& free_param, Anchor anchor,
                      const Tolerance& tol = {});

/// Directional theta -> 0 limit of z2^2 for a fixed phi:
///   -e^{2ip} ((1 + e^{-2ip}) z1^2 + e^{-2ip}) / (e^{2ip} z1^2 + 1 + e^{2ip})
Complex theta0_z2_squared(double phi, Complex z1_squared, const Tolerance& tol = {});

/// theta = 0 limit family member anchored at z1: z3 = z4 = 1 and z2 from the
/// closed form above. Member of the Fourier family. Directions with
/// z1^2 in {omega, omega^2} are excluded.
Mat6 build_theta0_limit(double phi, const UnimodularScalar& z1, const Tolerance& tol = {});

/// theta = 0 limit family anchored at z3: z4 = 1 and (z1^2, z2^2) equal to
/// (omega, omega^2) for z3^2 != 1, or (omega^2 e^{-2ip}, omega e^{-2ip}) for
/// z3^2 = 1. Equivalent to a subfamily of the transposed Fourier family.
Mat6 build_theta0_z3_anchor(const UnimodularScalar& z3, double phi, const Tolerance& tol = {});

/// theta = pi/2, phi = 0 limit, handled by exchanging the roles of (z1, z2)
/// and (z3, z4) in the theta = 0 machinery: z1 = z2 = 1, z3 free, z4 from the
/// closed form. Member of the transposed Fourier family.
Mat6 build_halfpi_limit(double phi, const UnimodularScalar& z3, const Tolerance& tol = {});

/// Principal square root with argument in (-pi/2, pi/2]; inputs within
/// roundoff of the negative real axis resolve to the closed (+i) side.
Complex principal_sqrt(Complex w);

}  // namespace hadamard6
