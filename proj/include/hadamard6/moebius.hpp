#pragma once

#include <optional>

#include "hadamard6/mat_core.hpp"
#include "hadamard6/param_blocks.hpp"

namespace hadamard6 {

/// w = M(z) = (alpha z - beta) / (conj(beta) z - conj(alpha)); maps the unit
/// circle onto itself while |alpha| != |beta|.
struct MoebiusMap {
    Complex alpha;
    Complex beta;

    /// |alpha|^2 - |beta|^2; zero characterizes a degenerate map.
    double modulus_gap() const;
};

struct DegeneracyInfo {
    bool degenerate = false;
    std::optional<Complex> image;     // w0^2 = alpha / conj(beta)
    std::optional<Complex> preimage;  // z0^2 = conj(alpha) / conj(beta)
};

/// Map with alpha = A12^2, beta = A11^2 at the given point.
MoebiusMap from_a(const LambdaParams& p);
/// Map with alpha = B12^2, beta = B11^2.
MoebiusMap from_b(const LambdaParams& p);

Complex apply(const MoebiusMap& m, Complex z, const Tolerance& tol = {});
Complex apply_inverse(const MoebiusMap& m, Complex w, const Tolerance& tol = {});

DegeneracyInfo degeneracy_info(const MoebiusMap& m, double eps = 1e-10);

/// | M_B^{-1}(M_A(z^2)) - M_A^{-1}(M_B(z^2)) |; identically zero in exact
/// arithmetic for any point where both maps are honest bijections.
double commutation_defect(const LambdaParams& p, Complex z, const Tolerance& tol = {});

/// sin t (sin p - sqrt(3) cos t cos p); M_A degenerates exactly on its zero set.
double curve_a(const LambdaParams& p);
/// sin t (sin p + sqrt(3) cos t cos p); M_B analogue.
double curve_b(const LambdaParams& p);

}  // namespace hadamard6
