#include "hadamard6/moebius.hpp"

#include <cmath>

#include "hadamard6/errors.hpp"

namespace hadamard6 {

double MoebiusMap::modulus_gap() const { return std::norm(alpha) - std::norm(beta); }

MoebiusMap from_a(const LambdaParams& p) {
    const auto [a11, a12] = a_entries(p);
    return MoebiusMap{a12 * a12, a11 * a11};
}

MoebiusMap from_b(const LambdaParams& p) {
    const auto [a11, a12] = a_entries(p);
    const Complex b11 = -1.0 - a11;
    const Complex b12 = -1.0 - a12;
    return MoebiusMap{b12 * b12, b11 * b11};
}

namespace {

void require_usable(const MoebiusMap& m, const Tolerance& tol) {
    if (std::abs(m.modulus_gap()) <= tol.eps_scalar)
        throw Error(ErrorKind::DegenerateMap, "|alpha| = |beta|; map collapses the circle");
}

void require_unimodular(Complex z, const Tolerance& tol) {
    if (!(std::abs(std::abs(z) - 1.0) < tol.eps_unimodular))
        throw Error(ErrorKind::OutOfRange, "argument is not on the unit circle");
}

Complex quotient(Complex num, Complex den, const Tolerance& tol) {
    if (std::abs(den) <= tol.eps_scalar)
        throw Error(ErrorKind::NearPole, "Moebius denominator vanishes");
    return num / den;
}

}  // namespace

Complex apply(const MoebiusMap& m, Complex z, const Tolerance& tol) {
    require_usable(m, tol);
    require_unimodular(z, tol);
    return quotient(m.alpha * z - m.beta, std::conj(m.beta) * z - std::conj(m.alpha), tol);
}

Complex apply_inverse(const MoebiusMap& m, Complex w, const Tolerance& tol) {
    require_usable(m, tol);
    require_unimodular(w, tol);
    return quotient(std::conj(m.alpha) * w - m.beta, std::conj(m.beta) * w - m.alpha, tol);
}

DegeneracyInfo degeneracy_info(const MoebiusMap& m, double eps) {
    DegeneracyInfo info;
    info.degenerate = std::abs(m.modulus_gap()) <= eps;
    if (info.degenerate && std::abs(m.beta) > 0.0) {
        const Complex bconj = std::conj(m.beta);
        info.image = m.alpha / bconj;
        info.preimage = std::conj(m.alpha) / bconj;
    }
    return info;
}

double commutation_defect(const LambdaParams& p, Complex z, const Tolerance& tol) {
    const MoebiusMap ma = from_a(p);
    const MoebiusMap mb = from_b(p);
    const Complex zsq = z * z;
    const Complex via_b = apply_inverse(mb, apply(ma, zsq, tol), tol);
    const Complex via_a = apply_inverse(ma, apply(mb, zsq, tol), tol);
    return std::abs(via_b - via_a);
}

double curve_a(const LambdaParams& p) {
    return std::sin(p.theta) *
           (std::sin(p.phi) - std::sqrt(3.0) * std::cos(p.theta) * std::cos(p.phi));
}

double curve_b(const LambdaParams& p) {
    return std::sin(p.theta) *
           (std::sin(p.phi) + std::sqrt(3.0) * std::cos(p.theta) * std::cos(p.phi));
}

}  // namespace hadamard6
