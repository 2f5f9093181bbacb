#pragma once

#include <utility>

#include "hadamard6/mat_core.hpp"

namespace hadamard6 {

/// Angle pair selecting the self-adjoint unitary Lambda; both in [0, pi).
struct LambdaParams {
    double theta;
    double phi;

    LambdaParams(double theta_, double phi_);  // rejects out-of-range values
};

/// The inner 2x2 blocks A and B. Always satisfies A + B = -F2 and
/// A A^dag = B B^dag = 2e (up to roundoff) when produced by ab_from_lambda.
struct ABPair {
    Mat2 a_mat;
    Mat2 b_mat;
};

/// Placement of the free scalar inside a Z block: Z1, Z2 carry z in the
/// second row, Z3, Z4 in the second column.
enum class ZBlockKind { RowType, ColType };

/// Complex scalar constrained to the unit circle.
struct UnimodularScalar {
    Complex value;

    explicit UnimodularScalar(Complex v, double eps = 1e-10);  // rejects | |v|-1 | >= eps
    static UnimodularScalar from_phase(double radians);
};

/// [[cos t, e^{i p} sin t], [e^{-i p} sin t, -cos t]]; self-adjoint, unitary,
/// det = -1 away from sin t = 0.
Mat2 lambda_matrix(const LambdaParams& p);

/// A = F2(-e/2 + i sqrt(3)/2 L), B = F2(-e/2 - i sqrt(3)/2 L) = -F2 - A.
/// Rejects L that is not self-adjoint unitary within eps.
ABPair ab_from_lambda(const Mat2& lam, double eps = 1e-10);

/// Closed form for (A11, A12):
///   A11 = -1/2 + i sqrt(3)/2 ( cos t + e^{-i p} sin t)
///   A12 = -1/2 + i sqrt(3)/2 (-cos t + e^{+i p} sin t)
/// The full A is [[A11, A12], [conj(A12), -conj(A11)]].
std::pair<Complex, Complex> a_entries(const LambdaParams& p);

/// RowType -> [[1,1],[z,-z]], ColType -> [[1,z],[1,-z]].
Mat2 z_block(const UnimodularScalar& z, ZBlockKind kind);

}  // namespace hadamard6
