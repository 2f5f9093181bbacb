#pragma once

#include "hadamard6/mat_core.hpp"
#include "hadamard6/param_blocks.hpp"

namespace hadamard6 {

/// omega = exp(2 pi i / 3) and Omega = diag(omega, omega^2).
Complex omega();
Mat2 omega_mat();

/// Fourier-family member
///   [ F2  Z1      Z2     ]
///   [ F2  w Z1    w^2 Z2 ]
///   [ F2  w^2 Z1  w Z2   ]
/// with row-type Z blocks.
Mat6 fourier(const UnimodularScalar& z1, const UnimodularScalar& z2);

/// Transposed-Fourier-family member
///   [ F2  F2      F2     ]
///   [ Z3  w Z3    w^2 Z3 ]
///   [ Z4  w^2 Z4  w Z4   ]
/// with column-type Z blocks.
Mat6 fourier_transposed(const UnimodularScalar& z3, const UnimodularScalar& z4);

/// One-parameter member equivalent to the generic D6 matrix:
/// rows (1 1 1 1 1 1), (1 -1 z -z i -i), (1 i -z z -1 -i), (1 -i i i -i -1),
/// (1 zc -i -1 -zc i), (1 -zc -1 -i zc i) with zc = conj(z).
Mat6 d6_member(const UnimodularScalar& z);

/// One-parameter subfamily living on the M_A degeneracy curve, with
/// z = e^{i psi}, z3 = z4 = (1 - i s)/(1 + i s), s = sqrt(1 + 2 cos psi),
/// for psi in [0, 2 pi / 3]. The sqrt(z3 z) entries use the principal branch.
Mat6 k6_subfamily_member(double psi, int epsilon_sign = +1);

}  // namespace hadamard6
