#pragma once

#include "mtensor/tensor3.hpp"
#include "mtensor/transform.hpp"

/// The 3 x 3 x 2 preconditioning benchmark used for verification: exact
/// operands, M = diag(1, 2), the printed transform-domain inverses, and the
/// printed spectral radii of the four Jacobi splittings.
namespace mtensor::reference {

Transform transform();

Tensor3 a();
Tensor3 b();
Tensor3 c();
/// Lower-triangular preconditioner, used for both P1 and P2.
Tensor3 p();

/// Printed transform-domain slices of A^-1, B^-1, (P A)^-1 and (B P)^-1.
Tensor3 inverse_a_hat();
Tensor3 inverse_b_hat();
Tensor3 inverse_pa_hat();
Tensor3 inverse_bp_hat();

/// Printed diagonal splitting tensors F1 (of A) and F2 (of B).
Tensor3 f1();
Tensor3 f2();

/// Printed radii, four decimals.
inline constexpr double kRhoF1G1 = 0.9424;
inline constexpr double kRhoF2G2 = 0.8385;
inline constexpr double kRhoFp1Gp1 = 0.8792;
inline constexpr double kRhoFp2Gp2 = 0.7071;

}  // namespace mtensor::reference
