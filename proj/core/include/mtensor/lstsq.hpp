#pragma once

#include "mtensor/tensor3.hpp"
#include "mtensor/transform.hpp"

namespace mtensor {

struct RegularizationParams {
    double lambda = 1e-2;
    double mu = 1e-2;
};

/// Throws InvalidArgument unless lambda > 0 and mu > 0.
void validate(const RegularizationParams& reg);

/// Block form of A1 *_M Y + Y *_M B1 = C1:
///   [A1 I] *_M diag(Y, Y) *_M [I; B1] = C1.
struct SylvesterEmbedding {
    Tensor3 a;  // m x 2m x p
    Tensor3 b;  // 2n x n x p
    Tensor3 c;  // m x n x p

    /// diag(Y, Y), the block unknown carrying Y.
    Tensor3 lift(const Tensor3& y) const;
};

SylvesterEmbedding sylvester_embed(const Tensor3& a1, const Tensor3& b1, const Tensor3& c1, const Transform& t);

/// Minimum-norm least-squares Y for the embedded system, with the block unknown
/// restricted to the structure diag(Y, Y). Each transform-domain slice is one dense
/// least-squares problem of size mn x mn.
Tensor3 sylvester_solve(const SylvesterEmbedding& e, const Transform& t);
Tensor3 sylvester_solve(const Tensor3& a1, const Tensor3& b1, const Tensor3& c1, const Transform& t);

/// ||A *_M A^+ *_M C *_M B^+ *_M B - C||_F <= 1e-9 * max(1, ||C||_F).
bool is_consistent(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Transform& t);

/// A^+ C B^+ + Z - A^+ A Z B B^+ (all products under *_M), using the MP inverse
/// as the inner inverse. Throws InconsistentSystem when the equation has no solution.
Tensor3 general_solution(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Tensor3& z,
                         const Transform& t);

/// A^+ *_M C *_M B^+.
Tensor3 min_norm_lstsq(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Transform& t);

/// (A^* A + lambda I)^-1 A^* C B^* (B B^* + mu I)^-1, solved per transform-domain
/// slice. Each shifted operator is factored through QR of [A; sqrt(lambda) I], whose
/// triangular factor is its Cholesky factor.
Tensor3 tikhonov_solve(const Tensor3& a, const Tensor3& b, const Tensor3& c, const RegularizationParams& reg,
                       const Transform& t);

}  // namespace mtensor
