#pragma once

#include <vector>

#include "mtensor/tensor3.hpp"
#include "mtensor/transform.hpp"

namespace mtensor {

/// Facewise product: result(:,:,k) = A(:,:,k) * B(:,:,k).
Tensor3 face_product(const Tensor3& a, const Tensor3& b);
HatTensor face_product(const HatTensor& a, const HatTensor& b);

/// A *_M B = ((A x_3 M) face (B x_3 M)) x_3 M^-1.
Tensor3 m_product(const Tensor3& a, const Tensor3& b, const Transform& t);

/// Conjugate transpose under *_M: the transform-domain slices are adjoints of those of A.
Tensor3 conj_transpose(const Tensor3& a, const Transform& t);

/// Tensor whose transform-domain slices are all I_m.
Tensor3 identity_tensor(Index m, const Transform& t);
Tensor3 zero_tensor(Index m, Index n, Index p);

/// Inverse under *_M, computed slice by slice in the transform domain.
/// Throws SingularSlice when a slice's reciprocal condition estimate drops
/// below 1e3 * eps.
Tensor3 inverse(const Tensor3& a, const Transform& t);
HatTensor inverse(const HatTensor& a);

/// Moore-Penrose inverse under *_M (n x m x p for an m x n x p input).
/// Singular values at or below noise * max(m,n) * eps * sigma_max of each
/// transform-domain slice are treated as zero. The Tensor3 overload uses
/// noise = t.condition(), since slices reached through M carry roundoff of
/// that size.
Tensor3 mp_inverse(const Tensor3& a, const Transform& t);
HatTensor mp_inverse(const HatTensor& a, double noise = 1.0);

/// A^k under *_M, k >= 0.
Tensor3 power(const Tensor3& a, int k, const Transform& t);

/// max_i ||A_hat(:,:,i)||_2.
double tubal_norm(const Tensor3& a, const Transform& t);

/// Numerical rank of every transform-domain slice, with the mp_inverse cutoff.
/// The tubal rank is the maximum.
std::vector<Index> slice_ranks(const Tensor3& a, const Transform& t);
Index tubal_rank(const Tensor3& a, const Transform& t);

/// max_i rho(A_hat(:,:,i)) via a dense complex Schur decomposition per slice.
double spectral_radius(const Tensor3& a, const Transform& t);
double spectral_radius(const HatTensor& a);

/// Frobenius norm of the original-domain entries.
double frobenius_norm(const Tensor3& a) noexcept;

struct StructuralPredicates {
    bool nonnegative = false;
    bool strictly_diag_dominant = false;
    bool hermitian_positive_definite = false;
};

/// Tolerances used by the transform-domain nonnegativity test.
inline constexpr double kNonnegRealTol = 1e-12;
inline constexpr double kNonnegImagTol = 1e-10;
inline constexpr double kHermitianTol = 1e-10;

bool is_nonnegative(const HatTensor& a) noexcept;
bool is_nonnegative(const Tensor3& a, const Transform& t);
bool is_strictly_diag_dominant(const HatTensor& a) noexcept;
bool is_hermitian_positive_definite(const HatTensor& a);

/// All three predicates evaluated on the transform-domain slices. Dominance and
/// HPD are false for non-square tensors.
StructuralPredicates structural_predicates(const Tensor3& a, const Transform& t);

// Facewise masks. They commute with x_3 M because the mode-3 product only mixes tubes.
Tensor3 diagonal_part(const Tensor3& a);
Tensor3 strictly_lower_part(const Tensor3& a);
Tensor3 strictly_upper_part(const Tensor3& a);

// Block tensors, assembled slice by slice.
Tensor3 hconcat(const Tensor3& b, const Tensor3& c);
Tensor3 vconcat(const Tensor3& b, const Tensor3& c);
/// [[B, C], [D, E]]
Tensor3 block2x2(const Tensor3& b, const Tensor3& c, const Tensor3& d, const Tensor3& e);
/// Sub-block of rows [row0, row0+rows) and columns [col0, col0+cols) of every slice.
Tensor3 sub_block(const Tensor3& a, Index row0, Index col0, Index rows, Index cols);

}  // namespace mtensor
