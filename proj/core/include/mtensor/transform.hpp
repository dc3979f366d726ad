#pragma once

#include "mtensor/tensor3.hpp"

namespace mtensor {

/// Invertible p x p matrix M defining the M-product, with its inverse cached.
///
/// The inverse comes from an LU factorization with partial pivoting. M is
/// rejected as singular when the smallest pivot magnitude falls below
/// p * eps * (largest pivot magnitude), or when the computed inverse fails
/// ||M * M^-1 - I||_F <= 1e-10 * ||M||_F.
class Transform {
public:
    explicit Transform(Matrix m);

    static Transform identity(Index p);
    /// Unnormalized DFT matrix, M(j,k) = exp(-2*pi*i*j*k/p). Dense, no FFT path.
    static Transform dft(Index p);

    Index order() const noexcept { return matrix_.rows(); }
    const Matrix& matrix() const noexcept { return matrix_; }
    const Matrix& inverse() const noexcept { return inverse_; }
    /// ||M||_F * ||M^-1||_F, an upper bound on the 2-norm condition number.
    double condition() const noexcept { return matrix_.norm() * inverse_.norm(); }

private:
    Matrix matrix_;
    Matrix inverse_;
};

/// A tensor living in the transform domain, i.e. A x_3 M.
class HatTensor {
public:
    HatTensor() = default;
    explicit HatTensor(Tensor3 values) : values_(std::move(values)) {}

    const Tensor3& values() const noexcept { return values_; }
    Tensor3& values() noexcept { return values_; }

    Index rows() const noexcept { return values_.rows(); }
    Index cols() const noexcept { return values_.cols(); }
    Index depth() const noexcept { return values_.depth(); }
    ConstSliceView slice(Index k) const noexcept { return values_.slice(k); }
    SliceView slice(Index k) noexcept { return values_.slice(k); }

private:
    Tensor3 values_;
};

/// (A x_3 M)(i,j,k) = sum_l A(i,j,l) * M(k,l).
Tensor3 mode3_product(const Tensor3& a, const Matrix& m);

HatTensor to_hat(const Tensor3& a, const Transform& t);
Tensor3 from_hat(const HatTensor& a, const Transform& t);

}  // namespace mtensor
