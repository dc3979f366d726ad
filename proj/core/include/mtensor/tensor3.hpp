#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace mtensor {

using Complex = std::complex<double>;
using Index = Eigen::Index;

/// Column-major dense complex matrix used for transforms and free-standing slices.
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using RealMatrix = Eigen::MatrixXd;

/// Row-major layout matching the in-memory frontal slices of a Tensor3.
using SliceMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using SliceView = Eigen::Map<SliceMatrix>;
using ConstSliceView = Eigen::Map<const SliceMatrix>;

/// Dense third-order complex tensor of shape m x n x p.
///
/// Entries are stored slice-major: the p frontal slices A(:,:,k) follow one
/// another, each stored row-major. Real-valued data simply carries zero
/// imaginary parts. Indices are zero-based.
class Tensor3 {
public:
    Tensor3() = default;

    /// Zero tensor. All dimensions must be positive.
    Tensor3(Index m, Index n, Index p);

    /// Builds a tensor from its frontal slices, which must all share one shape.
    static Tensor3 from_slices(std::span<const Matrix> slices);
    static Tensor3 from_slices(std::initializer_list<Matrix> slices);
    static Tensor3 from_real_slices(std::initializer_list<RealMatrix> slices);

    Index rows() const noexcept { return m_; }
    Index cols() const noexcept { return n_; }
    Index depth() const noexcept { return p_; }
    Index size() const noexcept { return m_ * n_ * p_; }
    bool empty() const noexcept { return data_.empty(); }
    bool is_square() const noexcept { return m_ == n_; }

    Complex& operator()(Index i, Index j, Index k) noexcept { return data_[offset(i, j, k)]; }
    const Complex& operator()(Index i, Index j, Index k) const noexcept { return data_[offset(i, j, k)]; }

    /// Frontal slice A(:,:,k) as a writable row-major view into the tensor storage.
    SliceView slice(Index k) noexcept { return SliceView(data_.data() + k * m_ * n_, m_, n_); }
    ConstSliceView slice(Index k) const noexcept {
        return ConstSliceView(data_.data() + k * m_ * n_, m_, n_);
    }

    std::span<Complex> data() noexcept { return data_; }
    std::span<const Complex> data() const noexcept { return data_; }

    /// True when every imaginary part has magnitude at most `tol`.
    bool is_real(double tol = 0.0) const noexcept;

    Tensor3& operator+=(const Tensor3& other);
    Tensor3& operator-=(const Tensor3& other);
    Tensor3& operator*=(Complex s) noexcept;

    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    friend Tensor3 operator*(Tensor3 a, Complex s) { return a *= s; }
    friend Tensor3 operator*(Complex s, Tensor3 a) { return a *= s; }
    friend Tensor3 operator-(Tensor3 a) { return a *= Complex(-1.0); }

    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    Index offset(Index i, Index j, Index k) const noexcept { return (k * m_ + i) * n_ + j; }
    void require_same_shape(const Tensor3& other, const char* op) const;

    Index m_ = 0;
    Index n_ = 0;
    Index p_ = 0;
    std::vector<Complex> data_;
};

bool same_shape(const Tensor3& a, const Tensor3& b) noexcept;

}  // namespace mtensor
