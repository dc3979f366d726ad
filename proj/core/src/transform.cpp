#include "mtensor/transform.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/LU>

#include "mtensor/error.hpp"

namespace mtensor {

Transform::Transform(Matrix m) : matrix_(std::move(m)) {
    const Index p = matrix_.rows();
    if (p <= 0 || matrix_.cols() != p) {
        throw DimensionMismatch("transform matrix must be square and non-empty, got " +
                                std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()));
    }
    if (!matrix_.allFinite()) throw InvalidArgument("transform matrix has non-finite entries");

    Eigen::PartialPivLU<Matrix> lu(matrix_);
    const auto pivots = lu.matrixLU().diagonal().cwiseAbs();
    const double max_pivot = pivots.maxCoeff();
    const double min_pivot = pivots.minCoeff();
    const double eps = std::numeric_limits<double>::epsilon();
    if (!(max_pivot > 0.0) || min_pivot < static_cast<double>(p) * eps * max_pivot) {
        throw SingularTransform("transform matrix is numerically singular (pivot ratio " +
                                std::to_string(max_pivot > 0.0 ? min_pivot / max_pivot : 0.0) + ")");
    }
    inverse_ = lu.inverse();

    const double defect = (matrix_ * inverse_ - Matrix::Identity(p, p)).norm();
    if (!(defect <= 1e-10 * matrix_.norm())) {
        throw SingularTransform("transform inverse check failed: ||M*Minv - I||_F = " + std::to_string(defect));
    }
}

Transform Transform::identity(Index p) { return Transform(Matrix::Identity(p, p)); }

Transform Transform::dft(Index p) {
    Matrix m(p, p);
    for (Index j = 0; j < p; ++j) {
        for (Index k = 0; k < p; ++k) {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(p);
            m(j, k) = std::polar(1.0, angle);
        }
    }
    return Transform(std::move(m));
}

Tensor3 mode3_product(const Tensor3& a, const Matrix& m) {
    if (m.rows() != a.depth() || m.cols() != a.depth()) {
        throw DimensionMismatch("mode3_product: tensor has " + std::to_string(a.depth()) +
                                " slices but matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
    }
    // Each column of the (mn x p) view is one contiguous frontal slice, so the
    // tube contraction is a single product with M^T.
    const Index mn = a.rows() * a.cols();
    Tensor3 out(a.rows(), a.cols(), a.depth());
    Eigen::Map<const Matrix> in_view(a.data().data(), mn, a.depth());
    Eigen::Map<Matrix> out_view(out.data().data(), mn, a.depth());
    out_view.noalias() = in_view * m.transpose();
    return out;
}

HatTensor to_hat(const Tensor3& a, const Transform& t) { return HatTensor(mode3_product(a, t.matrix())); }

Tensor3 from_hat(const HatTensor& a, const Transform& t) { return mode3_product(a.values(), t.inverse()); }

}  // namespace mtensor
