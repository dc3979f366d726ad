#include "mtensor/reference_problem.hpp"

namespace mtensor::reference {

namespace {

RealMatrix mat3(std::initializer_list<std::initializer_list<double>> rows) {
    RealMatrix out(3, 3);
    Index i = 0;
    for (const auto& r : rows) {
        Index j = 0;
        for (double v : r) out(i, j++) = v;
        ++i;
    }
    return out;
}

RealMatrix diag3(double a, double b, double c) { return RealMatrix(Eigen::Vector3d(a, b, c).asDiagonal()); }

}  // namespace

Transform transform() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = 2.0;
    return Transform(m);
}

Tensor3 a() {
    return Tensor3::from_real_slices({
        mat3({{2, -1, -1}, {-2, 7.0 / 2, -1.0 / 2}, {-5.0 / 2, -3.0 / 2, 7.0 / 2}}),
        mat3({{2, -2, 0}, {-3, 5, -2}, {-1, -2, 9}}),
    });
}

Tensor3 b() {
    return Tensor3::from_real_slices({
        mat3({{5.0 / 2, -1, 0}, {-1, 5.0 / 2, -1}, {-3.0 / 2, -2, 2}}),
        mat3({{5, -2, 0}, {-2, 5, -2}, {-3, -4, 4}}),
    });
}

Tensor3 c() {
    return Tensor3::from_real_slices({
        mat3({{1, 1, 1}, {0, 1, -1}, {2, -3, 0}}),
        mat3({{-1, -1, -1}, {0, 2, -1}, {0, -3, 0}}),
    });
}

Tensor3 p() {
    return Tensor3::from_real_slices({
        mat3({{1, 0, 0}, {1.0 / 2, 1, 0}, {5.0 / 4, 1.0 / 2, 1}}),
        mat3({{1.0 / 4, 0, 0}, {1.0 / 8, 1.0 / 4, 0}, {5.0 / 16, 1.0 / 8, 1.0 / 4}}),
    });
}

Tensor3 inverse_a_hat() {
    return Tensor3::from_real_slices({
        mat3({{23.0 / 6, 5.0 / 3, 4.0 / 3}, {11.0 / 4, 3.0 / 2, 1}, {47.0 / 12, 11.0 / 6, 5.0 / 3}}),
        mat3({{41.0 / 48, 3.0 / 8, 1.0 / 12}, {29.0 / 48, 3.0 / 8, 1.0 / 12}, {11.0 / 48, 1.0 / 8, 1.0 / 12}}),
    });
}

Tensor3 inverse_b_hat() {
    return Tensor3::from_real_slices({
        mat3({{3.0 / 4, 1.0 / 2, 1.0 / 4}, {7.0 / 8, 5.0 / 4, 5.0 / 8}, {23.0 / 16, 13.0 / 8, 21.0 / 16}}),
        mat3({{3.0 / 16, 1.0 / 8, 1.0 / 16}, {7.0 / 32, 5.0 / 16, 5.0 / 32}, {23.0 / 64, 13.0 / 32, 21.0 / 64}}),
    });
}

Tensor3 inverse_pa_hat() {
    return Tensor3::from_real_slices({
        mat3({{5.0 / 3, 1, 4.0 / 3}, {1, 1, 1}, {4.0 / 3, 1, 5.0 / 3}}),
        mat3({{7.0 / 6, 2.0 / 3, 1.0 / 6}, {2.0 / 3, 2.0 / 3, 1.0 / 6}, {1.0 / 6, 1.0 / 6, 1.0 / 6}}),
    });
}

Tensor3 inverse_bp_hat() {
    return Tensor3::from_real_slices({
        mat3({{3.0 / 4, 1.0 / 2, 1.0 / 4}, {1.0 / 2, 1, 1.0 / 2}, {1.0 / 4, 1.0 / 2, 3.0 / 4}}),
        mat3({{3.0 / 8, 1.0 / 4, 1.0 / 8}, {1.0 / 4, 1.0 / 2, 1.0 / 4}, {1.0 / 8, 1.0 / 4, 3.0 / 8}}),
    });
}

Tensor3 f1() { return Tensor3::from_real_slices({diag3(2, 7.0 / 2, 7.0 / 2), diag3(2, 5, 9)}); }

Tensor3 f2() { return Tensor3::from_real_slices({diag3(5.0 / 2, 5.0 / 2, 2), diag3(5, 5, 4)}); }

}  // namespace mtensor::reference
