#include "mtensor/lstsq.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/QR>

#include "mtensor/error.hpp"
#include "mtensor/tensor_ops.hpp"

namespace mtensor {

namespace {

void require_sandwich(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Transform& t, const char* op) {
    if (a.depth() != t.order() || b.depth() != t.order() || c.depth() != t.order()) {
        throw DimensionMismatch(std::string(op) + ": transform order mismatch");
    }
    if (c.rows() != a.rows() || c.cols() != b.cols()) {
        throw DimensionMismatch(std::string(op) + ": C must have A's rows and B's columns");
    }
}

HatTensor sandwich(const HatTensor& l, const HatTensor& mid, const HatTensor& r) {
    return face_product(face_product(l, mid), r);
}

// (A^* A + lambda I)^-1 A^* R via QR of [A; sqrt(lambda) I]. The triangular factor
// is the Cholesky factor of the shifted operator, obtained without forming A^* A.
Matrix ridge_solve(const Matrix& a, const Matrix& r, double lambda, Index slice) {
    const Index n = a.cols();
    Matrix stacked(a.rows() + n, n);
    stacked << a, std::sqrt(lambda) * Matrix::Identity(n, n);
    Matrix rhs = Matrix::Zero(a.rows() + n, r.cols());
    rhs.topRows(a.rows()) = r;
    const Eigen::HouseholderQR<Matrix> qr(stacked);
    const auto diag = qr.matrixQR().diagonal().cwiseAbs();
    if (n > 0 && !(diag.minCoeff() > 0.0)) throw SingularSlice(static_cast<std::size_t>(slice));
    return qr.solve(rhs);
}

}  // namespace

void validate(const RegularizationParams& reg) {
    if (!(reg.lambda > 0.0) || !std::isfinite(reg.lambda)) {
        throw InvalidArgument("lambda must be positive, got " + std::to_string(reg.lambda));
    }
    if (!(reg.mu > 0.0) || !std::isfinite(reg.mu)) {
        throw InvalidArgument("mu must be positive, got " + std::to_string(reg.mu));
    }
}

Tensor3 SylvesterEmbedding::lift(const Tensor3& y) const {
    const Tensor3 zero(y.rows(), y.cols(), y.depth());
    return block2x2(y, zero, zero, y);
}

SylvesterEmbedding sylvester_embed(const Tensor3& a1, const Tensor3& b1, const Tensor3& c1, const Transform& t) {
    if (!a1.is_square() || !b1.is_square()) throw DimensionMismatch("sylvester_embed: A1 and B1 must be square");
    if (c1.rows() != a1.rows() || c1.cols() != b1.rows() || a1.depth() != b1.depth() ||
        c1.depth() != a1.depth() || a1.depth() != t.order()) {
        throw DimensionMismatch("sylvester_embed: C1 must be m x n x p for A1 m x m x p and B1 n x n x p");
    }
    return {hconcat(a1, identity_tensor(a1.rows(), t)), vconcat(identity_tensor(b1.rows(), t), b1), c1};
}

Tensor3 sylvester_solve(const SylvesterEmbedding& e, const Transform& t) {
    const Index m = e.a.rows();
    const Index n = e.b.cols();
    if (e.a.cols() != 2 * m || e.b.rows() != 2 * n) throw DimensionMismatch("sylvester_solve: not an embedding");
    const HatTensor ah = to_hat(e.a, t);
    const HatTensor bh = to_hat(e.b, t);
    const HatTensor ch = to_hat(e.c, t);

    // Column (i,j) of the operator is A Z B for the unit Y(i,j), which sits
    // at Z(i,j) and Z(m+i, n+j) of the lifted unknown.
    HatTensor yh(Tensor3(m, n, t.order()));
    for (Index k = 0; k < t.order(); ++k) {
        const Matrix a = ah.slice(k);
        const Matrix b = bh.slice(k);
        Matrix op = Matrix::Zero(m * n, m * n);
        for (Index j = 0; j < n; ++j) {
            for (Index i = 0; i < m; ++i) {
                const Matrix contrib = a.col(i) * b.row(j) + a.col(m + i) * b.row(n + j);
                op.col(j * m + i) = Eigen::Map<const Eigen::VectorXcd>(contrib.data(), m * n);
            }
        }
        const Matrix c = ch.slice(k);
        const Eigen::VectorXcd rhs = Eigen::Map<const Eigen::VectorXcd>(c.data(), m * n);
        const Eigen::VectorXcd y = op.completeOrthogonalDecomposition().solve(rhs);
        yh.slice(k) = Eigen::Map<const Matrix>(y.data(), m, n);
    }
    return from_hat(yh, t);
}

Tensor3 sylvester_solve(const Tensor3& a1, const Tensor3& b1, const Tensor3& c1, const Transform& t) {
    return sylvester_solve(sylvester_embed(a1, b1, c1, t), t);
}

bool is_consistent(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Transform& t) {
    require_sandwich(a, b, c, t, "is_consistent");
    const HatTensor ah = to_hat(a, t);
    const HatTensor bh = to_hat(b, t);
    const HatTensor proj =
        sandwich(face_product(ah, mp_inverse(ah, t.condition())), to_hat(c, t),
                 face_product(mp_inverse(bh, t.condition()), bh));
    const double defect = frobenius_norm(from_hat(proj, t) - c);
    return defect <= 1e-9 * std::max(1.0, frobenius_norm(c));
}

Tensor3 general_solution(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Tensor3& z,
                         const Transform& t) {
    require_sandwich(a, b, c, t, "general_solution");
    if (z.rows() != a.cols() || z.cols() != b.rows() || z.depth() != t.order()) {
        throw DimensionMismatch("general_solution: Z must be k x s x p for A m x k x p and B s x n x p");
    }
    if (!is_consistent(a, b, c, t)) throw InconsistentSystem("general_solution: A *_M X *_M B = C has no solution");
    const HatTensor ah = to_hat(a, t);
    const HatTensor bh = to_hat(b, t);
    const HatTensor a_pinv = mp_inverse(ah, t.condition());
    const HatTensor b_pinv = mp_inverse(bh, t.condition());
    const HatTensor zh = to_hat(z, t);
    Tensor3 out = sandwich(a_pinv, to_hat(c, t), b_pinv).values();
    out += zh.values();
    out -= sandwich(face_product(a_pinv, ah), zh, face_product(bh, b_pinv)).values();
    return from_hat(HatTensor(std::move(out)), t);
}

Tensor3 min_norm_lstsq(const Tensor3& a, const Tensor3& b, const Tensor3& c, const Transform& t) {
    require_sandwich(a, b, c, t, "min_norm_lstsq");
    const double noise = t.condition();
    return from_hat(sandwich(mp_inverse(to_hat(a, t), noise), to_hat(c, t), mp_inverse(to_hat(b, t), noise)), t);
}

Tensor3 tikhonov_solve(const Tensor3& a, const Tensor3& b, const Tensor3& c, const RegularizationParams& reg,
                       const Transform& t) {
    validate(reg);
    require_sandwich(a, b, c, t, "tikhonov_solve");
    const HatTensor ah = to_hat(a, t);
    const HatTensor bh = to_hat(b, t);
    const HatTensor ch = to_hat(c, t);
    HatTensor xh(Tensor3(a.cols(), b.rows(), t.order()));
    for (Index k = 0; k < t.order(); ++k) {
        const Matrix left = ridge_solve(ah.slice(k), ch.slice(k), reg.lambda, k);
        // L B^* (B B^* + mu I)^-1 = (ridge(B^*, L^*))^*
        xh.slice(k) = ridge_solve(Matrix(bh.slice(k)).adjoint(), left.adjoint(), reg.mu, k).adjoint();
    }
    return from_hat(xh, t);
}

}  // namespace mtensor
